// The end-to-end acceptance criteria, runnable from the test suite and from
// `twin verify-all`.

#ifndef TWIN_VERIFY_ACCEPTANCE_HPP_
#define TWIN_VERIFY_ACCEPTANCE_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace twin::acceptance {

  struct Options {
    // When positive, caps the largest n used by every criterion.
    int           max_n = 0;
    std::uint64_t seed  = 20200601;
  };

  struct Result {
    int         id;
    std::string name;
    bool        passed;
    std::string detail;
    double      seconds;
    double      time_limit;
  };

  struct Criterion {
    int                                 id;
    std::string                         name;
    double                              time_limit;
    std::function<std::string(Options const&, bool&)> run;
  };

  std::vector<Criterion> criteria();

  Result run_one(Criterion const& c, Options const& options);

  // Runs every criterion, printing one line per criterion as it finishes.
  std::vector<Result> run_all(Options const& options, std::ostream& out);

  std::string format_result(Result const& r);

}  // namespace twin::acceptance

#endif  // TWIN_VERIFY_ACCEPTANCE_HPP_
