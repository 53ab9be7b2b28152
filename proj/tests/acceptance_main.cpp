#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include "twin/verify/acceptance.hpp"

int main(int argc, char** argv) {
  twin::acceptance::Options options;
  for (int i = 1; i < argc; ++i) {
    std::string const arg = argv[i];
    if (arg == "--max-n" && i + 1 < argc) {
      options.max_n = std::atoi(argv[++i]);
    } else if (arg == "--seed" && i + 1 < argc) {
      options.seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: acceptance [--max-n N] [--seed S]\n";
      return 2;
    }
  }
  auto const results = twin::acceptance::run_all(options, std::cout);
  auto const passed  = std::count_if(results.begin(), results.end(),
                                     [](auto const& r) { return r.passed; });
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return passed == static_cast<long>(results.size()) ? 0 : 1;
}
