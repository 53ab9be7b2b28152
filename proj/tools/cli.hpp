// Command-line front end. Exit codes: 0 success, 1 domain error, 2 usage
// error.

#ifndef TWIN_TOOLS_CLI_HPP_
#define TWIN_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "twin/automorphisms.hpp"

namespace twin::cli {

  // Automorphism literal: factors joined by '*', each one of psi, tau,
  // kappa, id or inner:<word>, optionally followed by ^k. "A*B" applies A
  // first, then B.
  TwinAut parse_automorphism(std::string_view text, GroupContext const& ctx);

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace twin::cli

#endif  // TWIN_TOOLS_CLI_HPP_
