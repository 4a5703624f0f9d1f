#ifndef GGL_CLI_HPP_
#define GGL_CLI_HPP_

// Command-line front end: table, check, structure, verify, count, demo.

#include <ostream>
#include <string>
#include <vector>

namespace ggl::cli {

  inline constexpr int kExitOk     = 0;
  inline constexpr int kExitFailed = 1;
  inline constexpr int kExitUsage  = 2;
  inline constexpr int kExitBudget = 3;

  //! args excludes the program name.
  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);
  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

  //! Splits "T,U" and reads each side with the carrier's parameter grammar.
  struct PairText {
    std::string t;
    std::string u;
  };
  PairText split_pair(std::string const& text);

}  // namespace ggl::cli

#endif  // GGL_CLI_HPP_
