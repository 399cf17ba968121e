// Command-line front end shared by the `pingpong` tool and the tests.

#ifndef PINGPONG_CLI_HPP_
#define PINGPONG_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace pingpong::cli {

  //! Exit codes.
  inline constexpr int exit_pass   = 0;
  inline constexpr int exit_failed = 1;
  inline constexpr int exit_input  = 2;

  //! Runs one command. `args` excludes the program name.
  int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pingpong::cli

#endif  // PINGPONG_CLI_HPP_
