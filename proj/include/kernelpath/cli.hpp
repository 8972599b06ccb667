#ifndef KERNELPATH_CLI_HPP
#define KERNELPATH_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace kernelpath {

// Runs the command line given as argv-style arguments (program name not
// included). Returns the process exit code:
//   0  success
//   1  command-line usage error
//   2  model, automaton or configuration error
//   3  verification mismatch
//   4  any other domain error (degenerate kernel, empty class, ...)
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kernelpath

#endif
