#ifndef O2I_CLI_HPP
#define O2I_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace o2i {

/// Batch front end: `o2i predict|coverage|fit|compare|budget ...`.
/// args excludes the program name. Returns the process exit code:
/// 0 success, 1 runtime model error, 2 usage/parse error, 3 geometry error
/// (terminal outside every building).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace o2i

#endif
