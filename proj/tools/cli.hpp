#ifndef ELGR_TOOLS_CLI_HPP
#define ELGR_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace elgr::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace elgr::cli

#endif  // ELGR_TOOLS_CLI_HPP
