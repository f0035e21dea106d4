#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nicx {

// Full command-line driver; args exclude the program name.  Returns the
// process exit code: 0 = success, 1 = a verification failed, 2 = invalid or
// infeasible request.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nicx
