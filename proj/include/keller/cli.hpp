#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace keller {

// Full command-line surface; args[0] is the program name. Exit codes:
// 0 invertible / verified / success, 1 usage or input error,
// 2 not invertible within the bound (or failed verification),
// 3 constant-Jacobian violation.
int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace keller
