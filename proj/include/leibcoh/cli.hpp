#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace leibcoh {

// Front-end dispatch. args excludes the program name. Reports are printed
// to out as JSON, diagnostics and timing to err. Returns the process exit
// code: 0 success, 1 computation precondition failure, 2 input error.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

} // namespace leibcoh
