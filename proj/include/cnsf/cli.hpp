#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cnsf::cli {

// Runs one command; args excludes the program name.  Returns 0 on
// success/verified, 1 on verification failure, 2 on input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cnsf::cli
