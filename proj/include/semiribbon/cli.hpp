#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semiribbon::cli {

// Exit codes: 0 ok, 1 invalid input or usage, 2 precondition, 3 contradiction.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semiribbon::cli
