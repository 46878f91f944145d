#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewcoh {

// Exit status: 0 success or a positive answer, 1 a clean negative answer,
// 2 malformed input. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewcoh
