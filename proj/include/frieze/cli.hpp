#pragma once

#include <iosfwd>

namespace frieze {

// Full command-line frontend. Returns the process exit code: 0 on success,
// 1 on usage/parse errors, 2 on domain errors and failed validations (the
// error name goes to err).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace frieze
