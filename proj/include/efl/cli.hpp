#pragma once

#include <iosfwd>

namespace efl {

/// Entry point of the `efl` tool. Reports go to `out`, usage and progress to `err`.
/// Returns 0 when every asserted contract holds, 1 on a contract violation, 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace efl
