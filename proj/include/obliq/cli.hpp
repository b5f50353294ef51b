#pragma once

#include <ostream>

namespace obliq {

/// Entry point of the `obliq` tool. Exit codes: 0 success, 1 usage or input
/// error, 2 analytic failure (not a frame, target not met).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace obliq
