#pragma once

#include <ostream>
#include <string>
#include <vector>

// Batch front-end. run() is the whole CLI behind a testable seam: args are
// argv[1..] in natural order, output lands on the given streams.
// Exit codes: 0 success/agreement, 1 disagreement or invalid input,
// 2 internal error.

namespace kcr::cli {

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace kcr::cli
