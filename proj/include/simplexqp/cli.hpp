// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace simplexqp::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kNotConverged = 2 };

/// Entry point of the `simplexqp` tool. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simplexqp::cli
