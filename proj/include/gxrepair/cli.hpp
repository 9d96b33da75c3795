// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gxrepair::cli {

// Runs one command (`args` excludes the program name). JSON goes to `out`,
// diagnostics to `err`. Returns the process exit code: 0 success (or a
// consistent graph for `check`), 1 inconsistent graph, 2 any error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gxrepair::cli
