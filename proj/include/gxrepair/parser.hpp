// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "gxrepair/gxpath.hpp"

namespace gxrepair {

// Parse a path / node expression in the concrete syntax (see docs/grammar.md).
// Implication sugar is desugared on the fly. Throws ParseError.
[[nodiscard]] PathPtr parse_path(std::string_view text);
[[nodiscard]] NodePtr parse_node(std::string_view text);

// Constraint file: one `node:` or `path:` prefixed expression per line, blank
// lines and `#` comments ignored. Throws ParseError with the file position.
[[nodiscard]] ConstraintSet parse_constraints(std::string_view text);

}  // namespace gxrepair
