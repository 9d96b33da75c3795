// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gxrepair/datagraph.hpp"
#include "gxrepair/eval.hpp"
#include "gxrepair/gxpath.hpp"

namespace gxrepair {

// A node (node constraint) or an ordered pair (path constraint) at which a
// constraint fails.
struct Violation {
    std::size_t constraint;
    std::vector<NodeId> witness;

    bool operator==(const Violation&) const = default;
};

struct Verdict {
    bool consistent = true;
    std::vector<Violation> violations;
};

// Violations are listed by constraint index, then by witness in NodeId order.
// With `first_only` the scan stops at the first violation found.
[[nodiscard]] Verdict check(const DataGraph& g, const ConstraintSet& r, bool first_only = false);

// Index-level variants used by the repair search.
struct IndexedViolation {
    std::size_t constraint;
    Eigen::Index from;
    Eigen::Index to;  // equals `from` for node constraints
};

[[nodiscard]] bool is_consistent(const IndexedGraph& g, const ConstraintSet& r);
[[nodiscard]] std::optional<IndexedViolation> first_violation(const IndexedGraph& g, const ConstraintSet& r);
[[nodiscard]] std::vector<IndexedViolation> all_violations(const IndexedGraph& g, const ConstraintSet& r);

}  // namespace gxrepair
