// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#include "gxrepair/consistency.hpp"

namespace gxrepair {

namespace {

// Calls `sink` for each violation in deterministic order; stops when it
// returns false.
template <typename Sink>
void scan(const IndexedGraph& g, const ConstraintSet& r, Sink&& sink) {
    Evaluator ev(g);
    const Eigen::Index n = g.size();
    for (std::size_t k = 0; k < r.size(); ++k) {
        const auto& c = r.items()[k];
        if (const auto* phi = std::get_if<NodePtr>(&c.expr)) {
            const NodeMask m = ev.node(**phi);
            for (Eigen::Index v = 0; v < n; ++v) {
                if (!m(v) && !sink(IndexedViolation{k, v, v})) {
                    return;
                }
            }
        } else {
            const Relation rel = ev.path(*std::get<PathPtr>(c.expr));
            for (Eigen::Index u = 0; u < n; ++u) {
                for (Eigen::Index w = 0; w < n; ++w) {
                    if (!rel(u, w) && !sink(IndexedViolation{k, u, w})) {
                        return;
                    }
                }
            }
        }
    }
}

}  // namespace

bool is_consistent(const IndexedGraph& g, const ConstraintSet& r) { return !first_violation(g, r).has_value(); }

std::optional<IndexedViolation> first_violation(const IndexedGraph& g, const ConstraintSet& r) {
    std::optional<IndexedViolation> out;
    scan(g, r, [&](const IndexedViolation& v) {
        out = v;
        return false;
    });
    return out;
}

std::vector<IndexedViolation> all_violations(const IndexedGraph& g, const ConstraintSet& r) {
    std::vector<IndexedViolation> out;
    scan(g, r, [&](const IndexedViolation& v) {
        out.push_back(v);
        return true;
    });
    return out;
}

Verdict check(const DataGraph& g, const ConstraintSet& r, bool first_only) {
    const IndexedGraph ig(g);
    Verdict verdict;
    scan(ig, r, [&](const IndexedViolation& v) {
        Violation out{v.constraint, {ig.ids()[v.from]}};
        if (r.items()[v.constraint].sort() == Sort::Path) {
            out.witness.push_back(ig.ids()[v.to]);
        }
        verdict.violations.push_back(std::move(out));
        return !first_only;
    });
    verdict.consistent = verdict.violations.empty();
    return verdict;
}

}  // namespace gxrepair
