// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gxrepair/datagraph.hpp"
#include "gxrepair/gxpath.hpp"

namespace gxrepair {

enum class RepairMode { Subset, Superset };

// Bounds the repair search. Superset repairs are looked for among graphs
// over the existing nodes plus at most `max_new_nodes` fresh ones, with every
// edge label of the alphabet allowed on every pair and fresh data values
// drawn from `data_domain` (default: values in the graph plus constants in
// the constraints).
struct SearchBudget {
    std::size_t max_new_nodes = 0;
    std::optional<std::vector<DataValue>> data_domain;
    std::optional<std::size_t> max_candidate_edges;
    // Superset enumeration stops after this many added elements.
    std::optional<std::size_t> max_repair_size;
    // Candidate graphs examined before BudgetExceeded is thrown.
    std::uint64_t max_explored = std::uint64_t{1} << 22;
    unsigned threads = 1;
};

enum class Maximality { Verified, OneStepLocal };

enum class RepairStatus {
    Repaired,             // a repair was found
    Trivial,              // the repair is the empty data-graph
    None,                 // reserved: no repair exists at all
    UnknownBeyondBudget,  // nothing found inside the candidate space
};

struct RepairResult {
    std::optional<DataGraph> repair;
    RepairStatus status = RepairStatus::UnknownBeyondBudget;
    Maximality maximality = Maximality::Verified;
    std::uint64_t explored = 0;
};

[[nodiscard]] const char* to_string(RepairStatus s);
[[nodiscard]] const char* to_string(Maximality m);

// ---------------------------------------------------------------------------
// Subset repairs

// All ⊆-repairs, largest first, equal sizes in DataGraph order; at most
// `limit` of them. Throws BudgetExceeded.
[[nodiscard]] std::vector<DataGraph> subset_repairs(const DataGraph& g, const ConstraintSet& r,
                                                    std::optional<std::size_t> limit = std::nullopt,
                                                    const SearchBudget& budget = {});

// A ⊆-repair that no other ⊆-repair is preferred to. Weight: maximum
// weight. Multiset: optimal for a fixed linear extension of the symbol order
// (hence maximal for the order itself). No preference: most elements. Ties go
// to the least graph in DataGraph order.
[[nodiscard]] RepairResult find_preferred_subset_repair(const DataGraph& g, const ConstraintSet& r,
                                                        const PreferenceCriterion& crit,
                                                        const SearchBudget& budget = {});

// Every preferred ⊆-repair (all maximal elements under the criterion).
[[nodiscard]] std::vector<DataGraph> all_preferred_subset_repairs(const DataGraph& g, const ConstraintSet& r,
                                                                  const PreferenceCriterion& crit,
                                                                  const SearchBudget& budget = {});

// Whether some preferred ⊆-repair differs from the empty data-graph. Does not
// depend on the criterion: a non-empty repair exists iff a non-empty
// consistent subgraph exists.
[[nodiscard]] bool has_nontrivial_preferred_subset_repair(const DataGraph& g, const ConstraintSet& r,
                                                          const PreferenceCriterion& crit,
                                                          const SearchBudget& budget = {});

// Unique ⊆-repair for positive node constraints by iterated deletion of
// violating nodes. Requires is_positive_node_set(r).
[[nodiscard]] DataGraph positive_node_subset_repair(const DataGraph& g, const ConstraintSet& r);

// Checks that no consistent graph lies strictly between `repair` and `g`:
// exactly when at most `exact_limit` elements were deleted, otherwise by
// restoring single elements. nullopt when `repair` is not maximal (or not a
// consistent subgraph of g).
[[nodiscard]] std::optional<Maximality> verify_subset_maximality(const DataGraph& g, const DataGraph& repair,
                                                                 const ConstraintSet& r,
                                                                 std::size_t exact_limit = 20);

// ---------------------------------------------------------------------------
// Superset repairs

// Every ⊇-repair inside the candidate space, fewest additions first, equal
// sizes in DataGraph order; at most `limit`. An empty result means nothing
// was found within the budget, not that no repair exists.
[[nodiscard]] std::vector<DataGraph> superset_repairs(const DataGraph& g, const ConstraintSet& r,
                                                      const SearchBudget& budget = {},
                                                      std::optional<std::size_t> limit = std::nullopt);

// Weight: minimum weight. Multiset: optimal for a fixed linear extension of
// the symbol order. No preference: fewest elements. Ties go to the least
// graph in DataGraph order.
[[nodiscard]] RepairResult find_preferred_superset_repair(const DataGraph& g, const ConstraintSet& r,
                                                          const PreferenceCriterion& crit,
                                                          const SearchBudget& budget = {});

[[nodiscard]] std::vector<DataGraph> all_preferred_superset_repairs(const DataGraph& g, const ConstraintSet& r,
                                                                    const PreferenceCriterion& crit,
                                                                    const SearchBudget& budget = {});

// Some w-preferred ⊇-repair inside the candidate space has weight <= k.
[[nodiscard]] bool decide_pi_w(const DataGraph& g, const ConstraintSet& r, const WeightSpec& w, std::uint64_t k,
                               const SearchBudget& budget = {});

// Some mset-preferred ⊇-repair inside the candidate space has at most k edges
// labeled `label`.
[[nodiscard]] bool decide_pi_mset(const DataGraph& g, const ConstraintSet& r, const SymbolOrder& ord,
                                  const EdgeLabel& label, std::uint64_t k, const SearchBudget& budget = {});

// ---------------------------------------------------------------------------
// Exhaustive enumeration over the whole candidate space (no pruning beyond
// the definition). Used for cross-checking; exponential by design.

[[nodiscard]] std::vector<DataGraph> brute_force_subset_repairs(const DataGraph& g, const ConstraintSet& r,
                                                                const SearchBudget& budget = {});
[[nodiscard]] std::vector<DataGraph> brute_force_superset_repairs(const DataGraph& g, const ConstraintSet& r,
                                                                  const SearchBudget& budget = {});

// Picks the preferred repair from an explicit list using the same ordering
// and tie-break as the search.
[[nodiscard]] std::optional<DataGraph> select_preferred(const std::vector<DataGraph>& repairs,
                                                        const PreferenceCriterion& crit, RepairMode mode);

}  // namespace gxrepair
