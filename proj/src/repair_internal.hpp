// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "gxrepair/consistency.hpp"
#include "gxrepair/eval.hpp"
#include "gxrepair/repair.hpp"

namespace gxrepair::detail {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// Lexicographically compared cost vector; all vectors of one search have the
// same length.
using Cost = std::vector<std::uint64_t>;

// Throws WeightOverflow.
void add_to(Cost& acc, const Cost& x);
void sub_from(Cost& acc, const Cost& x);
[[nodiscard]] bool is_zero(const Cost& c);

// Symbols ranked greatest first: declared names in the order's linear
// extension, then undeclared names alphabetically; equal names by kind. Only
// depends on the order and the names themselves, so restricting the symbol
// set never reorders the rest.
[[nodiscard]] std::vector<Symbol> ranked_symbols(const SymbolOrder& ord, const std::set<Symbol>& symbols);

// Maps an element (edge label or node data value) to its cost vector.
// Weight: one slot. Multiset: one slot per ranked symbol. No preference:
// one slot, every element costs 1.
class CostModel {
  public:
    CostModel(const PreferenceCriterion& crit, const std::set<Symbol>& universe);
    static CostModel unit() { return CostModel(NoPreference{}, {}); }

    [[nodiscard]] Cost zero() const { return Cost(slots_, 0); }
    [[nodiscard]] Cost edge(const EdgeLabel& label) const { return of(Symbol{SymbolKind::EdgeLabel, label}); }
    [[nodiscard]] Cost node(const DataValue& value) const { return of(Symbol{SymbolKind::DataValue, value}); }
    [[nodiscard]] std::size_t slots() const { return slots_; }

  private:
    [[nodiscard]] Cost of(const Symbol& s) const;

    PreferenceCriterion crit_;
    std::size_t slots_ = 1;
    std::map<Symbol, std::size_t> slot_;
};

[[nodiscard]] std::set<Symbol> symbols_of(const DataGraph& g);

// Counts consistency checks against the budget.
class Counter {
  public:
    explicit Counter(std::uint64_t cap) : cap_(cap) {}
    void tick();
    // Search-tree nodes are capped separately and more generously.
    void step();
    [[nodiscard]] std::uint64_t explored() const { return explored_; }

  private:
    std::uint64_t cap_;
    std::uint64_t explored_ = 0;
    std::uint64_t steps_ = 0;
};

// ---------------------------------------------------------------------------

// The subgraphs of g, each represented by its removed nodes and removed edges
// (edges incident to a removed node always count as removed).
class SubsetSpace {
  public:
    struct IdxEdge {
        std::size_t from;
        std::size_t to;
        EdgeLabel label;
    };

    explicit SubsetSpace(const DataGraph& g);

    [[nodiscard]] std::size_t node_count() const { return ids_.size(); }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
    [[nodiscard]] const std::vector<IdxEdge>& edges() const { return edges_; }
    [[nodiscard]] const std::vector<std::size_t>& incident(std::size_t v) const { return incident_[v]; }
    [[nodiscard]] const DataValue& data(std::size_t v) const { return data_[v]; }

    [[nodiscard]] IndexedGraph build(const Bits& removed_nodes, const Bits& removed_edges) const;
    [[nodiscard]] DataGraph to_graph(const Bits& removed_nodes, const Bits& removed_edges) const;

  private:
    std::vector<NodeId> ids_;
    std::vector<DataValue> data_;
    std::vector<IdxEdge> edges_;
    std::vector<std::vector<std::size_t>> incident_;
};

// Removal set in canonical form: bits 0..n-1 nodes, n..n+m-1 edges.
[[nodiscard]] Bits removal_key(const Bits& removed_nodes, const Bits& removed_edges);

// Candidate additions: fresh nodes (slot, data value) and missing edge
// triples over base nodes plus fresh slots.
class SupersetSpace {
  public:
    struct Candidate {
        bool is_node = false;
        std::size_t slot = 0;  // node candidates
        DataValue data;
        std::size_t from = 0;  // edge candidates, node index (base, then slots)
        std::size_t to = 0;
        EdgeLabel label;
        Cost cost;
    };

    SupersetSpace(const DataGraph& g, const ConstraintSet& r, const SearchBudget& budget);

    // Call before using candidate costs.
    void set_costs(const CostModel& model);

    [[nodiscard]] const DataGraph& base() const { return g_; }
    [[nodiscard]] std::size_t base_count() const { return base_ids_.size(); }
    [[nodiscard]] std::size_t slot_count() const { return fresh_ids_.size(); }
    [[nodiscard]] const std::vector<Candidate>& candidates() const { return cands_; }
    [[nodiscard]] std::size_t size() const { return cands_.size(); }
    [[nodiscard]] const std::vector<DataValue>& domain() const { return domain_; }
    [[nodiscard]] const std::set<EdgeLabel>& labels() const { return labels_; }

    // Every symbol a candidate can add.
    [[nodiscard]] std::set<Symbol> varying_symbols() const;

    // Edges need their fresh endpoints, every slot holds at most one data
    // value; `canonical` also requires slots to be used in order.
    [[nodiscard]] bool valid(const Bits& chosen, bool canonical) const;
    // Whether `c` clashes with an already chosen candidate (second data value
    // for a slot).
    [[nodiscard]] bool conflicts(const Bits& chosen, std::size_t c) const;

    [[nodiscard]] IndexedGraph build(const Bits& chosen) const;
    [[nodiscard]] DataGraph to_graph(const Bits& chosen) const;
    [[nodiscard]] Cost cost(const Bits& chosen) const;

  private:
    DataGraph g_;
    std::vector<NodeId> base_ids_;
    std::vector<DataValue> base_data_;
    std::vector<NodeId> fresh_ids_;
    std::vector<DataValue> domain_;
    std::set<EdgeLabel> labels_;
    std::vector<Candidate> cands_;
    std::vector<std::pair<std::size_t, std::size_t>> base_edges_;
    std::vector<EdgeLabel> base_labels_;
};

// Whether a proper valid subset of `chosen` obtained by dropping zero-cost
// candidates only is consistent.
[[nodiscard]] bool has_cheaper_free_subset(const SupersetSpace& space, const Bits& chosen, const ConstraintSet& r,
                                           Counter& counter);

// Least-cost consistent supersets found by the provenance-guided search,
// valid only for positive constraints and no fresh nodes. `bound` caps the
// cost; with `first_only` the search returns as soon as something within the
// bound is found. nullopt when the whole candidate space is inconsistent or
// nothing fits the bound.
struct GuidedResult {
    Cost cost;
    std::vector<Bits> solutions;
};
[[nodiscard]] std::optional<GuidedResult> guided_superset_search(const SupersetSpace& space, const ConstraintSet& r,
                                                                 std::optional<Cost> bound, bool collect_ties,
                                                                 bool first_only, Counter& counter);

// Least-cost consistent supersets by iterative deepening on the cost; works
// for any constraints. Same contract as the guided search.
[[nodiscard]] std::optional<GuidedResult> deepening_superset_search(const SupersetSpace& space,
                                                                    const ConstraintSet& r,
                                                                    std::optional<Cost> bound, bool first_only,
                                                                    Counter& counter);

[[nodiscard]] unsigned resolve_threads(unsigned requested);

}  // namespace gxrepair::detail
