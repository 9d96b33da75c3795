// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gxrepair {

using NodeId = std::string;
using DataValue = std::string;
using EdgeLabel = std::string;

struct Edge {
    NodeId from;
    NodeId to;
    EdgeLabel label;

    auto operator<=>(const Edge&) const = default;
};

// A finite data-graph: nodes carrying data values and a labeled edge relation.
// Every node pair maps to a set of labels, so a (from, to, label) triple is
// present at most once.
class DataGraph {
  public:
    DataGraph() = default;

    // Throws GraphError when the id is already present.
    void add_node(NodeId id, DataValue data);
    // Throws GraphError on a missing endpoint or a duplicate triple.
    void add_edge(NodeId from, NodeId to, EdgeLabel label);
    void add_edge(const Edge& e) { add_edge(e.from, e.to, e.label); }

    // Removes the node together with every incident edge.
    void remove_node(const NodeId& id);
    void remove_edge(const Edge& e);

    [[nodiscard]] bool contains_node(const NodeId& id) const { return nodes_.contains(id); }
    [[nodiscard]] bool contains_edge(const Edge& e) const { return edges_.contains(e); }
    [[nodiscard]] const DataValue& data(const NodeId& id) const;

    [[nodiscard]] const std::map<NodeId, DataValue>& nodes() const { return nodes_; }
    [[nodiscard]] const std::set<Edge>& edges() const { return edges_; }

    [[nodiscard]] std::size_t node_count() const { return nodes_.size(); }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
    // Number of elements (nodes plus edge triples).
    [[nodiscard]] std::size_t size() const { return nodes_.size() + edges_.size(); }
    [[nodiscard]] bool empty() const { return nodes_.empty(); }

    [[nodiscard]] std::set<EdgeLabel> edge_labels() const;
    [[nodiscard]] std::set<DataValue> data_values() const;

    // Structural equality; ordering is lexicographic on (nodes, edges) and is
    // the tie-break used wherever results must be deterministic.
    bool operator==(const DataGraph&) const = default;
    std::strong_ordering operator<=>(const DataGraph& other) const;

  private:
    std::map<NodeId, DataValue> nodes_;
    std::set<Edge> edges_;
};

// g1 ⊆ g2: nodes of g1 are nodes of g2 with the same data value, and every
// edge triple of g1 is an edge triple of g2.
[[nodiscard]] bool is_subgraph(const DataGraph& g1, const DataGraph& g2);

struct Alphabets {
    std::set<EdgeLabel> edge_labels;
    std::set<DataValue> data_values;

    static Alphabets of(const DataGraph& g);
    [[nodiscard]] bool disjoint() const;
};

// Weight function over edge labels and data values. Symbols absent from the
// maps take the corresponding default.
struct WeightSpec {
    std::map<EdgeLabel, std::uint64_t> edge_weights;
    std::map<DataValue, std::uint64_t> data_weights;
    std::uint64_t default_edge = 1;
    std::uint64_t default_data = 1;

    [[nodiscard]] std::uint64_t edge_weight(const EdgeLabel& label) const;
    [[nodiscard]] std::uint64_t data_weight(const DataValue& value) const;
};

// Sum of edge-label weights over all edge triples plus data weights over all
// nodes. Throws WeightOverflow when the sum leaves the uint64 range.
[[nodiscard]] std::uint64_t weight_of(const DataGraph& g, const WeightSpec& w);

enum class SymbolKind : std::uint8_t { EdgeLabel, DataValue };

struct Symbol {
    SymbolKind kind;
    std::string name;

    auto operator<=>(const Symbol&) const = default;
};

// Strict partial order over a finite declared set of symbol names. Symbols
// outside the declared set are incomparable to everything.
class SymbolOrder {
  public:
    SymbolOrder() = default;

    // Declares `symbols` plus every name mentioned in `less_than`, closes the
    // pairs [x, y] (x < y) transitively and throws OrderError on a cycle.
    static SymbolOrder from_pairs(std::vector<std::string> symbols,
                                  const std::vector<std::pair<std::string, std::string>>& less_than);

    [[nodiscard]] bool less(const std::string& x, const std::string& y) const;
    [[nodiscard]] bool declared(const std::string& x) const;
    [[nodiscard]] const std::vector<std::string>& symbols() const { return symbols_; }
    // The generating pairs as given (before closure).
    [[nodiscard]] const std::vector<std::pair<std::string, std::string>>& pairs() const { return pairs_; }

    // True when every two distinct names in `names` are comparable.
    [[nodiscard]] bool is_total_on(const std::set<std::string>& names) const;

    // Deterministic linear extension of the order restricted to `names`,
    // greatest first. Incomparable names are emitted in lexicographic order.
    [[nodiscard]] std::vector<std::string> linear_extension_desc(const std::set<std::string>& names) const;

  private:
    std::vector<std::string> symbols_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<bool>> less_;
    std::vector<std::pair<std::string, std::string>> pairs_;
};

// Finite multiset over edge labels and data values; only non-zero counts are
// stored.
class GraphMultiset {
  public:
    GraphMultiset() = default;

    void add(const Symbol& s, std::uint64_t count = 1);
    [[nodiscard]] std::uint64_t count(const Symbol& s) const;
    [[nodiscard]] const std::map<Symbol, std::uint64_t>& counts() const { return counts_; }
    [[nodiscard]] bool empty() const { return counts_.empty(); }

    bool operator==(const GraphMultiset&) const = default;

  private:
    std::map<Symbol, std::uint64_t> counts_;
};

// Edge-label counts (one per edge triple) and data-value counts (one per node).
[[nodiscard]] GraphMultiset multiset_of(const DataGraph& g);

// Multiset extension of `ord`: m1 < m2 iff m1 != m2 and every symbol that m1
// has more of is dominated by a greater symbol that m2 has more of.
[[nodiscard]] bool multiset_less(const GraphMultiset& m1, const GraphMultiset& m2, const SymbolOrder& ord);

struct NoPreference {};
using PreferenceCriterion = std::variant<NoPreference, WeightSpec, SymbolOrder>;

// Weight mode: w(g1) < w(g2). Multiset mode: multiset_of(g1) < multiset_of(g2).
// Always false without a preference.
[[nodiscard]] bool graph_less(const DataGraph& g1, const DataGraph& g2, const PreferenceCriterion& crit);

}  // namespace gxrepair
