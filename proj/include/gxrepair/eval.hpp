// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gxrepair/datagraph.hpp"
#include "gxrepair/gxpath.hpp"
#include "gxrepair/relation.hpp"

namespace gxrepair {

using NodeSet = std::set<NodeId>;
using PairSet = std::set<std::pair<NodeId, NodeId>>;

// Dense view of a data-graph: nodes numbered 0..n-1 (by the order the ids
// were given; DataGraph order when built from one) and one adjacency matrix
// per edge label.
class IndexedGraph {
  public:
    explicit IndexedGraph(const DataGraph& g);
    IndexedGraph(std::vector<NodeId> ids, const std::vector<DataValue>& data);

    void add_edge(Eigen::Index from, Eigen::Index to, const EdgeLabel& label);

    [[nodiscard]] Eigen::Index size() const { return static_cast<Eigen::Index>(ids_.size()); }
    [[nodiscard]] const std::vector<NodeId>& ids() const { return ids_; }
    [[nodiscard]] const DataValue& data(Eigen::Index v) const { return values_[data_[v]]; }

    // Empty relation for labels without edges.
    [[nodiscard]] const Relation& adjacency(const EdgeLabel& label) const;
    [[nodiscard]] const Relation& any_edge() const { return any_; }
    // (u, w) such that D(u) = D(w).
    [[nodiscard]] const Relation& data_equal() const { return same_data_; }
    [[nodiscard]] NodeMask data_is(const DataValue& c) const;

    [[nodiscard]] DataGraph to_graph() const;

  private:
    std::vector<NodeId> ids_;
    std::vector<DataValue> values_;
    std::vector<int> data_;
    std::map<EdgeLabel, Relation> adjacency_;
    Relation any_;
    Relation empty_;
    Relation same_data_;
};

// Bottom-up evaluator with a per-instance memo keyed by sub-expression
// identity. Not thread-safe; create one per thread.
class Evaluator {
  public:
    explicit Evaluator(const IndexedGraph& g) : g_(g) {}

    Relation path(const PathExpr& e);
    NodeMask node(const NodeExpr& e);

  private:
    Relation compute(const PathExpr& e);
    NodeMask compute(const NodeExpr& e);

    const IndexedGraph& g_;
    std::unordered_map<const PathExpr*, Relation> path_memo_;
    std::unordered_map<const NodeExpr*, NodeMask> node_memo_;
};

[[nodiscard]] PairSet eval_path(const DataGraph& g, const PathExpr& alpha);
[[nodiscard]] NodeSet eval_node(const DataGraph& g, const NodeExpr& phi);

}  // namespace gxrepair
