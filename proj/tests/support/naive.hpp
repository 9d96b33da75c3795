// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <utility>
#include <vector>

#include "gxrepair/datagraph.hpp"
#include "gxrepair/gxpath.hpp"

namespace gxrepair::testing {

using Pairs = std::set<std::pair<NodeId, NodeId>>;
using Nodes = std::set<NodeId>;

// Set-based evaluator written straight from the semantic table, one case per
// operator, with no shared code with the library evaluator.
Pairs naive_path(const DataGraph& g, const PathExpr& e);
Nodes naive_node(const DataGraph& g, const NodeExpr& e);

bool naive_consistent(const DataGraph& g, const ConstraintSet& r);

// Powerset oracles. Subset: every consistent subgraph of g that is maximal
// among consistent subgraphs. Superset: every consistent graph g + X, X a set
// of candidate edge triples (no fresh nodes), that is minimal among them.
// Both sorted in DataGraph order.
std::vector<DataGraph> oracle_subset_repairs(const DataGraph& g, const ConstraintSet& r);
std::vector<DataGraph> oracle_superset_repairs(const DataGraph& g, const ConstraintSet& r,
                                               const std::vector<Edge>& candidates);

// Labels of g plus labels mentioned by r: the alphabet superset search draws
// added edges from.
std::set<EdgeLabel> edge_alphabet(const DataGraph& g, const ConstraintSet& r);

// Missing triples over nodes(g) x nodes(g) x labels.
std::vector<Edge> missing_triples(const DataGraph& g, const std::set<EdgeLabel>& labels);

// Repairs not strictly beaten by another repair under `crit`. `subset`
// selects the direction: a subset repair is beaten by a greater one, a
// superset repair by a lesser one.
std::vector<DataGraph> undominated(const std::vector<DataGraph>& repairs, const PreferenceCriterion& crit,
                                   bool subset);

// Dershowitz-Manna in its original form: m1 < m2 iff m1 = (m2 - X) + Y for
// some non-empty X contained in m2 with every element of Y below some element
// of X. Brute force over X.
bool dm_less_by_replacement(const GraphMultiset& m1, const GraphMultiset& m2, const SymbolOrder& ord);

}  // namespace gxrepair::testing
