// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "gxrepair/datagraph.hpp"

namespace gxrepair {

struct PathExpr;
struct NodeExpr;
using PathPtr = std::shared_ptr<const PathExpr>;
using NodePtr = std::shared_ptr<const NodeExpr>;

namespace path {
struct Epsilon {};
struct Wildcard {};
struct Label {
    EdgeLabel name;
};
struct Inverse {
    EdgeLabel name;
};
struct Concat {
    PathPtr lhs, rhs;
};
struct Union {
    PathPtr lhs, rhs;
};
struct Intersect {
    PathPtr lhs, rhs;
};
struct Star {
    PathPtr arg;
};
struct Complement {
    PathPtr arg;
};
struct NodeTest {
    NodePtr test;
};
// Union of the k-fold compositions of `arg` for min <= k <= max.
struct Repeat {
    PathPtr arg;
    std::size_t min, max;
};
}  // namespace path

namespace node {
struct DataEq {
    DataValue value;
};
struct DataNeq {
    DataValue value;
};
struct Not {
    NodePtr arg;
};
struct Or {
    NodePtr lhs, rhs;
};
struct And {
    NodePtr lhs, rhs;
};
struct Exists {
    PathPtr path;
};
struct ExistsEq {
    PathPtr lhs, rhs;
};
struct ExistsNeq {
    PathPtr lhs, rhs;
};
}  // namespace node

struct PathExpr {
    std::variant<path::Epsilon, path::Wildcard, path::Label, path::Inverse, path::Concat, path::Union,
                 path::Intersect, path::Star, path::Complement, path::NodeTest, path::Repeat>
        v;
};

struct NodeExpr {
    std::variant<node::DataEq, node::DataNeq, node::Not, node::Or, node::And, node::Exists, node::ExistsEq,
                 node::ExistsNeq>
        v;
};

// Structural (deep) equality.
bool operator==(const PathExpr& a, const PathExpr& b);
bool operator==(const NodeExpr& a, const NodeExpr& b);

// Builders.
PathPtr eps();
PathPtr wildcard();
PathPtr label(EdgeLabel name);
PathPtr inverse(EdgeLabel name);
PathPtr concat(PathPtr lhs, PathPtr rhs);
PathPtr alt(PathPtr lhs, PathPtr rhs);
PathPtr intersect(PathPtr lhs, PathPtr rhs);
PathPtr star(PathPtr arg);
PathPtr complement(PathPtr arg);
PathPtr test(NodePtr phi);
// Throws std::invalid_argument when min > max.
PathPtr repeat(PathPtr arg, std::size_t min, std::size_t max);
// a => b is sugar for b + !a.
PathPtr path_implies(PathPtr a, PathPtr b);

NodePtr data_eq(DataValue c);
NodePtr data_neq(DataValue c);
NodePtr negate(NodePtr phi);
NodePtr lor(NodePtr lhs, NodePtr rhs);
NodePtr land(NodePtr lhs, NodePtr rhs);
NodePtr exists(PathPtr alpha);
NodePtr exists_eq(PathPtr lhs, PathPtr rhs);
NodePtr exists_neq(PathPtr lhs, PathPtr rhs);
// p => q is sugar for q | !p.
NodePtr node_implies(NodePtr p, NodePtr q);

enum class Sort { Node, Path };

// A single restriction: a node expression (must hold at every node) or a path
// expression (must hold at every ordered node pair).
struct Constraint {
    std::variant<NodePtr, PathPtr> expr;

    [[nodiscard]] Sort sort() const { return expr.index() == 0 ? Sort::Node : Sort::Path; }
};

class ConstraintSet {
  public:
    ConstraintSet() = default;
    ConstraintSet(std::vector<NodePtr> nodes, std::vector<PathPtr> paths);

    void add(NodePtr phi) { items_.push_back(Constraint{std::move(phi)}); }
    void add(PathPtr alpha) { items_.push_back(Constraint{std::move(alpha)}); }

    // Items in insertion order; verdicts refer to constraints by this index.
    [[nodiscard]] const std::vector<Constraint>& items() const { return items_; }
    [[nodiscard]] std::size_t size() const { return items_.size(); }
    [[nodiscard]] bool empty() const { return items_.empty(); }

    [[nodiscard]] std::vector<NodePtr> node_constraints() const;
    [[nodiscard]] std::vector<PathPtr> path_constraints() const;

  private:
    std::vector<Constraint> items_;
};

enum class Fragment { RegGXPath, PosRegGXPath, PosRegGXPathNode, CoreGXPath };

struct FragmentFlags {
    bool positive = true;   // no complement, no negation
    bool node = false;      // a node expression
    bool core = true;       // star only over labels and inverses

    [[nodiscard]] std::vector<Fragment> memberships() const;
    [[nodiscard]] Fragment most_specific() const;
};

[[nodiscard]] FragmentFlags classify(const PathExpr& e);
[[nodiscard]] FragmentFlags classify(const NodeExpr& e);
// Every constraint is a positive node expression.
[[nodiscard]] bool is_positive_node_set(const ConstraintSet& r);
// No constraint uses complement or negation.
[[nodiscard]] bool is_positive_set(const ConstraintSet& r);

[[nodiscard]] const char* to_string(Fragment f);

// Concrete syntax; parse_path(pretty(e)) == e.
[[nodiscard]] std::string pretty(const PathExpr& e);
[[nodiscard]] std::string pretty(const NodeExpr& e);
[[nodiscard]] std::string pretty(const Constraint& c);

// S-expression dump of the AST, used for golden files.
[[nodiscard]] std::string to_sexpr(const PathExpr& e);
[[nodiscard]] std::string to_sexpr(const NodeExpr& e);

// Edge labels and data constants mentioned by the constraints.
[[nodiscard]] std::set<EdgeLabel> mentioned_labels(const ConstraintSet& r);
[[nodiscard]] std::set<DataValue> mentioned_constants(const ConstraintSet& r);

}  // namespace gxrepair
