// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#include "gxrepair/eval.hpp"

#include <type_traits>

namespace gxrepair {

IndexedGraph::IndexedGraph(std::vector<NodeId> ids, const std::vector<DataValue>& data) : ids_(std::move(ids)) {
    const auto n = static_cast<Eigen::Index>(ids_.size());
    std::map<DataValue, int> intern;
    data_.reserve(ids_.size());
    for (const auto& value : data) {
        auto [it, inserted] = intern.emplace(value, static_cast<int>(values_.size()));
        if (inserted) {
            values_.push_back(value);
        }
        data_.push_back(it->second);
    }
    any_ = rel::empty(n);
    empty_ = rel::empty(n);
    same_data_.resize(n, n);
    for (Eigen::Index u = 0; u < n; ++u) {
        for (Eigen::Index w = 0; w < n; ++w) {
            same_data_(u, w) = data_[u] == data_[w];
        }
    }
}

namespace {

std::vector<NodeId> ids_of(const DataGraph& g) {
    std::vector<NodeId> out;
    out.reserve(g.node_count());
    for (const auto& [id, value] : g.nodes()) {
        out.push_back(id);
    }
    return out;
}

std::vector<DataValue> data_of(const DataGraph& g) {
    std::vector<DataValue> out;
    out.reserve(g.node_count());
    for (const auto& [id, value] : g.nodes()) {
        out.push_back(value);
    }
    return out;
}

}  // namespace

IndexedGraph::IndexedGraph(const DataGraph& g) : IndexedGraph(ids_of(g), data_of(g)) {
    std::map<NodeId, Eigen::Index> index;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        index.emplace(ids_[i], static_cast<Eigen::Index>(i));
    }
    for (const auto& e : g.edges()) {
        add_edge(index.at(e.from), index.at(e.to), e.label);
    }
}

void IndexedGraph::add_edge(Eigen::Index from, Eigen::Index to, const EdgeLabel& label) {
    auto it = adjacency_.find(label);
    if (it == adjacency_.end()) {
        it = adjacency_.emplace(label, rel::empty(size())).first;
    }
    it->second(from, to) = true;
    any_(from, to) = true;
}

const Relation& IndexedGraph::adjacency(const EdgeLabel& label) const {
    auto it = adjacency_.find(label);
    return it == adjacency_.end() ? empty_ : it->second;
}

NodeMask IndexedGraph::data_is(const DataValue& c) const {
    NodeMask m(size());
    for (Eigen::Index v = 0; v < size(); ++v) {
        m(v) = values_[data_[v]] == c;
    }
    return m;
}

DataGraph IndexedGraph::to_graph() const {
    DataGraph g;
    for (Eigen::Index v = 0; v < size(); ++v) {
        g.add_node(ids_[v], data(v));
    }
    for (const auto& [label, adj] : adjacency_) {
        for (Eigen::Index u = 0; u < size(); ++u) {
            for (Eigen::Index w = 0; w < size(); ++w) {
                if (adj(u, w)) {
                    g.add_edge(ids_[u], ids_[w], label);
                }
            }
        }
    }
    return g;
}

Relation Evaluator::path(const PathExpr& e) {
    if (auto it = path_memo_.find(&e); it != path_memo_.end()) {
        return it->second;
    }
    Relation r = compute(e);
    path_memo_.emplace(&e, r);
    return r;
}

NodeMask Evaluator::node(const NodeExpr& e) {
    if (auto it = node_memo_.find(&e); it != node_memo_.end()) {
        return it->second;
    }
    NodeMask m = compute(e);
    node_memo_.emplace(&e, m);
    return m;
}

Relation Evaluator::compute(const PathExpr& e) {
    const Eigen::Index n = g_.size();
    return std::visit(
        [&](const auto& x) -> Relation {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, path::Epsilon>) {
                return rel::identity(n);
            } else if constexpr (std::is_same_v<T, path::Wildcard>) {
                return g_.any_edge();
            } else if constexpr (std::is_same_v<T, path::Label>) {
                return g_.adjacency(x.name);
            } else if constexpr (std::is_same_v<T, path::Inverse>) {
                return g_.adjacency(x.name).transpose();
            } else if constexpr (std::is_same_v<T, path::Concat>) {
                return rel::compose(path(*x.lhs), path(*x.rhs));
            } else if constexpr (std::is_same_v<T, path::Union>) {
                return path(*x.lhs) || path(*x.rhs);
            } else if constexpr (std::is_same_v<T, path::Intersect>) {
                return path(*x.lhs) && path(*x.rhs);
            } else if constexpr (std::is_same_v<T, path::Star>) {
                return rel::closure(path(*x.arg));
            } else if constexpr (std::is_same_v<T, path::Complement>) {
                return !path(*x.arg);
            } else if constexpr (std::is_same_v<T, path::NodeTest>) {
                return rel::diagonal(node(*x.test));
            } else {
                static_assert(std::is_same_v<T, path::Repeat>);
                const Relation base = path(*x.arg);
                Relation step = rel::power(base, x.min);
                Relation acc = step;
                for (std::size_t k = x.min; k < x.max; ++k) {
                    step = rel::compose(step, base);
                    acc = acc || step;
                }
                return acc;
            }
        },
        e.v);
}

NodeMask Evaluator::compute(const NodeExpr& e) {
    return std::visit(
        [&](const auto& x) -> NodeMask {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, node::DataEq>) {
                return g_.data_is(x.value);
            } else if constexpr (std::is_same_v<T, node::DataNeq>) {
                return !g_.data_is(x.value);
            } else if constexpr (std::is_same_v<T, node::Not>) {
                return !node(*x.arg);
            } else if constexpr (std::is_same_v<T, node::Or>) {
                return node(*x.lhs) || node(*x.rhs);
            } else if constexpr (std::is_same_v<T, node::And>) {
                return node(*x.lhs) && node(*x.rhs);
            } else if constexpr (std::is_same_v<T, node::Exists>) {
                return rel::domain(path(*x.path));
            } else {
                // (v, w) with some u, (v, u) in lhs and D(u) vs D(w), then meet rhs
                const Relation& cmp = g_.data_equal();
                const Relation reach =
                    std::is_same_v<T, node::ExistsEq> ? rel::compose(path(*x.lhs), cmp) : rel::compose(path(*x.lhs), !cmp);
                return rel::domain(reach && path(*x.rhs));
            }
        },
        e.v);
}

PairSet eval_path(const DataGraph& g, const PathExpr& alpha) {
    const IndexedGraph ig(g);
    Evaluator ev(ig);
    const Relation r = ev.path(alpha);
    PairSet out;
    for (Eigen::Index u = 0; u < ig.size(); ++u) {
        for (Eigen::Index w = 0; w < ig.size(); ++w) {
            if (r(u, w)) {
                out.emplace(ig.ids()[u], ig.ids()[w]);
            }
        }
    }
    return out;
}

NodeSet eval_node(const DataGraph& g, const NodeExpr& phi) {
    const IndexedGraph ig(g);
    Evaluator ev(ig);
    const NodeMask m = ev.node(phi);
    NodeSet out;
    for (Eigen::Index v = 0; v < ig.size(); ++v) {
        if (m(v)) {
            out.insert(ig.ids()[v]);
        }
    }
    return out;
}

}  // namespace gxrepair
