// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#include "gxrepair/datagraph.hpp"

#include <algorithm>

#include "gxrepair/error.hpp"

namespace gxrepair {

void DataGraph::add_node(NodeId id, DataValue data) {
    if (nodes_.contains(id)) {
        throw GraphError("duplicate node '" + id + "'");
    }
    nodes_.emplace(std::move(id), std::move(data));
}

void DataGraph::add_edge(NodeId from, NodeId to, EdgeLabel label) {
    if (!nodes_.contains(from)) {
        throw GraphError("edge source '" + from + "' is not a node");
    }
    if (!nodes_.contains(to)) {
        throw GraphError("edge target '" + to + "' is not a node");
    }
    Edge e{std::move(from), std::move(to), std::move(label)};
    if (edges_.contains(e)) {
        throw GraphError("duplicate edge ('" + e.from + "', '" + e.to + "', '" + e.label + "')");
    }
    edges_.insert(std::move(e));
}

void DataGraph::remove_node(const NodeId& id) {
    if (nodes_.erase(id) == 0) {
        return;
    }
    std::erase_if(edges_, [&](const Edge& e) { return e.from == id || e.to == id; });
}

void DataGraph::remove_edge(const Edge& e) { edges_.erase(e); }

const DataValue& DataGraph::data(const NodeId& id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) {
        throw GraphError("unknown node '" + id + "'");
    }
    return it->second;
}

std::set<EdgeLabel> DataGraph::edge_labels() const {
    std::set<EdgeLabel> out;
    for (const auto& e : edges_) {
        out.insert(e.label);
    }
    return out;
}

std::set<DataValue> DataGraph::data_values() const {
    std::set<DataValue> out;
    for (const auto& [id, value] : nodes_) {
        out.insert(value);
    }
    return out;
}

std::strong_ordering DataGraph::operator<=>(const DataGraph& other) const {
    if (auto c = std::lexicographical_compare_three_way(nodes_.begin(), nodes_.end(), other.nodes_.begin(),
                                                        other.nodes_.end());
        c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(edges_.begin(), edges_.end(), other.edges_.begin(),
                                                  other.edges_.end());
}

bool is_subgraph(const DataGraph& g1, const DataGraph& g2) {
    for (const auto& [id, value] : g1.nodes()) {
        auto it = g2.nodes().find(id);
        if (it == g2.nodes().end() || it->second != value) {
            return false;
        }
    }
    return std::all_of(g1.edges().begin(), g1.edges().end(), [&](const Edge& e) { return g2.contains_edge(e); });
}

Alphabets Alphabets::of(const DataGraph& g) { return Alphabets{g.edge_labels(), g.data_values()}; }

bool Alphabets::disjoint() const {
    return std::none_of(edge_labels.begin(), edge_labels.end(),
                        [&](const EdgeLabel& l) { return data_values.contains(l); });
}

std::uint64_t WeightSpec::edge_weight(const EdgeLabel& label) const {
    auto it = edge_weights.find(label);
    return it == edge_weights.end() ? default_edge : it->second;
}

std::uint64_t WeightSpec::data_weight(const DataValue& value) const {
    auto it = data_weights.find(value);
    return it == data_weights.end() ? default_data : it->second;
}

namespace {

void checked_add(std::uint64_t& acc, std::uint64_t x) {
    if (__builtin_add_overflow(acc, x, &acc)) {
        throw WeightOverflow("graph weight exceeds 64-bit range");
    }
}

}  // namespace

std::uint64_t weight_of(const DataGraph& g, const WeightSpec& w) {
    std::uint64_t total = 0;
    for (const auto& e : g.edges()) {
        checked_add(total, w.edge_weight(e.label));
    }
    for (const auto& [id, value] : g.nodes()) {
        checked_add(total, w.data_weight(value));
    }
    return total;
}

SymbolOrder SymbolOrder::from_pairs(std::vector<std::string> symbols,
                                    const std::vector<std::pair<std::string, std::string>>& less_than) {
    SymbolOrder ord;
    ord.pairs_ = less_than;
    for (const auto& [x, y] : less_than) {
        symbols.push_back(x);
        symbols.push_back(y);
    }
    for (auto& s : symbols) {
        if (!ord.index_.contains(s)) {
            ord.index_.emplace(s, ord.symbols_.size());
            ord.symbols_.push_back(std::move(s));
        }
    }
    const std::size_t n = ord.symbols_.size();
    ord.less_.assign(n, std::vector<bool>(n, false));
    for (const auto& [x, y] : less_than) {
        ord.less_[ord.index_.at(x)][ord.index_.at(y)] = true;
    }
    // Warshall
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!ord.less_[i][k]) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (ord.less_[k][j]) {
                    ord.less_[i][j] = true;
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (ord.less_[i][i]) {
            throw OrderError("symbol order has a cycle through '" + ord.symbols_[i] + "'");
        }
    }
    return ord;
}

bool SymbolOrder::less(const std::string& x, const std::string& y) const {
    auto ix = index_.find(x);
    auto iy = index_.find(y);
    if (ix == index_.end() || iy == index_.end()) {
        return false;
    }
    return less_[ix->second][iy->second];
}

bool SymbolOrder::declared(const std::string& x) const { return index_.contains(x); }

bool SymbolOrder::is_total_on(const std::set<std::string>& names) const {
    for (auto i = names.begin(); i != names.end(); ++i) {
        for (auto j = std::next(i); j != names.end(); ++j) {
            if (!less(*i, *j) && !less(*j, *i)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::string> SymbolOrder::linear_extension_desc(const std::set<std::string>& names) const {
    std::vector<std::string> remaining(names.begin(), names.end());
    std::vector<std::string> out;
    out.reserve(remaining.size());
    while (!remaining.empty()) {
        // first (lexicographically) name with no greater name still remaining
        auto pick = std::find_if(remaining.begin(), remaining.end(), [&](const std::string& x) {
            return std::none_of(remaining.begin(), remaining.end(),
                                [&](const std::string& y) { return less(x, y); });
        });
        out.push_back(*pick);
        remaining.erase(pick);
    }
    return out;
}

void GraphMultiset::add(const Symbol& s, std::uint64_t count) {
    if (count != 0) {
        counts_[s] += count;
    }
}

std::uint64_t GraphMultiset::count(const Symbol& s) const {
    auto it = counts_.find(s);
    return it == counts_.end() ? 0 : it->second;
}

GraphMultiset multiset_of(const DataGraph& g) {
    GraphMultiset m;
    for (const auto& e : g.edges()) {
        m.add(Symbol{SymbolKind::EdgeLabel, e.label});
    }
    for (const auto& [id, value] : g.nodes()) {
        m.add(Symbol{SymbolKind::DataValue, value});
    }
    return m;
}

bool multiset_less(const GraphMultiset& m1, const GraphMultiset& m2, const SymbolOrder& ord) {
    if (m1 == m2) {
        return false;
    }
    for (const auto& [x, cx] : m1.counts()) {
        if (cx <= m2.count(x)) {
            continue;
        }
        const bool dominated = std::any_of(m2.counts().begin(), m2.counts().end(), [&](const auto& entry) {
            const auto& [y, cy] = entry;
            return ord.less(x.name, y.name) && m1.count(y) < cy;
        });
        if (!dominated) {
            return false;
        }
    }
    return true;
}

bool graph_less(const DataGraph& g1, const DataGraph& g2, const PreferenceCriterion& crit) {
    return std::visit(
        [&](const auto& c) -> bool {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, WeightSpec>) {
                return weight_of(g1, c) < weight_of(g2, c);
            } else if constexpr (std::is_same_v<T, SymbolOrder>) {
                return multiset_less(multiset_of(g1), multiset_of(g2), c);
            } else {
                return false;
            }
        },
        crit);
}

}  // namespace gxrepair
