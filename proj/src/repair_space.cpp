// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <stdexcept>

#include "gxrepair/error.hpp"
#include "repair_internal.hpp"

namespace gxrepair {

const char* to_string(RepairStatus s) {
    switch (s) {
        case RepairStatus::Repaired:
            return "repaired";
        case RepairStatus::Trivial:
            return "trivial";
        case RepairStatus::None:
            return "none";
        case RepairStatus::UnknownBeyondBudget:
            return "unknown_beyond_budget";
    }
    return "unknown_beyond_budget";
}

const char* to_string(Maximality m) { return m == Maximality::Verified ? "verified" : "one_step"; }

namespace detail {

void add_to(Cost& acc, const Cost& x) {
    for (std::size_t i = 0; i < acc.size(); ++i) {
        if (__builtin_add_overflow(acc[i], x[i], &acc[i])) {
            throw WeightOverflow("repair cost exceeds 64-bit range");
        }
    }
}

void sub_from(Cost& acc, const Cost& x) {
    for (std::size_t i = 0; i < acc.size(); ++i) {
        acc[i] -= x[i];
    }
}

bool is_zero(const Cost& c) {
    return std::all_of(c.begin(), c.end(), [](std::uint64_t x) { return x == 0; });
}

std::vector<Symbol> ranked_symbols(const SymbolOrder& ord, const std::set<Symbol>& symbols) {
    const auto& declared = ord.symbols();
    const auto ext = ord.linear_extension_desc(std::set<std::string>(declared.begin(), declared.end()));
    std::map<std::string, std::size_t> position;
    for (std::size_t i = 0; i < ext.size(); ++i) {
        position.emplace(ext[i], i);
    }
    auto key = [&](const Symbol& s) {
        auto it = position.find(s.name);
        return std::make_tuple(it == position.end() ? ext.size() : it->second, s.name, s.kind);
    };
    std::vector<Symbol> out(symbols.begin(), symbols.end());
    std::sort(out.begin(), out.end(), [&](const Symbol& a, const Symbol& b) { return key(a) < key(b); });
    return out;
}

CostModel::CostModel(const PreferenceCriterion& crit, const std::set<Symbol>& universe) : crit_(crit) {
    if (const auto* ord = std::get_if<SymbolOrder>(&crit_)) {
        const auto ranked = ranked_symbols(*ord, universe);
        for (std::size_t i = 0; i < ranked.size(); ++i) {
            slot_.emplace(ranked[i], i);
        }
        slots_ = ranked.size();
    }
}

Cost CostModel::of(const Symbol& s) const {
    Cost c = zero();
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, WeightSpec>) {
                c[0] = s.kind == SymbolKind::EdgeLabel ? x.edge_weight(s.name) : x.data_weight(s.name);
            } else if constexpr (std::is_same_v<T, SymbolOrder>) {
                auto it = slot_.find(s);
                if (it == slot_.end()) {
                    throw std::logic_error("symbol '" + s.name + "' outside the cost universe");
                }
                c[it->second] = 1;
            } else {
                c[0] = 1;
            }
        },
        crit_);
    return c;
}

std::set<Symbol> symbols_of(const DataGraph& g) {
    std::set<Symbol> out;
    for (const auto& l : g.edge_labels()) {
        out.insert(Symbol{SymbolKind::EdgeLabel, l});
    }
    for (const auto& d : g.data_values()) {
        out.insert(Symbol{SymbolKind::DataValue, d});
    }
    return out;
}

void Counter::tick() {
    if (++explored_ > cap_) {
        throw BudgetExceeded("search budget of " + std::to_string(cap_) + " candidate graphs exhausted");
    }
}

void Counter::step() {
    if (++steps_ / 64 > cap_) {
        throw BudgetExceeded("search budget of " + std::to_string(cap_) + " candidate graphs exhausted");
    }
}

unsigned resolve_threads(unsigned requested) { return std::max(1U, requested); }

// ---------------------------------------------------------------------------

SubsetSpace::SubsetSpace(const DataGraph& g) {
    std::map<NodeId, std::size_t> index;
    for (const auto& [id, value] : g.nodes()) {
        index.emplace(id, ids_.size());
        ids_.push_back(id);
        data_.push_back(value);
    }
    incident_.resize(ids_.size());
    for (const auto& e : g.edges()) {
        const std::size_t k = edges_.size();
        edges_.push_back(IdxEdge{index.at(e.from), index.at(e.to), e.label});
        incident_[edges_.back().from].push_back(k);
        if (edges_.back().to != edges_.back().from) {
            incident_[edges_.back().to].push_back(k);
        }
    }
}

IndexedGraph SubsetSpace::build(const Bits& removed_nodes, const Bits& removed_edges) const {
    std::vector<NodeId> ids;
    std::vector<DataValue> data;
    std::vector<Eigen::Index> to_new(ids_.size(), -1);
    for (std::size_t v = 0; v < ids_.size(); ++v) {
        if (!removed_nodes[v]) {
            to_new[v] = static_cast<Eigen::Index>(ids.size());
            ids.push_back(ids_[v]);
            data.push_back(data_[v]);
        }
    }
    IndexedGraph out(std::move(ids), data);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        const auto& e = edges_[k];
        if (!removed_edges[k] && to_new[e.from] >= 0 && to_new[e.to] >= 0) {
            out.add_edge(to_new[e.from], to_new[e.to], e.label);
        }
    }
    return out;
}

DataGraph SubsetSpace::to_graph(const Bits& removed_nodes, const Bits& removed_edges) const {
    DataGraph out;
    for (std::size_t v = 0; v < ids_.size(); ++v) {
        if (!removed_nodes[v]) {
            out.add_node(ids_[v], data_[v]);
        }
    }
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        const auto& e = edges_[k];
        if (!removed_edges[k] && !removed_nodes[e.from] && !removed_nodes[e.to]) {
            out.add_edge(ids_[e.from], ids_[e.to], e.label);
        }
    }
    return out;
}

Bits removal_key(const Bits& removed_nodes, const Bits& removed_edges) {
    Bits key(removed_nodes.size() + removed_edges.size());
    for (std::size_t i = 0; i < removed_nodes.size(); ++i) {
        key[i] = removed_nodes[i];
    }
    for (std::size_t i = 0; i < removed_edges.size(); ++i) {
        key[removed_nodes.size() + i] = removed_edges[i];
    }
    return key;
}

// ---------------------------------------------------------------------------

SupersetSpace::SupersetSpace(const DataGraph& g, const ConstraintSet& r, const SearchBudget& budget) : g_(g) {
    std::map<NodeId, std::size_t> index;
    for (const auto& [id, value] : g.nodes()) {
        index.emplace(id, base_ids_.size());
        base_ids_.push_back(id);
        base_data_.push_back(value);
    }
    std::set<std::tuple<std::size_t, std::size_t, EdgeLabel>> present;
    for (const auto& e : g.edges()) {
        base_edges_.emplace_back(index.at(e.from), index.at(e.to));
        base_labels_.push_back(e.label);
        present.emplace(index.at(e.from), index.at(e.to), e.label);
    }

    labels_ = g.edge_labels();
    labels_.merge(mentioned_labels(r));
    if (budget.data_domain) {
        std::set<DataValue> d(budget.data_domain->begin(), budget.data_domain->end());
        domain_.assign(d.begin(), d.end());
    } else {
        std::set<DataValue> d = g.data_values();
        d.merge(mentioned_constants(r));
        domain_.assign(d.begin(), d.end());
    }

    for (std::size_t k = 1; fresh_ids_.size() < budget.max_new_nodes; ++k) {
        NodeId id = "_new" + std::to_string(k);
        while (g.contains_node(id)) {
            id = "_" + id;
        }
        fresh_ids_.push_back(std::move(id));
    }

    for (std::size_t s = 0; s < fresh_ids_.size(); ++s) {
        for (const auto& d : domain_) {
            Candidate c;
            c.is_node = true;
            c.slot = s;
            c.data = d;
            cands_.push_back(std::move(c));
        }
    }
    const std::size_t total = base_ids_.size() + fresh_ids_.size();
    std::size_t edge_candidates = 0;
    for (std::size_t u = 0; u < total; ++u) {
        for (std::size_t w = 0; w < total; ++w) {
            for (const auto& l : labels_) {
                if (present.contains({u, w, l})) {
                    continue;
                }
                Candidate c;
                c.from = u;
                c.to = w;
                c.label = l;
                cands_.push_back(std::move(c));
                ++edge_candidates;
            }
        }
    }
    if (budget.max_candidate_edges && edge_candidates > *budget.max_candidate_edges) {
        throw BudgetExceeded("superset search has " + std::to_string(edge_candidates) +
                             " candidate edges, above the cap of " + std::to_string(*budget.max_candidate_edges));
    }
    set_costs(CostModel::unit());
}

void SupersetSpace::set_costs(const CostModel& model) {
    for (auto& c : cands_) {
        c.cost = c.is_node ? model.node(c.data) : model.edge(c.label);
    }
}

std::set<Symbol> SupersetSpace::varying_symbols() const {
    std::set<Symbol> out;
    for (const auto& c : cands_) {
        out.insert(c.is_node ? Symbol{SymbolKind::DataValue, c.data} : Symbol{SymbolKind::EdgeLabel, c.label});
    }
    return out;
}

bool SupersetSpace::valid(const Bits& chosen, bool canonical) const {
    const std::size_t n = base_ids_.size();
    std::vector<int> used(fresh_ids_.size(), 0);
    for (auto i = chosen.find_first(); i != Bits::npos; i = chosen.find_next(i)) {
        if (cands_[i].is_node && ++used[cands_[i].slot] > 1) {
            return false;
        }
    }
    for (auto i = chosen.find_first(); i != Bits::npos; i = chosen.find_next(i)) {
        const auto& c = cands_[i];
        if (!c.is_node && ((c.from >= n && used[c.from - n] == 0) || (c.to >= n && used[c.to - n] == 0))) {
            return false;
        }
    }
    if (canonical) {
        for (std::size_t s = 1; s < used.size(); ++s) {
            if (used[s] != 0 && used[s - 1] == 0) {
                return false;
            }
        }
    }
    return true;
}

bool SupersetSpace::conflicts(const Bits& chosen, std::size_t c) const {
    if (!cands_[c].is_node) {
        return false;
    }
    for (auto i = chosen.find_first(); i != Bits::npos; i = chosen.find_next(i)) {
        if (i != c && cands_[i].is_node && cands_[i].slot == cands_[c].slot) {
            return true;
        }
    }
    return false;
}

IndexedGraph SupersetSpace::build(const Bits& chosen) const {
    const std::size_t n = base_ids_.size();
    std::vector<NodeId> ids = base_ids_;
    std::vector<DataValue> data = base_data_;
    std::vector<Eigen::Index> slot_index(fresh_ids_.size(), -1);
    for (auto i = chosen.find_first(); i != Bits::npos; i = chosen.find_next(i)) {
        const auto& c = cands_[i];
        if (c.is_node) {
            slot_index[c.slot] = static_cast<Eigen::Index>(ids.size());
            ids.push_back(fresh_ids_[c.slot]);
            data.push_back(c.data);
        }
    }
    auto at = [&](std::size_t v) { return v < n ? static_cast<Eigen::Index>(v) : slot_index[v - n]; };
    IndexedGraph out(std::move(ids), data);
    for (std::size_t k = 0; k < base_edges_.size(); ++k) {
        out.add_edge(at(base_edges_[k].first), at(base_edges_[k].second), base_labels_[k]);
    }
    for (auto i = chosen.find_first(); i != Bits::npos; i = chosen.find_next(i)) {
        const auto& c = cands_[i];
        if (!c.is_node) {
            out.add_edge(at(c.from), at(c.to), c.label);
        }
    }
    return out;
}

DataGraph SupersetSpace::to_graph(const Bits& chosen) const {
    const std::size_t n = base_ids_.size();
    DataGraph out = g_;
    for (auto i = chosen.find_first(); i != Bits::npos; i = chosen.find_next(i)) {
        if (cands_[i].is_node) {
            out.add_node(fresh_ids_[cands_[i].slot], cands_[i].data);
        }
    }
    auto id = [&](std::size_t v) -> const NodeId& { return v < n ? base_ids_[v] : fresh_ids_[v - n]; };
    for (auto i = chosen.find_first(); i != Bits::npos; i = chosen.find_next(i)) {
        const auto& c = cands_[i];
        if (!c.is_node) {
            out.add_edge(id(c.from), id(c.to), c.label);
        }
    }
    return out;
}

Cost SupersetSpace::cost(const Bits& chosen) const {
    Cost total(cands_.empty() ? 1 : cands_.front().cost.size(), 0);
    for (auto i = chosen.find_first(); i != Bits::npos; i = chosen.find_next(i)) {
        add_to(total, cands_[i].cost);
    }
    return total;
}

bool has_cheaper_free_subset(const SupersetSpace& space, const Bits& chosen, const ConstraintSet& r,
                             Counter& counter) {
    std::vector<std::size_t> free;
    for (auto i = chosen.find_first(); i != Bits::npos; i = chosen.find_next(i)) {
        if (is_zero(space.candidates()[i].cost)) {
            free.push_back(i);
        }
    }
    if (free.size() >= 63) {
        throw BudgetExceeded("too many zero-cost additions to verify minimality");
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << free.size()); ++mask) {
        Bits t = chosen;
        for (std::size_t j = 0; j < free.size(); ++j) {
            if ((mask >> j) & 1U) {
                t[free[j]] = false;
            }
        }
        if (!space.valid(t, false)) {
            continue;
        }
        counter.tick();
        if (is_consistent(space.build(t), r)) {
            return true;
        }
    }
    return false;
}

}  // namespace detail

std::optional<DataGraph> select_preferred(const std::vector<DataGraph>& repairs, const PreferenceCriterion& crit,
                                          RepairMode mode) {
    if (repairs.empty()) {
        return std::nullopt;
    }
    std::set<Symbol> universe;
    for (const auto& g : repairs) {
        universe.merge(detail::symbols_of(g));
    }
    // Per-repair cost vector; larger is better for subset repairs.
    std::vector<Symbol> ranked;
    if (const auto* ord = std::get_if<SymbolOrder>(&crit)) {
        ranked = detail::ranked_symbols(*ord, universe);
    }
    auto key = [&](const DataGraph& g) -> detail::Cost {
        return std::visit(
            [&](const auto& c) -> detail::Cost {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, WeightSpec>) {
                    return {weight_of(g, c)};
                } else if constexpr (std::is_same_v<T, SymbolOrder>) {
                    const auto m = multiset_of(g);
                    detail::Cost out;
                    for (const auto& s : ranked) {
                        out.push_back(m.count(s));
                    }
                    return out;
                } else {
                    return {g.size()};
                }
            },
            crit);
    };
    const DataGraph* best = nullptr;
    detail::Cost best_key;
    for (const auto& g : repairs) {
        auto k = key(g);
        const bool better = best == nullptr || (mode == RepairMode::Subset ? k > best_key : k < best_key) ||
                            (k == best_key && g < *best);
        if (better) {
            best = &g;
            best_key = std::move(k);
        }
    }
    return *best;
}

}  // namespace gxrepair
