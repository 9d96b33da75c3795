// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gxrepair/error.hpp"
#include "repair_internal.hpp"

namespace gxrepair {

using detail::Bits;
using detail::Cost;
using detail::Counter;
using detail::SubsetSpace;

namespace {

// Walks every removal set whose cost does not exceed `target` (nodes first,
// then the edges left between kept nodes) and reports those costing exactly
// `target`. Remembers the least cost that went over, which is the next
// threshold worth trying.
class RemovalEnumerator {
  public:
    using Visit = std::function<bool(const Bits& nodes, const Bits& edges)>;

    RemovalEnumerator(const SubsetSpace& space, const detail::CostModel& model, Counter& counter)
        : space_(space), counter_(counter), nodes_(space.node_count()), edges_(space.edge_count()),
          cost_(model.zero()) {
        for (std::size_t v = 0; v < space.node_count(); ++v) {
            node_cost_.push_back(model.node(space.data(v)));
        }
        for (const auto& e : space.edges()) {
            edge_cost_.push_back(model.edge(e.label));
        }
    }

    // Returns false when `visit` asked to stop.
    bool run(const Cost& target, const Visit& visit) {
        target_ = target;
        visit_ = &visit;
        next_.reset();
        stopped_ = false;
        walk_nodes(0);
        return !stopped_;
    }

    [[nodiscard]] const std::optional<Cost>& next() const { return next_; }

  private:
    void over(const Cost& c) {
        if (!next_ || c < *next_) {
            next_ = c;
        }
    }

    void walk_nodes(std::size_t v) {
        if (stopped_) {
            return;
        }
        counter_.step();
        if (v == space_.node_count()) {
            walk_edges(0);
            return;
        }
        walk_nodes(v + 1);
        nodes_[v] = true;
        const Cost saved = cost_;
        std::vector<std::size_t> newly;
        detail::add_to(cost_, node_cost_[v]);
        for (auto k : space_.incident(v)) {
            if (!edges_[k]) {
                edges_[k] = true;
                newly.push_back(k);
                detail::add_to(cost_, edge_cost_[k]);
            }
        }
        if (cost_ <= target_) {
            walk_nodes(v + 1);
        } else {
            over(cost_);
        }
        for (auto k : newly) {
            edges_[k] = false;
        }
        cost_ = saved;
        nodes_[v] = false;
    }

    void walk_edges(std::size_t k) {
        while (k < space_.edge_count() && edges_[k]) {
            ++k;
        }
        if (stopped_) {
            return;
        }
        if (k == space_.edge_count()) {
            if (cost_ == target_ && !(*visit_)(nodes_, edges_)) {
                stopped_ = true;
            }
            return;
        }
        counter_.step();
        walk_edges(k + 1);
        edges_[k] = true;
        detail::add_to(cost_, edge_cost_[k]);
        if (cost_ <= target_) {
            walk_edges(k + 1);
        } else {
            over(cost_);
        }
        detail::sub_from(cost_, edge_cost_[k]);
        edges_[k] = false;
    }

    const SubsetSpace& space_;
    Counter& counter_;
    std::vector<Cost> node_cost_;
    std::vector<Cost> edge_cost_;
    Bits nodes_;
    Bits edges_;
    Cost cost_;
    Cost target_;
    const Visit* visit_ = nullptr;
    std::optional<Cost> next_;
    bool stopped_ = false;
};

RepairStatus status_of(const DataGraph& repair) {
    return repair.empty() ? RepairStatus::Trivial : RepairStatus::Repaired;
}

}  // namespace

DataGraph positive_node_subset_repair(const DataGraph& g, const ConstraintSet& r) {
    if (!is_positive_node_set(r)) {
        throw std::invalid_argument("iterative deletion needs positive node constraints only");
    }
    DataGraph current = g;
    for (;;) {
        const IndexedGraph ig(current);
        const auto violations = all_violations(ig, r);
        if (violations.empty()) {
            return current;
        }
        for (const auto& v : violations) {
            current.remove_node(ig.ids()[v.from]);
        }
    }
}

std::vector<DataGraph> subset_repairs(const DataGraph& g, const ConstraintSet& r, std::optional<std::size_t> limit,
                                      const SearchBudget& budget) {
    if (limit && *limit == 0) {
        return {};
    }
    if (is_positive_node_set(r)) {
        return {positive_node_subset_repair(g, r)};
    }
    const SubsetSpace space(g);
    Counter counter(budget.max_explored);
    const auto model = detail::CostModel::unit();
    RemovalEnumerator walk(space, model, counter);

    std::vector<DataGraph> out;
    std::vector<Bits> found;
    std::optional<Cost> target = model.zero();
    while (target) {
        std::vector<DataGraph> level;
        std::vector<Bits> keys;
        walk.run(*target, [&](const Bits& nodes, const Bits& edges) {
            Bits key = detail::removal_key(nodes, edges);
            if (std::any_of(found.begin(), found.end(), [&](const Bits& f) { return f.is_subset_of(key); })) {
                return true;
            }
            counter.tick();
            if (is_consistent(space.build(nodes, edges), r)) {
                level.push_back(space.to_graph(nodes, edges));
                keys.push_back(std::move(key));
            }
            return true;
        });
        std::sort(level.begin(), level.end());
        for (auto& rep : level) {
            out.push_back(std::move(rep));
            if (limit && out.size() == *limit) {
                return out;
            }
        }
        found.insert(found.end(), keys.begin(), keys.end());
        target = walk.next();
    }
    return out;
}

std::optional<Maximality> verify_subset_maximality(const DataGraph& g, const DataGraph& repair,
                                                   const ConstraintSet& r, std::size_t exact_limit) {
    if (!is_subgraph(repair, g) || !is_consistent(IndexedGraph(repair), r)) {
        return std::nullopt;
    }
    std::vector<std::pair<NodeId, DataValue>> nodes;
    std::vector<Edge> edges;
    for (const auto& [id, value] : g.nodes()) {
        if (!repair.contains_node(id)) {
            nodes.emplace_back(id, value);
        }
    }
    for (const auto& e : g.edges()) {
        if (!repair.contains_edge(e)) {
            edges.push_back(e);
        }
    }
    const std::size_t k = nodes.size() + edges.size();
    if (k <= exact_limit && k < 63) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
            DataGraph h = repair;
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                if ((mask >> i) & 1U) {
                    h.add_node(nodes[i].first, nodes[i].second);
                }
            }
            bool ok = true;
            for (std::size_t i = 0; i < edges.size() && ok; ++i) {
                if ((mask >> (nodes.size() + i)) & 1U) {
                    ok = h.contains_node(edges[i].from) && h.contains_node(edges[i].to);
                    if (ok) {
                        h.add_edge(edges[i]);
                    }
                }
            }
            if (ok && is_consistent(IndexedGraph(h), r)) {
                return std::nullopt;
            }
        }
        return Maximality::Verified;
    }
    for (const auto& [id, value] : nodes) {
        DataGraph h = repair;
        h.add_node(id, value);
        if (is_consistent(IndexedGraph(h), r)) {
            return std::nullopt;
        }
    }
    for (const auto& e : edges) {
        if (repair.contains_node(e.from) && repair.contains_node(e.to)) {
            DataGraph h = repair;
            h.add_edge(e);
            if (is_consistent(IndexedGraph(h), r)) {
                return std::nullopt;
            }
        }
    }
    return Maximality::OneStepLocal;
}

RepairResult find_preferred_subset_repair(const DataGraph& g, const ConstraintSet& r,
                                          const PreferenceCriterion& crit, const SearchBudget& budget) {
    RepairResult result;
    if (is_consistent(IndexedGraph(g), r)) {
        result.repair = g;
        result.status = status_of(g);
        result.explored = 1;
        return result;
    }
    if (is_positive_node_set(r)) {
        // the unique repair is preferred under every criterion
        result.repair = positive_node_subset_repair(g, r);
        result.status = status_of(*result.repair);
        result.explored = 1;
        return result;
    }

    const SubsetSpace space(g);
    Counter counter(budget.max_explored);
    const detail::CostModel model(crit, detail::symbols_of(g));
    RemovalEnumerator walk(space, model, counter);

    std::vector<Bits> keys;
    std::vector<DataGraph> graphs;
    std::optional<Cost> target = model.zero();
    while (target && graphs.empty()) {
        walk.run(*target, [&](const Bits& nodes, const Bits& edges) {
            counter.tick();
            if (is_consistent(space.build(nodes, edges), r)) {
                keys.push_back(detail::removal_key(nodes, edges));
                graphs.push_back(space.to_graph(nodes, edges));
            }
            return true;
        });
        target = walk.next();
    }
    // equal-cost ties that strictly contain another tie remove zero-cost extras
    const DataGraph* best = nullptr;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const bool dominated = std::any_of(keys.begin(), keys.end(), [&](const Bits& other) {
            return other != keys[i] && other.is_subset_of(keys[i]);
        });
        if (!dominated && (best == nullptr || graphs[i] < *best)) {
            best = &graphs[i];
        }
    }
    if (best == nullptr) {
        throw std::logic_error("subset search found no consistent subgraph");
    }
    const auto maximality = verify_subset_maximality(g, *best, r);
    if (!maximality) {
        throw std::logic_error("preferred subset candidate is not maximal");
    }
    result.repair = *best;
    result.status = status_of(*best);
    result.maximality = *maximality;
    result.explored = counter.explored();
    return result;
}

std::vector<DataGraph> all_preferred_subset_repairs(const DataGraph& g, const ConstraintSet& r,
                                                    const PreferenceCriterion& crit, const SearchBudget& budget) {
    const auto all = subset_repairs(g, r, std::nullopt, budget);
    std::vector<DataGraph> out;
    for (const auto& rep : all) {
        const bool dominated =
            std::any_of(all.begin(), all.end(), [&](const DataGraph& other) { return graph_less(rep, other, crit); });
        if (!dominated) {
            out.push_back(rep);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool has_nontrivial_preferred_subset_repair(const DataGraph& g, const ConstraintSet& r,
                                            const PreferenceCriterion& /*crit*/, const SearchBudget& budget) {
    if (g.empty()) {
        return false;
    }
    if (is_consistent(IndexedGraph(g), r)) {
        return true;
    }
    if (is_positive_node_set(r)) {
        return !positive_node_subset_repair(g, r).empty();
    }
    // Smallest kept sets first: a non-empty repair exists iff some non-empty
    // subgraph is consistent.
    const SubsetSpace space(g);
    Counter counter(budget.max_explored);
    const std::size_t n = space.node_count();
    const std::size_t m = space.edge_count();
    Bits removed_nodes(n);
    Bits removed_edges(m);
    removed_nodes.set();
    removed_edges.set();

    std::function<bool(std::size_t, std::size_t, std::size_t, std::size_t)> walk;
    walk = [&](std::size_t i, std::size_t kept, std::size_t kept_nodes, std::size_t target) -> bool {
        counter.step();
        if (kept > target) {
            return false;
        }
        if (i == n + m) {
            if (kept != target || kept_nodes == 0) {
                return false;
            }
            counter.tick();
            return is_consistent(space.build(removed_nodes, removed_edges), r);
        }
        if (i < n) {
            if (walk(i + 1, kept, kept_nodes, target)) {
                return true;
            }
            removed_nodes[i] = false;
            const bool hit = walk(i + 1, kept + 1, kept_nodes + 1, target);
            removed_nodes[i] = true;
            return hit;
        }
        const auto& e = space.edges()[i - n];
        if (walk(i + 1, kept, kept_nodes, target)) {
            return true;
        }
        if (removed_nodes[e.from] || removed_nodes[e.to]) {
            return false;
        }
        removed_edges[i - n] = false;
        const bool hit = walk(i + 1, kept + 1, kept_nodes, target);
        removed_edges[i - n] = true;
        return hit;
    };
    for (std::size_t target = 1; target < n + m; ++target) {
        if (walk(0, 0, 0, target)) {
            return true;
        }
    }
    return false;
}

}  // namespace gxrepair
