// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <functional>

#include "gxrepair/error.hpp"
#include "repair_internal.hpp"

namespace gxrepair {

using detail::Bits;
using detail::Cost;
using detail::Counter;
using detail::SupersetSpace;

namespace {

// Walks every canonical addition set whose cost does not exceed `target` and
// reports those costing exactly `target`, remembering the least cost that
// went over.
class AdditionEnumerator {
  public:
    using Visit = std::function<bool(const Bits& chosen)>;

    AdditionEnumerator(const SupersetSpace& space, Counter& counter)
        : space_(space), counter_(counter), chosen_(space.size()) {}

    bool run(const Cost& zero, const Cost& target, const Visit& visit) {
        target_ = target;
        cost_ = zero;
        visit_ = &visit;
        next_.reset();
        stopped_ = false;
        walk(0);
        return !stopped_;
    }

    [[nodiscard]] const std::optional<Cost>& next() const { return next_; }

  private:
    void walk(std::size_t i) {
        if (stopped_) {
            return;
        }
        counter_.step();
        if (i == space_.size()) {
            if (cost_ == target_ && space_.valid(chosen_, true) && !(*visit_)(chosen_)) {
                stopped_ = true;
            }
            return;
        }
        walk(i + 1);
        if (space_.conflicts(chosen_, i)) {
            return;
        }
        const Cost& ci = space_.candidates()[i].cost;
        detail::add_to(cost_, ci);
        if (cost_ <= target_) {
            chosen_[i] = true;
            walk(i + 1);
            chosen_[i] = false;
        } else if (!next_ || cost_ < *next_) {
            next_ = cost_;
        }
        detail::sub_from(cost_, ci);
    }

    const SupersetSpace& space_;
    Counter& counter_;
    Bits chosen_;
    Cost cost_;
    Cost target_;
    const Visit* visit_ = nullptr;
    std::optional<Cost> next_;
    bool stopped_ = false;
};

// Some proper subset of `chosen` that is still a graph is consistent. Only
// needed with fresh nodes, where such a subset may use slots out of order and
// so never be enumerated itself.
bool has_consistent_proper_subset(const SupersetSpace& space, const Bits& chosen, const ConstraintSet& r,
                                  Counter& counter) {
    std::vector<std::size_t> items;
    for (auto i = chosen.find_first(); i != Bits::npos; i = chosen.find_next(i)) {
        items.push_back(i);
    }
    if (items.size() >= 63) {
        throw BudgetExceeded("repair too large to verify minimality");
    }
    const std::uint64_t full = (std::uint64_t{1} << items.size()) - 1;
    for (std::uint64_t mask = 0; mask < full; ++mask) {
        Bits t(space.size());
        for (std::size_t j = 0; j < items.size(); ++j) {
            if ((mask >> j) & 1U) {
                t[items[j]] = true;
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

std::set<Symbol> cost_universe(const DataGraph& g, const SupersetSpace& space) {
    auto u = detail::symbols_of(g);
    u.merge(space.varying_symbols());
    return u;
}

bool use_guided(const SupersetSpace& space, const ConstraintSet& r) {
    return space.slot_count() == 0 && is_positive_set(r);
}

std::optional<detail::GuidedResult> cheapest(const SupersetSpace& space, const ConstraintSet& r,
                                             std::optional<Cost> bound, bool first_only, Counter& counter) {
    if (use_guided(space, r)) {
        return detail::guided_superset_search(space, r, std::move(bound), !first_only, first_only, counter);
    }
    return detail::deepening_superset_search(space, r, std::move(bound), first_only, counter);
}

}  // namespace

namespace detail {

std::optional<GuidedResult> deepening_superset_search(const SupersetSpace& space, const ConstraintSet& r,
                                                      std::optional<Cost> bound, bool first_only,
                                                      Counter& counter) {
    AdditionEnumerator walk(space, counter);
    const Cost zero = space.cost(Bits(space.size()));
    std::optional<Cost> target = zero;
    while (target) {
        if (bound && *target > *bound) {
            return std::nullopt;
        }
        std::vector<Bits> found;
        walk.run(zero, *target, [&](const Bits& chosen) {
            counter.tick();
            if (is_consistent(space.build(chosen), r)) {
                found.push_back(chosen);
                return !first_only;
            }
            return true;
        });
        if (!found.empty()) {
            if (!first_only) {
                std::erase_if(found, [&](const Bits& s) { return has_cheaper_free_subset(space, s, r, counter); });
            }
            return GuidedResult{*target, std::move(found)};
        }
        target = walk.next();
    }
    return std::nullopt;
}

}  // namespace detail

std::vector<DataGraph> superset_repairs(const DataGraph& g, const ConstraintSet& r, const SearchBudget& budget,
                                        std::optional<std::size_t> limit) {
    if (limit && *limit == 0) {
        return {};
    }
    if (is_consistent(IndexedGraph(g), r)) {
        return {g};
    }
    const SupersetSpace space(g, r, budget);
    Counter counter(budget.max_explored);
    AdditionEnumerator walk(space, counter);
    const Cost zero = space.cost(Bits(space.size()));

    std::vector<DataGraph> out;
    std::vector<Bits> found;
    std::optional<Cost> target = zero;
    while (target && (!budget.max_repair_size || (*target)[0] <= *budget.max_repair_size)) {
        std::vector<DataGraph> level;
        std::vector<Bits> keys;
        walk.run(zero, *target, [&](const Bits& chosen) {
            if (std::any_of(found.begin(), found.end(), [&](const Bits& f) { return f.is_subset_of(chosen); })) {
                return true;
            }
            counter.tick();
            if (!is_consistent(space.build(chosen), r)) {
                return true;
            }
            if (space.slot_count() == 0 || !has_consistent_proper_subset(space, chosen, r, counter)) {
                level.push_back(space.to_graph(chosen));
                keys.push_back(chosen);
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

RepairResult find_preferred_superset_repair(const DataGraph& g, const ConstraintSet& r,
                                            const PreferenceCriterion& crit, const SearchBudget& budget) {
    RepairResult result;
    if (is_consistent(IndexedGraph(g), r)) {
        result.repair = g;
        result.status = RepairStatus::Repaired;
        result.explored = 1;
        return result;
    }
    SupersetSpace space(g, r, budget);
    space.set_costs(detail::CostModel(crit, cost_universe(g, space)));
    Counter counter(budget.max_explored);
    const auto found = cheapest(space, r, std::nullopt, false, counter);
    result.explored = counter.explored();
    if (!found || found->solutions.empty()) {
        result.status = RepairStatus::UnknownBeyondBudget;
        return result;
    }
    std::vector<DataGraph> graphs;
    for (const auto& s : found->solutions) {
        graphs.push_back(space.to_graph(s));
    }
    result.repair = *std::min_element(graphs.begin(), graphs.end());
    result.status = RepairStatus::Repaired;
    return result;
}

std::vector<DataGraph> all_preferred_superset_repairs(const DataGraph& g, const ConstraintSet& r,
                                                      const PreferenceCriterion& crit, const SearchBudget& budget) {
    const auto all = superset_repairs(g, r, budget);
    std::vector<DataGraph> out;
    for (const auto& rep : all) {
        const bool dominated =
            std::any_of(all.begin(), all.end(), [&](const DataGraph& other) { return graph_less(other, rep, crit); });
        if (!dominated) {
            out.push_back(rep);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool decide_pi_w(const DataGraph& g, const ConstraintSet& r, const WeightSpec& w, std::uint64_t k,
                 const SearchBudget& budget) {
    const std::uint64_t base = weight_of(g, w);
    if (k < base) {
        return false;
    }
    if (is_consistent(IndexedGraph(g), r)) {
        return true;
    }
    SupersetSpace space(g, r, budget);
    space.set_costs(detail::CostModel(w, {}));
    Counter counter(budget.max_explored);
    return cheapest(space, r, Cost{k - base}, true, counter).has_value();
}

bool decide_pi_mset(const DataGraph& g, const ConstraintSet& r, const SymbolOrder& ord, const EdgeLabel& label,
                    std::uint64_t k, const SearchBudget& budget) {
    const Symbol target{SymbolKind::EdgeLabel, label};
    const std::uint64_t present = multiset_of(g).count(target);
    if (is_consistent(IndexedGraph(g), r)) {
        return present <= k;
    }
    SupersetSpace space(g, r, budget);
    std::set<std::string> varying;
    for (const auto& s : space.varying_symbols()) {
        varying.insert(s.name);
    }
    if (ord.is_total_on(varying)) {
        // every preferred repair then adds the same multiset
        space.set_costs(detail::CostModel(ord, cost_universe(g, space)));
        Counter counter(budget.max_explored);
        const auto found = cheapest(space, r, std::nullopt, false, counter);
        if (!found || found->solutions.empty()) {
            return false;
        }
        std::uint64_t added = 0;
        const Bits& s = found->solutions.front();
        for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) {
            const auto& c = space.candidates()[i];
            added += !c.is_node && c.label == label ? 1 : 0;
        }
        return present + added <= k;
    }
    const auto preferred = all_preferred_superset_repairs(g, r, ord, budget);
    return std::any_of(preferred.begin(), preferred.end(),
                       [&](const DataGraph& rep) { return multiset_of(rep).count(target) <= k; });
}

}  // namespace gxrepair
