// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Branch-and-bound for superset repairs under positive constraints. Adding
// edges never removes a match, so a violation can only be fixed by adding a
// candidate that takes part in some derivation of it in the graph holding
// every candidate. Those candidates are precomputed per sub-expression and
// node (or node pair) and drive the branching.
#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "repair_internal.hpp"

namespace gxrepair::detail {

namespace {

struct PathProv {
    Relation rel;
    std::vector<Bits> p;  // indexed u * n + w, empty where rel is false
};

struct NodeProv {
    NodeMask mask;
    std::vector<Bits> p;
};

class Provenance {
  public:
    Provenance(const SupersetSpace& space, const IndexedGraph& full)
        : f_(full), n_(full.size()), c_(space.size()) {
        const auto cells = static_cast<std::size_t>(n_ * n_);
        for (const auto& l : space.labels()) {
            labels_.emplace(l, std::vector<long>(cells, -1));
        }
        for (std::size_t i = 0; i < space.size(); ++i) {
            const auto& c = space.candidates()[i];
            labels_.at(c.label)[c.from * n_ + c.to] = static_cast<long>(i);
        }
    }

    const PathProv& path(const PathExpr& e) {
        if (auto it = path_memo_.find(&e); it != path_memo_.end()) {
            return it->second;
        }
        PathProv out = compute(e);
        return path_memo_.emplace(&e, std::move(out)).first->second;
    }

    const NodeProv& node(const NodeExpr& e) {
        if (auto it = node_memo_.find(&e); it != node_memo_.end()) {
            return it->second;
        }
        NodeProv out = compute(e);
        return node_memo_.emplace(&e, std::move(out)).first->second;
    }

  private:
    [[nodiscard]] std::size_t at(Eigen::Index u, Eigen::Index w) const {
        return static_cast<std::size_t>(u * n_ + w);
    }

    PathProv blank(Relation rel) const {
        return PathProv{std::move(rel), std::vector<Bits>(static_cast<std::size_t>(n_ * n_), Bits(c_))};
    }

    PathProv label(const EdgeLabel& l, bool inverse) const {
        PathProv out = blank(inverse ? Relation(f_.adjacency(l).transpose()) : f_.adjacency(l));
        auto it = labels_.find(l);
        if (it == labels_.end()) {
            return out;
        }
        for (Eigen::Index u = 0; u < n_; ++u) {
            for (Eigen::Index w = 0; w < n_; ++w) {
                const long id = inverse ? it->second[at(w, u)] : it->second[at(u, w)];
                if (id >= 0) {
                    out.p[at(u, w)].set(static_cast<std::size_t>(id));
                }
            }
        }
        return out;
    }

    PathProv concat(const PathProv& a, const PathProv& b) const {
        PathProv out = blank(rel::compose(a.rel, b.rel));
        for (Eigen::Index u = 0; u < n_; ++u) {
            for (Eigen::Index z = 0; z < n_; ++z) {
                if (!a.rel(u, z)) {
                    continue;
                }
                for (Eigen::Index w = 0; w < n_; ++w) {
                    if (b.rel(z, w)) {
                        out.p[at(u, w)] |= a.p[at(u, z)];
                        out.p[at(u, w)] |= b.p[at(z, w)];
                    }
                }
            }
        }
        return out;
    }

    PathProv unite(const PathProv& a, const PathProv& b) const {
        PathProv out = blank(a.rel || b.rel);
        for (std::size_t i = 0; i < out.p.size(); ++i) {
            out.p[i] = a.p[i] | b.p[i];
        }
        return out;
    }

    PathProv compute(const PathExpr& e) {
        return std::visit(
            [&](const auto& x) -> PathProv {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, path::Epsilon>) {
                    return blank(rel::identity(n_));
                } else if constexpr (std::is_same_v<T, path::Wildcard>) {
                    PathProv out = blank(f_.any_edge());
                    for (const auto& [l, ids] : labels_) {
                        for (std::size_t i = 0; i < ids.size(); ++i) {
                            if (ids[i] >= 0) {
                                out.p[i].set(static_cast<std::size_t>(ids[i]));
                            }
                        }
                    }
                    return out;
                } else if constexpr (std::is_same_v<T, path::Label>) {
                    return label(x.name, false);
                } else if constexpr (std::is_same_v<T, path::Inverse>) {
                    return label(x.name, true);
                } else if constexpr (std::is_same_v<T, path::Concat>) {
                    return concat(path(*x.lhs), path(*x.rhs));
                } else if constexpr (std::is_same_v<T, path::Union>) {
                    return unite(path(*x.lhs), path(*x.rhs));
                } else if constexpr (std::is_same_v<T, path::Intersect>) {
                    const auto& a = path(*x.lhs);
                    const auto& b = path(*x.rhs);
                    PathProv out = blank(a.rel && b.rel);
                    for (std::size_t i = 0; i < out.p.size(); ++i) {
                        if (out.rel(static_cast<Eigen::Index>(i) / n_, static_cast<Eigen::Index>(i) % n_)) {
                            out.p[i] = a.p[i] | b.p[i];
                        }
                    }
                    return out;
                } else if constexpr (std::is_same_v<T, path::Star>) {
                    PathProv acc = unite(blank(rel::identity(n_)), path(*x.arg));
                    for (;;) {
                        PathProv next = unite(acc, concat(acc, acc));
                        if ((next.rel == acc.rel).all() && next.p == acc.p) {
                            return acc;
                        }
                        acc = std::move(next);
                    }
                } else if constexpr (std::is_same_v<T, path::Repeat>) {
                    const PathProv& base = path(*x.arg);
                    PathProv step = blank(rel::identity(n_));
                    for (std::size_t k = 0; k < x.min; ++k) {
                        step = concat(step, base);
                    }
                    PathProv acc = step;
                    for (std::size_t k = x.min; k < x.max; ++k) {
                        step = concat(step, base);
                        acc = unite(acc, step);
                    }
                    return acc;
                } else if constexpr (std::is_same_v<T, path::NodeTest>) {
                    const auto& phi = node(*x.test);
                    PathProv out = blank(rel::diagonal(phi.mask));
                    for (Eigen::Index v = 0; v < n_; ++v) {
                        out.p[at(v, v)] = phi.p[static_cast<std::size_t>(v)];
                    }
                    return out;
                } else {
                    static_assert(std::is_same_v<T, path::Complement>);
                    throw std::logic_error("guided search needs positive constraints");
                }
            },
            e.v);
    }

    NodeProv blank_node(NodeMask m) const {
        return NodeProv{std::move(m), std::vector<Bits>(static_cast<std::size_t>(n_), Bits(c_))};
    }

    NodeProv compute(const NodeExpr& e) {
        return std::visit(
            [&](const auto& x) -> NodeProv {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, node::DataEq>) {
                    return blank_node(f_.data_is(x.value));
                } else if constexpr (std::is_same_v<T, node::DataNeq>) {
                    return blank_node(!f_.data_is(x.value));
                } else if constexpr (std::is_same_v<T, node::Or> || std::is_same_v<T, node::And>) {
                    const auto& a = node(*x.lhs);
                    const auto& b = node(*x.rhs);
                    NodeProv out = blank_node(std::is_same_v<T, node::Or> ? NodeMask(a.mask || b.mask)
                                                                           : NodeMask(a.mask && b.mask));
                    for (std::size_t v = 0; v < out.p.size(); ++v) {
                        if (out.mask(static_cast<Eigen::Index>(v))) {
                            out.p[v] = a.p[v] | b.p[v];
                        }
                    }
                    return out;
                } else if constexpr (std::is_same_v<T, node::Exists>) {
                    const auto& a = path(*x.path);
                    NodeProv out = blank_node(rel::domain(a.rel));
                    for (Eigen::Index v = 0; v < n_; ++v) {
                        for (Eigen::Index w = 0; w < n_; ++w) {
                            if (a.rel(v, w)) {
                                out.p[static_cast<std::size_t>(v)] |= a.p[at(v, w)];
                            }
                        }
                    }
                    return out;
                } else if constexpr (std::is_same_v<T, node::ExistsEq> || std::is_same_v<T, node::ExistsNeq>) {
                    const auto& a = path(*x.lhs);
                    const auto& b = path(*x.rhs);
                    const bool want_equal = std::is_same_v<T, node::ExistsEq>;
                    NodeProv out = blank_node(NodeMask::Constant(n_, false));
                    for (Eigen::Index v = 0; v < n_; ++v) {
                        auto& p = out.p[static_cast<std::size_t>(v)];
                        for (Eigen::Index w1 = 0; w1 < n_; ++w1) {
                            if (!a.rel(v, w1)) {
                                continue;
                            }
                            for (Eigen::Index w2 = 0; w2 < n_; ++w2) {
                                if (b.rel(v, w2) && f_.data_equal()(w1, w2) == want_equal) {
                                    out.mask(v) = true;
                                    p |= a.p[at(v, w1)];
                                    p |= b.p[at(v, w2)];
                                }
                            }
                        }
                    }
                    return out;
                } else {
                    static_assert(std::is_same_v<T, node::Not>);
                    throw std::logic_error("guided search needs positive constraints");
                }
            },
            e.v);
    }

    const IndexedGraph& f_;
    Eigen::Index n_;
    std::size_t c_;
    std::map<EdgeLabel, std::vector<long>> labels_;
    std::unordered_map<const PathExpr*, PathProv> path_memo_;
    std::unordered_map<const NodeExpr*, NodeProv> node_memo_;
};

class Guided {
  public:
    Guided(const SupersetSpace& space, const ConstraintSet& r, Provenance& prov, std::optional<Cost> limit,
           bool collect_ties, bool first_only, Counter& counter)
        : space_(space), r_(r), prov_(prov), limit_(std::move(limit)), ties_(collect_ties), first_(first_only),
          counter_(counter), included_(space.size()), excluded_(space.size()) {}

    void record(const Bits& chosen, const Cost& cost) {
        if (!within(cost)) {
            return;
        }
        if (!best_ || cost < *best_) {
            best_ = cost;
            solutions_.clear();
        }
        solutions_.push_back(chosen);
        done_ = first_;
    }

    void run(const Cost& zero) {
        cost_ = zero;
        dfs();
    }

    [[nodiscard]] const std::optional<Cost>& best() const { return best_; }
    [[nodiscard]] std::vector<Bits>& solutions() { return solutions_; }

  private:
    [[nodiscard]] bool within(const Cost& c) const {
        if (limit_ && c > *limit_) {
            return false;
        }
        return !best_ || (ties_ ? c <= *best_ : c < *best_);
    }

    [[nodiscard]] const Bits& relevant(const IndexedViolation& v) {
        const auto& c = r_.items()[v.constraint];
        if (const auto* phi = std::get_if<NodePtr>(&c.expr)) {
            return prov_.node(**phi).p[static_cast<std::size_t>(v.from)];
        }
        const auto n = static_cast<std::size_t>(space_.base_count());
        return prov_.path(*std::get<PathPtr>(c.expr)).p[static_cast<std::size_t>(v.from) * n +
                                                         static_cast<std::size_t>(v.to)];
    }

    void dfs() {
        if (done_) {
            return;
        }
        counter_.step();
        counter_.tick();
        const auto violations = all_violations(space_.build(included_), r_);
        if (violations.empty()) {
            record(included_, cost_);
            return;
        }
        counter_.tick();
        if (!is_consistent(space_.build(~excluded_), r_)) {
            return;
        }

        const Bits open = ~(included_ | excluded_);
        std::optional<Cost> bound;
        Bits branch;
        std::size_t branch_size = 0;
        for (const auto& v : violations) {
            const Bits cand = relevant(v) & open;
            if (cand.none()) {
                return;
            }
            std::optional<Cost> cheapest;
            for (auto i = cand.find_first(); i != Bits::npos; i = cand.find_next(i)) {
                const Cost& ci = space_.candidates()[i].cost;
                if (!cheapest || ci < *cheapest) {
                    cheapest = ci;
                }
            }
            if (!bound || *bound < *cheapest) {
                bound = cheapest;
            }
            const std::size_t size = cand.count();
            if (branch.empty() || size < branch_size) {
                branch = cand;
                branch_size = size;
            }
        }
        Cost lower = cost_;
        add_to(lower, *bound);
        if (!within(lower)) {
            return;
        }

        std::vector<std::size_t> order;
        for (auto i = branch.find_first(); i != Bits::npos; i = branch.find_next(i)) {
            order.push_back(i);
        }
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return space_.candidates()[a].cost < space_.candidates()[b].cost;
        });
        std::vector<std::size_t> shut;
        for (auto i : order) {
            const Cost& ci = space_.candidates()[i].cost;
            Cost next = cost_;
            add_to(next, ci);
            if (!within(next) || done_) {
                break;
            }
            const Cost saved = cost_;
            cost_ = std::move(next);
            included_[i] = true;
            dfs();
            included_[i] = false;
            cost_ = saved;
            excluded_[i] = true;
            shut.push_back(i);
        }
        for (auto i : shut) {
            excluded_[i] = false;
        }
    }

    const SupersetSpace& space_;
    const ConstraintSet& r_;
    Provenance& prov_;
    std::optional<Cost> limit_;
    bool ties_;
    bool first_;
    Counter& counter_;
    Bits included_;
    Bits excluded_;
    Cost cost_;
    std::optional<Cost> best_;
    std::vector<Bits> solutions_;
    bool done_ = false;
};

// Drops candidates from the full space, most expensive first, while the
// graph stays consistent. The result is ⊆-minimal because dropping only
// loses matches.
Bits greedy_minimal(const SupersetSpace& space, const ConstraintSet& r, Counter& counter) {
    Bits chosen(space.size());
    chosen.set();
    std::vector<std::size_t> order(space.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return space.candidates()[b].cost < space.candidates()[a].cost;
    });
    for (auto i : order) {
        chosen[i] = false;
        counter.tick();
        if (!is_consistent(space.build(chosen), r)) {
            chosen[i] = true;
        }
    }
    return chosen;
}

}  // namespace

std::optional<GuidedResult> guided_superset_search(const SupersetSpace& space, const ConstraintSet& r,
                                                   std::optional<Cost> bound, bool collect_ties, bool first_only,
                                                   Counter& counter) {
    if (space.slot_count() != 0 || !is_positive_set(r)) {
        throw std::logic_error("guided search needs positive constraints and no fresh nodes");
    }
    Bits all(space.size());
    all.set();
    const IndexedGraph full = space.build(all);
    counter.tick();
    if (!is_consistent(full, r)) {
        return std::nullopt;
    }
    Provenance prov(space, full);
    Guided search(space, r, prov, bound, collect_ties, first_only, counter);

    const Bits start = greedy_minimal(space, r, counter);
    search.record(start, space.cost(start));
    if (!(first_only && search.best())) {
        search.run(space.cost(Bits(space.size())));
    }
    if (!search.best()) {
        return std::nullopt;
    }
    auto& sols = search.solutions();
    std::sort(sols.begin(), sols.end());
    sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
    if (!first_only) {
        std::erase_if(sols, [&](const Bits& s) { return has_cheaper_free_subset(space, s, r, counter); });
    }
    return GuidedResult{*search.best(), std::move(sols)};
}

}  // namespace gxrepair::detail
