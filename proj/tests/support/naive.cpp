// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#include "naive.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace gxrepair::testing {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Pairs identity(const DataGraph& g) {
    Pairs out;
    for (const auto& [v, d] : g.nodes()) {
        out.emplace(v, v);
    }
    return out;
}

Pairs compose(const Pairs& a, const Pairs& b) {
    Pairs out;
    for (const auto& [u, z] : a) {
        for (const auto& [z2, w] : b) {
            if (z == z2) {
                out.emplace(u, w);
            }
        }
    }
    return out;
}

}  // namespace

Pairs naive_path(const DataGraph& g, const PathExpr& e) {
    return std::visit(
        overloaded{
            [&](const path::Epsilon&) { return identity(g); },
            [&](const path::Wildcard&) {
                Pairs out;
                for (const auto& x : g.edges()) {
                    out.emplace(x.from, x.to);
                }
                return out;
            },
            [&](const path::Label& l) {
                Pairs out;
                for (const auto& x : g.edges()) {
                    if (x.label == l.name) {
                        out.emplace(x.from, x.to);
                    }
                }
                return out;
            },
            [&](const path::Inverse& l) {
                Pairs out;
                for (const auto& x : g.edges()) {
                    if (x.label == l.name) {
                        out.emplace(x.to, x.from);
                    }
                }
                return out;
            },
            [&](const path::Concat& c) { return compose(naive_path(g, *c.lhs), naive_path(g, *c.rhs)); },
            [&](const path::Union& c) {
                Pairs out = naive_path(g, *c.lhs);
                out.merge(naive_path(g, *c.rhs));
                return out;
            },
            [&](const path::Intersect& c) {
                const Pairs a = naive_path(g, *c.lhs);
                const Pairs b = naive_path(g, *c.rhs);
                Pairs out;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
                return out;
            },
            [&](const path::Star& s) {
                // least fixpoint of X = id + X.a
                const Pairs a = naive_path(g, *s.arg);
                Pairs acc = identity(g);
                for (;;) {
                    Pairs next = acc;
                    next.merge(compose(acc, a));
                    if (next == acc) {
                        return acc;
                    }
                    acc = std::move(next);
                }
            },
            [&](const path::Complement& c) {
                const Pairs a = naive_path(g, *c.arg);
                Pairs out;
                for (const auto& [u, du] : g.nodes()) {
                    for (const auto& [w, dw] : g.nodes()) {
                        if (!a.contains({u, w})) {
                            out.emplace(u, w);
                        }
                    }
                }
                return out;
            },
            [&](const path::NodeTest& t) {
                Pairs out;
                for (const auto& v : naive_node(g, *t.test)) {
                    out.emplace(v, v);
                }
                return out;
            },
            [&](const path::Repeat& r) {
                const Pairs a = naive_path(g, *r.arg);
                Pairs power = identity(g);
                Pairs out;
                for (std::size_t k = 0; k <= r.max; ++k) {
                    if (k >= r.min) {
                        out.insert(power.begin(), power.end());
                    }
                    power = compose(power, a);
                }
                return out;
            },
        },
        e.v);
}

Nodes naive_node(const DataGraph& g, const NodeExpr& e) {
    auto all = [&] {
        Nodes out;
        for (const auto& [v, d] : g.nodes()) {
            out.insert(v);
        }
        return out;
    };
    auto join = [&](const PathExpr& lhs, const PathExpr& rhs, bool equal) {
        const Pairs a = naive_path(g, lhs);
        const Pairs b = naive_path(g, rhs);
        Nodes out;
        for (const auto& [v, w1] : a) {
            for (const auto& [v2, w2] : b) {
                if (v == v2 && (g.data(w1) == g.data(w2)) == equal) {
                    out.insert(v);
                }
            }
        }
        return out;
    };
    return std::visit(overloaded{
                          [&](const node::DataEq& c) {
                              Nodes out;
                              for (const auto& [v, d] : g.nodes()) {
                                  if (d == c.value) {
                                      out.insert(v);
                                  }
                              }
                              return out;
                          },
                          [&](const node::DataNeq& c) {
                              Nodes out;
                              for (const auto& [v, d] : g.nodes()) {
                                  if (d != c.value) {
                                      out.insert(v);
                                  }
                              }
                              return out;
                          },
                          [&](const node::Not& n) {
                              const Nodes a = naive_node(g, *n.arg);
                              Nodes out;
                              for (const auto& v : all()) {
                                  if (!a.contains(v)) {
                                      out.insert(v);
                                  }
                              }
                              return out;
                          },
                          [&](const node::Or& n) {
                              Nodes out = naive_node(g, *n.lhs);
                              out.merge(naive_node(g, *n.rhs));
                              return out;
                          },
                          [&](const node::And& n) {
                              const Nodes a = naive_node(g, *n.lhs);
                              Nodes out;
                              for (const auto& v : naive_node(g, *n.rhs)) {
                                  if (a.contains(v)) {
                                      out.insert(v);
                                  }
                              }
                              return out;
                          },
                          [&](const node::Exists& n) {
                              Nodes out;
                              for (const auto& [v, w] : naive_path(g, *n.path)) {
                                  out.insert(v);
                              }
                              return out;
                          },
                          [&](const node::ExistsEq& n) { return join(*n.lhs, *n.rhs, true); },
                          [&](const node::ExistsNeq& n) { return join(*n.lhs, *n.rhs, false); },
                      },
                      e.v);
}

bool naive_consistent(const DataGraph& g, const ConstraintSet& r) {
    for (const auto& c : r.items()) {
        if (const auto* phi = std::get_if<NodePtr>(&c.expr)) {
            if (naive_node(g, **phi).size() != g.node_count()) {
                return false;
            }
        } else if (naive_path(g, *std::get<PathPtr>(c.expr)).size() != g.node_count() * g.node_count()) {
            return false;
        }
    }
    return true;
}

namespace {

struct Element {
    bool is_node;
    NodeId id;
    Edge edge;
};

bool contains_mask(std::uint32_t big, std::uint32_t small) { return (big & small) == small; }

// Indices of masks that are maximal (keep_max) or minimal under inclusion.
std::vector<std::uint32_t> extremal(const std::vector<std::uint32_t>& masks, bool keep_max) {
    std::vector<std::uint32_t> out;
    for (auto m : masks) {
        bool beaten = false;
        for (auto o : masks) {
            if (o != m && (keep_max ? contains_mask(o, m) : contains_mask(m, o))) {
                beaten = true;
                break;
            }
        }
        if (!beaten) {
            out.push_back(m);
        }
    }
    return out;
}

}  // namespace

std::vector<DataGraph> oracle_subset_repairs(const DataGraph& g, const ConstraintSet& r) {
    std::vector<Element> elems;
    for (const auto& [v, d] : g.nodes()) {
        elems.push_back({true, v, {}});
    }
    for (const auto& e : g.edges()) {
        elems.push_back({false, {}, e});
    }
    if (elems.size() > 20) {
        throw std::invalid_argument("oracle limited to 20 elements");
    }
    std::vector<std::uint32_t> consistent;
    std::map<std::uint32_t, DataGraph> graphs;
    for (std::uint32_t mask = 0; mask < (1U << elems.size()); ++mask) {
        DataGraph h;
        bool ok = true;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if ((mask >> i) & 1U) {
                if (elems[i].is_node) {
                    h.add_node(elems[i].id, g.data(elems[i].id));
                } else if (h.contains_node(elems[i].edge.from) && h.contains_node(elems[i].edge.to)) {
                    h.add_edge(elems[i].edge);
                } else {
                    ok = false;  // dangling edge: not a graph
                }
            }
        }
        if (ok && naive_consistent(h, r)) {
            consistent.push_back(mask);
            graphs.emplace(mask, std::move(h));
        }
    }
    std::vector<DataGraph> out;
    for (auto m : extremal(consistent, true)) {
        out.push_back(graphs.at(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<EdgeLabel> edge_alphabet(const DataGraph& g, const ConstraintSet& r) {
    auto out = g.edge_labels();
    out.merge(mentioned_labels(r));
    return out;
}

std::vector<Edge> missing_triples(const DataGraph& g, const std::set<EdgeLabel>& labels) {
    std::vector<Edge> out;
    for (const auto& [u, du] : g.nodes()) {
        for (const auto& [w, dw] : g.nodes()) {
            for (const auto& l : labels) {
                Edge e{u, w, l};
                if (!g.contains_edge(e)) {
                    out.push_back(std::move(e));
                }
            }
        }
    }
    return out;
}

std::vector<DataGraph> oracle_superset_repairs(const DataGraph& g, const ConstraintSet& r,
                                               const std::vector<Edge>& candidates) {
    if (candidates.size() > 20) {
        throw std::invalid_argument("oracle limited to 20 candidates");
    }
    std::vector<std::uint32_t> consistent;
    std::map<std::uint32_t, DataGraph> graphs;
    for (std::uint32_t mask = 0; mask < (1U << candidates.size()); ++mask) {
        DataGraph h = g;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if ((mask >> i) & 1U) {
                h.add_edge(candidates[i]);
            }
        }
        if (naive_consistent(h, r)) {
            consistent.push_back(mask);
            graphs.emplace(mask, std::move(h));
        }
    }
    std::vector<DataGraph> out;
    for (auto m : extremal(consistent, false)) {
        out.push_back(graphs.at(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DataGraph> undominated(const std::vector<DataGraph>& repairs, const PreferenceCriterion& crit,
                                   bool subset) {
    std::vector<DataGraph> out;
    for (const auto& a : repairs) {
        const bool beaten = std::any_of(repairs.begin(), repairs.end(), [&](const DataGraph& b) {
            return subset ? graph_less(a, b, crit) : graph_less(b, a, crit);
        });
        if (!beaten) {
            out.push_back(a);
        }
    }
    return out;
}

bool dm_less_by_replacement(const GraphMultiset& m1, const GraphMultiset& m2, const SymbolOrder& ord) {
    std::vector<std::pair<Symbol, std::uint64_t>> support(m2.counts().begin(), m2.counts().end());
    // X ranges over all sub-multisets of m2 via a mixed-radix counter.
    std::vector<std::uint64_t> x(support.size(), 0);
    for (;;) {
        std::size_t i = 0;
        while (i < x.size() && x[i] == support[i].second) {
            x[i] = 0;
            ++i;
        }
        if (i == x.size()) {
            return false;
        }
        ++x[i];
        // rest = m2 - X must be contained in m1; Y = m1 - rest
        bool fits = true;
        std::map<Symbol, std::uint64_t> rest;
        for (std::size_t k = 0; k < support.size(); ++k) {
            const std::uint64_t left = support[k].second - x[k];
            if (left > m1.count(support[k].first)) {
                fits = false;
                break;
            }
            rest[support[k].first] = left;
        }
        if (!fits) {
            continue;
        }
        bool covered = true;
        for (const auto& [y, c] : m1.counts()) {
            if (c <= rest[y]) {
                continue;
            }
            bool dominated = false;
            for (std::size_t k = 0; k < support.size(); ++k) {
                if (x[k] > 0 && ord.less(y.name, support[k].first.name)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) {
                covered = false;
                break;
            }
        }
        if (covered) {
            return true;
        }
    }
}

}  // namespace gxrepair::testing
