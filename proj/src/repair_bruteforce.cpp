// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <bit>
#include <functional>
#include <thread>

#include "gxrepair/error.hpp"
#include "repair_internal.hpp"

namespace gxrepair {

using detail::Bits;

namespace {

using Mask = std::uint64_t;

Mask space_size(std::size_t k, std::uint64_t cap) {
    if (k >= 63 || (Mask{1} << k) > cap) {
        throw BudgetExceeded("powerset of " + std::to_string(k) + " elements exceeds the search budget");
    }
    return Mask{1} << k;
}

// Masks in [0, total) accepted by `keep`, ascending; the range is split into
// contiguous chunks, one per thread.
std::vector<Mask> parallel_filter(Mask total, unsigned threads, const std::function<bool(Mask)>& keep) {
    threads = static_cast<unsigned>(std::min<Mask>(detail::resolve_threads(threads), std::max<Mask>(total, 1)));
    std::vector<std::vector<Mask>> parts(threads);
    std::vector<std::exception_ptr> errors(threads);
    auto work = [&](unsigned t) {
        try {
            const Mask lo = total * t / threads;
            const Mask hi = total * (t + 1) / threads;
            for (Mask m = lo; m < hi; ++m) {
                if (keep(m)) {
                    parts[t].push_back(m);
                }
            }
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(work, t);
    }
    work(0);
    for (auto& th : pool) {
        th.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    std::vector<Mask> out;
    for (auto& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

// Keeps the masks with no strict superset (or, with `minimal`, no strict
// subset) among `masks`.
std::vector<Mask> extremal(std::vector<Mask> masks, bool minimal) {
    std::stable_sort(masks.begin(), masks.end(), [&](Mask a, Mask b) {
        return minimal ? std::popcount(a) < std::popcount(b) : std::popcount(a) > std::popcount(b);
    });
    std::vector<Mask> out;
    for (Mask m : masks) {
        const bool covered = std::any_of(out.begin(), out.end(), [&](Mask o) {
            return minimal ? (o & ~m) == 0 : (m & ~o) == 0;
        });
        if (!covered) {
            out.push_back(m);
        }
    }
    return out;
}

void sort_by_size(std::vector<DataGraph>& graphs, bool largest_first) {
    std::sort(graphs.begin(), graphs.end(), [&](const DataGraph& a, const DataGraph& b) {
        if (a.size() != b.size()) {
            return largest_first ? a.size() > b.size() : a.size() < b.size();
        }
        return a < b;
    });
}

}  // namespace

std::vector<DataGraph> brute_force_subset_repairs(const DataGraph& g, const ConstraintSet& r,
                                                  const SearchBudget& budget) {
    const detail::SubsetSpace space(g);
    const std::size_t n = space.node_count();
    const std::size_t m = space.edge_count();
    const Mask total = space_size(n + m, budget.max_explored);

    // bit i set: element i kept
    auto split = [&](Mask mask, Bits& removed_nodes, Bits& removed_edges) {
        removed_nodes.resize(n);
        removed_edges.resize(m);
        for (std::size_t v = 0; v < n; ++v) {
            removed_nodes[v] = ((mask >> v) & 1U) == 0;
        }
        for (std::size_t k = 0; k < m; ++k) {
            removed_edges[k] = ((mask >> (n + k)) & 1U) == 0;
        }
    };
    const auto consistent = parallel_filter(total, budget.threads, [&](Mask mask) {
        for (std::size_t k = 0; k < m; ++k) {
            const auto& e = space.edges()[k];
            if (((mask >> (n + k)) & 1U) && (((mask >> e.from) & 1U) == 0 || ((mask >> e.to) & 1U) == 0)) {
                return false;
            }
        }
        Bits rn;
        Bits re;
        split(mask, rn, re);
        return is_consistent(space.build(rn, re), r);
    });
    std::vector<DataGraph> out;
    for (Mask mask : extremal(consistent, false)) {
        Bits rn;
        Bits re;
        split(mask, rn, re);
        out.push_back(space.to_graph(rn, re));
    }
    sort_by_size(out, true);
    return out;
}

std::vector<DataGraph> brute_force_superset_repairs(const DataGraph& g, const ConstraintSet& r,
                                                    const SearchBudget& budget) {
    const detail::SupersetSpace space(g, r, budget);
    const Mask total = space_size(space.size(), budget.max_explored);
    auto bits_of = [&](Mask mask) {
        Bits b(space.size());
        for (std::size_t i = 0; i < space.size(); ++i) {
            b[i] = ((mask >> i) & 1U) != 0;
        }
        return b;
    };
    const auto consistent = parallel_filter(total, budget.threads, [&](Mask mask) {
        const Bits b = bits_of(mask);
        return space.valid(b, false) && is_consistent(space.build(b), r);
    });
    std::vector<DataGraph> out;
    for (Mask mask : extremal(consistent, true)) {
        const Bits b = bits_of(mask);
        if (space.valid(b, true)) {
            out.push_back(space.to_graph(b));
        }
    }
    sort_by_size(out, false);
    return out;
}

}  // namespace gxrepair
