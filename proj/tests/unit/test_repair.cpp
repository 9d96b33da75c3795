// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "gxrepair/consistency.hpp"
#include "gxrepair/error.hpp"
#include "gxrepair/io.hpp"
#include "gxrepair/parser.hpp"
#include "gxrepair/repair.hpp"
#include "naive.hpp"
#include "random.hpp"

using namespace gxrepair;
using namespace gxrepair::testing;

namespace {

// u -a-> v -b-> w under "no a-step followed by a b-step"
DataGraph chain() {
    return make_graph({{"u", "1"}, {"v", "2"}, {"w", "3"}}, {{"u", "v", "a"}, {"v", "w", "b"}});
}

const ConstraintSet& no_ab() {
    static const ConstraintSet r = parse_constraints("path: !(a.b)");
    return r;
}

DataGraph without_edge(DataGraph g, const Edge& e) {
    g.remove_edge(e);
    return g;
}

DataGraph with_edges(DataGraph g, std::initializer_list<Edge> es) {
    for (const auto& e : es) {
        g.add_edge(e);
    }
    return g;
}

std::vector<DataGraph> sorted(std::vector<DataGraph> v) {
    std::sort(v.begin(), v.end());
    return v;
}

WeightSpec weights(std::map<EdgeLabel, std::uint64_t> edges, std::uint64_t default_data = 1) {
    WeightSpec w;
    w.edge_weights = std::move(edges);
    w.default_data = default_data;
    return w;
}

}  // namespace

TEST_SUITE("repair") {
    TEST_CASE("subset repairs of a two-edge conflict") {
        const auto g = chain();
        const auto reps = subset_repairs(g, no_ab());
        REQUIRE(reps.size() == 2);
        CHECK(reps[0] == without_edge(g, {"v", "w", "b"}));
        CHECK(reps[1] == without_edge(g, {"u", "v", "a"}));
        CHECK(subset_repairs(g, no_ab(), 1).size() == 1);
    }

    TEST_CASE("preferred subset repair follows the criterion") {
        const auto g = chain();
        const auto heavy_a = find_preferred_subset_repair(g, no_ab(), weights({{"a", 5}, {"b", 1}}));
        CHECK(heavy_a.status == RepairStatus::Repaired);
        CHECK(heavy_a.maximality == Maximality::Verified);
        CHECK(heavy_a.repair == without_edge(g, {"v", "w", "b"}));

        const auto heavy_b = find_preferred_subset_repair(g, no_ab(), weights({{"a", 1}, {"b", 5}}));
        CHECK(heavy_b.repair == without_edge(g, {"u", "v", "a"}));

        // a < b: keeping b gives the greater multiset
        const auto ord = SymbolOrder::from_pairs({}, {{"a", "b"}});
        CHECK(find_preferred_subset_repair(g, no_ab(), ord).repair == without_edge(g, {"u", "v", "a"}));
        CHECK(all_preferred_subset_repairs(g, no_ab(), ord) ==
              std::vector<DataGraph>{without_edge(g, {"u", "v", "a"})});

        // no preference: both have three nodes and one edge; least graph wins
        CHECK(find_preferred_subset_repair(g, no_ab(), NoPreference{}).repair == without_edge(g, {"v", "w", "b"}));
        CHECK(all_preferred_subset_repairs(g, no_ab(), weights({{"a", 2}, {"b", 2}})).size() == 2);
    }

    TEST_CASE("consistent input is its own repair") {
        const auto g = chain();
        const auto r = parse_constraints("node: !=\"9\"");
        CHECK(subset_repairs(g, r) == std::vector<DataGraph>{g});
        CHECK(find_preferred_subset_repair(g, r, NoPreference{}).repair == g);
        CHECK(superset_repairs(g, r) == std::vector<DataGraph>{g});
        CHECK(find_preferred_superset_repair(g, r, NoPreference{}).repair == g);
    }

    TEST_CASE("empty repair is reported as trivial") {
        const auto g = make_graph({{"u", "1"}, {"v", "2"}}, {{"u", "v", "a"}});
        const auto r = parse_constraints("node: <a>");
        const auto res = find_preferred_subset_repair(g, r, NoPreference{});
        CHECK(res.status == RepairStatus::Trivial);
        CHECK(res.repair == DataGraph{});
        CHECK_FALSE(has_nontrivial_preferred_subset_repair(g, r, NoPreference{}));
        CHECK(positive_node_subset_repair(g, r) == DataGraph{});
    }

    TEST_CASE("non-trivial repair exists for the film graph") {
        const auto g = io::read_graph(data_dir() / "film" / "graph.json");
        const auto r = io::read_constraints(data_dir() / "film" / "constraints.gx");
        CHECK(has_nontrivial_preferred_subset_repair(g, r, NoPreference{}));
        // non-positive constraint: the general search path
        CHECK(has_nontrivial_preferred_subset_repair(chain(), no_ab(), NoPreference{}));
    }

    TEST_CASE("film repairs") {
        const auto g = io::read_graph(data_dir() / "film" / "graph.json");
        const auto r = io::read_constraints(data_dir() / "film" / "constraints.gx");
        const auto only = without_edge(g, {"n_Robbie", "n_Actor", "type"});
        CHECK(subset_repairs(g, r) == std::vector<DataGraph>{only});
        CHECK(verify_subset_maximality(g, only, r) == Maximality::Verified);
        CHECK(verify_subset_maximality(g, only, r, 0) == Maximality::OneStepLocal);

        // deleting the node is consistent but not maximal: restoring the
        // node without its type edge stays consistent
        DataGraph node_gone = g;
        node_gone.remove_node("n_Robbie");
        CHECK(check(node_gone, r).consistent);
        CHECK_FALSE(verify_subset_maximality(g, node_gone, r).has_value());
        CHECK_FALSE(verify_subset_maximality(g, g, r).has_value());
    }

    TEST_CASE("positive node fast path") {
        // every node needs an a-successor: w has none, then v loses its, then u
        const auto g = make_graph({{"u", "1"}, {"v", "2"}, {"w", "3"}, {"z", "2"}},
                                  {{"u", "v", "a"}, {"v", "w", "a"}, {"z", "z", "a"}});
        const auto r = parse_constraints("node: <a>");
        const auto fast = positive_node_subset_repair(g, r);
        CHECK(fast == make_graph({{"z", "2"}}, {{"z", "z", "a"}}));
        CHECK(oracle_subset_repairs(g, r) == std::vector<DataGraph>{fast});
        const auto res = find_preferred_subset_repair(g, r, NoPreference{});
        CHECK(res.repair == fast);
        CHECK(res.maximality == Maximality::Verified);
    }

    TEST_CASE("superset repairs of a two-node instance") {
        const auto g = make_graph({{"u", "1"}, {"v", "2"}});
        const auto r = parse_constraints("node: <a>");
        const auto reps = superset_repairs(g, r);
        REQUIRE(reps.size() == 4);
        CHECK(reps == oracle_superset_repairs(g, r, missing_triples(g, {"a"})));
        const auto best = find_preferred_superset_repair(g, r, NoPreference{});
        CHECK(best.status == RepairStatus::Repaired);
        CHECK(best.repair == with_edges(g, {{"u", "u", "a"}, {"v", "u", "a"}}));
        CHECK(superset_repairs(g, r, {}, 2).size() == 2);
    }

    TEST_CASE("superset search with a fresh node") {
        const auto g = make_graph({{"u", "y"}});
        const auto r = parse_constraints("node: <a.[=x]>");
        const auto none = find_preferred_superset_repair(g, r, NoPreference{});
        CHECK(none.status == RepairStatus::UnknownBeyondBudget);
        CHECK_FALSE(none.repair.has_value());
        CHECK(superset_repairs(g, r).empty());

        SearchBudget b;
        b.max_new_nodes = 1;
        const auto res = find_preferred_superset_repair(g, r, NoPreference{}, b);
        REQUIRE(res.repair.has_value());
        const auto expected =
            make_graph({{"u", "y"}, {"_new1", "x"}}, {{"u", "_new1", "a"}, {"_new1", "_new1", "a"}});
        CHECK(*res.repair == expected);
        const auto all = superset_repairs(g, r, b);
        CHECK(sorted(all) == sorted(brute_force_superset_repairs(g, r, b)));
        CHECK(std::find(all.begin(), all.end(), expected) != all.end());
    }

    TEST_CASE("fresh ids avoid existing node ids") {
        const auto g = make_graph({{"_new1", "y"}});
        const auto r = parse_constraints("node: <a.[=x]>");
        SearchBudget b;
        b.max_new_nodes = 1;
        const auto res = find_preferred_superset_repair(g, r, NoPreference{}, b);
        REQUIRE(res.repair.has_value());
        CHECK(res.repair->contains_node("__new1"));
    }

    TEST_CASE("network example, weight and multiset preference") {
        const auto a = io::read_graph(data_dir() / "network" / "graph_a.json");
        const auto r = io::read_constraints(data_dir() / "network" / "constraints.gx");
        const auto w = io::read_weights(data_dir() / "network" / "weights.json");
        const auto res = find_preferred_superset_repair(a, r, w);
        REQUIRE(res.repair.has_value());
        CHECK(weight_of(*res.repair, w) - weight_of(a, w) == 3);
        CHECK(*res.repair == io::read_graph(data_dir() / "network" / "graph_c.json"));

        const auto ord = io::read_order(data_dir() / "network" / "order_low_gt_high.json");
        const auto m = find_preferred_superset_repair(a, r, ord);
        REQUIRE(m.repair.has_value());
        CHECK(check(*m.repair, r).consistent);
        CHECK(is_subgraph(a, *m.repair));
        // nothing in the bounded enumeration beats it
        SearchBudget b;
        b.max_repair_size = 3;
        for (const auto& other : superset_repairs(a, r, b)) {
            CHECK_FALSE(graph_less(other, *m.repair, ord));
        }
    }

    TEST_CASE("decision problems on a small instance") {
        const auto g = make_graph({{"u", "1"}, {"v", "2"}});
        const auto r = parse_constraints("node: <a + b>");
        const auto w = weights({{"a", 3}, {"b", 1}}, 10);
        // cheapest repair adds two b-edges: weight 20 + 2
        CHECK(decide_pi_w(g, r, w, 22));
        CHECK_FALSE(decide_pi_w(g, r, w, 21));
        CHECK_FALSE(decide_pi_w(g, r, w, 5));
        // b < a: preferred repairs use b only, so zero a-edges
        const auto ord = SymbolOrder::from_pairs({}, {{"b", "a"}});
        CHECK(decide_pi_mset(g, r, ord, "a", 0));
        CHECK_FALSE(decide_pi_mset(g, r, ord, "b", 1));
        CHECK(decide_pi_mset(g, r, ord, "b", 2));
        // a and b incomparable: an all-a repair is preferred as well
        const auto flat = SymbolOrder::from_pairs({"a", "b"}, {});
        CHECK(decide_pi_mset(g, r, flat, "b", 0));
    }

    TEST_CASE("budgets are enforced") {
        const auto a = io::read_graph(data_dir() / "network" / "graph_a.json");
        const auto r = io::read_constraints(data_dir() / "network" / "constraints.gx");
        SearchBudget tiny;
        tiny.max_explored = 3;
        CHECK_THROWS_AS((void)superset_repairs(a, r, tiny), BudgetExceeded);
        CHECK_THROWS_AS((void)find_preferred_superset_repair(a, r, NoPreference{}, tiny), BudgetExceeded);
        SearchBudget few_edges;
        few_edges.max_candidate_edges = 4;
        CHECK_THROWS_AS((void)superset_repairs(a, r, few_edges), BudgetExceeded);
    }

    TEST_CASE("select_preferred uses the search ordering") {
        const auto g = chain();
        const auto reps = subset_repairs(g, no_ab());
        CHECK(select_preferred(reps, weights({{"a", 5}}), RepairMode::Subset) == without_edge(g, {"v", "w", "b"}));
        CHECK(select_preferred(reps, weights({{"b", 5}}), RepairMode::Subset) == without_edge(g, {"u", "v", "a"}));
        CHECK(select_preferred(reps, weights({{"a", 5}}), RepairMode::Superset) == without_edge(g, {"u", "v", "a"}));
        CHECK_FALSE(select_preferred({}, NoPreference{}, RepairMode::Subset).has_value());
    }

    TEST_CASE("random subset instances agree with the powerset oracle") {
        Rng rng(17);
        ExprOptions o;
        o.labels = {"a", "b"};
        o.constants = {"0", "1"};
        for (int round = 0; round < 60; ++round) {
            const auto g = random_graph(rng, 1, 3, o.labels, o.constants, 0.25);
            if (g.size() > 8) {
                continue;
            }
            ConstraintSet r;
            r.add(random_node(rng, 3, o));
            const auto expected = oracle_subset_repairs(g, r);
            CHECK(sorted(subset_repairs(g, r)) == expected);
            CHECK(sorted(brute_force_subset_repairs(g, r)) == expected);
        }
    }

    TEST_CASE("random superset instances agree with the powerset oracle") {
        Rng rng(23);
        ExprOptions o;
        o.labels = {"a", "b"};
        o.constants = {"0", "1"};
        for (int round = 0; round < 60; ++round) {
            const auto g = random_graph(rng, 1, 2, o.labels, o.constants, 0.2);
            ConstraintSet r;
            if (coin(rng, 0.5)) {
                r.add(random_node(rng, 3, o));
            } else {
                r.add(random_path(rng, 2, o));
            }
            const auto expected = oracle_superset_repairs(g, r, missing_triples(g, edge_alphabet(g, r)));
            CHECK(sorted(superset_repairs(g, r)) == expected);
            CHECK(sorted(brute_force_superset_repairs(g, r)) == expected);
        }
    }

    TEST_CASE("status strings") {
        CHECK(std::string(to_string(RepairStatus::Repaired)) == "repaired");
        CHECK(std::string(to_string(RepairStatus::Trivial)) == "trivial");
        CHECK(std::string(to_string(RepairStatus::UnknownBeyondBudget)) == "unknown_beyond_budget");
        CHECK(std::string(to_string(Maximality::OneStepLocal)) == "one_step");
    }
}
