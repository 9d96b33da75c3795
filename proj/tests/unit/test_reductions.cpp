// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "fixtures.hpp"
#include "gxrepair/consistency.hpp"
#include "gxrepair/error.hpp"
#include "gxrepair/reductions.hpp"
#include "gxrepair/repair.hpp"

using namespace gxrepair;
using namespace gxrepair::testing;

TEST_SUITE("reductions") {
    TEST_CASE("validation") {
        CHECK_NOTHROW(validate(Cnf3{2, {{1, -2}, {2}}}));
        CHECK_THROWS_AS(validate(Cnf3{2, {{}}}), std::invalid_argument);
        CHECK_THROWS_AS(validate(Cnf3{4, {{1, 2, 3, 4}}}), std::invalid_argument);
        CHECK_THROWS_AS(validate(Cnf3{2, {{3}}}), std::invalid_argument);
        CHECK_THROWS_AS(validate(Cnf3{2, {{0}}}), std::invalid_argument);
    }

    TEST_CASE("satisfaction") {
        const Cnf3 phi{2, {{1, 2}, {-1, 2}}};
        CHECK(satisfies(phi, {{1, false}, {2, true}}));
        CHECK_FALSE(satisfies(phi, {{1, true}, {2, false}}));
        CHECK(brute_force_sat(phi));
        CHECK_FALSE(brute_force_sat(Cnf3{1, {{1}, {-1}}}));
        CHECK(brute_force_sat(Cnf3{3, {}}));
    }

    TEST_CASE("single positive literal") {
        const auto inst = encode(Cnf3{1, {{1}}});
        const auto& g = inst.graph;
        CHECK(g.node_count() == 4);
        CHECK(g.data("x1") == "var");
        CHECK(g.data("c1") == "clause");
        CHECK(g.edges() == std::set<Edge>{{"x1", "c1", "appears_in"}});
        CHECK(weight_of(g, inst.weights) == 10);
        CHECK(inst.k_w == 11);
        CHECK(inst.k_mset == 1);
        CHECK_FALSE(check(g, inst.constraints).consistent);

        auto repaired = g;
        repaired.add_edge("x1", "T", "value_of");
        CHECK(check(repaired, inst.constraints).consistent);
        CHECK(decode(inst, repaired) == Assignment{{1, true}});

        auto wrong = g;
        wrong.add_edge("x1", "F", "value_of");
        CHECK_FALSE(check(wrong, inst.constraints).consistent);

        const auto res = find_preferred_superset_repair(g, inst.constraints, inst.weights);
        CHECK(res.repair == repaired);
        CHECK(decide_pi_w(g, inst.constraints, inst.weights, inst.k_w));
        CHECK_FALSE(decide_pi_w(g, inst.constraints, inst.weights, inst.k_w - 1));
        CHECK(decide_pi_mset(g, inst.constraints, inst.order, inst.label, inst.k_mset));
    }

    TEST_CASE("negated occurrences") {
        const auto inst = encode(Cnf3{2, {{1, -2}, {-1}}});
        CHECK(inst.graph.contains_edge({"x1", "c1", "appears_in"}));
        CHECK(inst.graph.contains_edge({"x2", "c1", "appears_negated_in"}));
        CHECK(inst.graph.contains_edge({"x1", "c2", "appears_negated_in"}));
        CHECK(inst.graph.edge_count() == 3);
        const auto res = find_preferred_superset_repair(inst.graph, inst.constraints, inst.weights);
        REQUIRE(res.repair.has_value());
        const auto f = decode(inst, *res.repair);
        CHECK(f.at(1) == false);
        CHECK(satisfies(Cnf3{2, {{1, -2}, {-1}}}, f));
    }

    TEST_CASE("unsatisfiable formulas have no cheap repair") {
        const Cnf3 phi{1, {{1}, {-1}}};
        const auto inst = encode(phi);
        CHECK_FALSE(decide_pi_w(inst.graph, inst.constraints, inst.weights, inst.k_w));
        CHECK_FALSE(decide_pi_mset(inst.graph, inst.constraints, inst.order, inst.label, inst.k_mset));
    }

    TEST_CASE("the symbol order is a chain") {
        const auto inst = encode(Cnf3{1, {{1}}});
        CHECK(inst.order.is_total_on({"value_of", "appears_in", "appears_negated_in", "clause", "var", "T", "F"}));
        CHECK(inst.order.less("value_of", "F"));
    }

    TEST_CASE("decode rejects malformed repairs") {
        const auto inst = encode(Cnf3{2, {{1, 2}}});
        auto both = inst.graph;
        both.add_edge("x1", "T", "value_of");
        both.add_edge("x1", "F", "value_of");
        both.add_edge("x2", "T", "value_of");
        CHECK_THROWS_AS((void)decode(inst, both), MalformedRepair);

        auto missing = inst.graph;
        missing.add_edge("x1", "T", "value_of");
        CHECK_THROWS_AS((void)decode(inst, missing), MalformedRepair);

        auto stray = inst.graph;
        stray.add_edge("x1", "T", "value_of");
        stray.add_edge("x2", "T", "value_of");
        stray.add_edge("T", "F", "value_of");
        CHECK_THROWS_AS((void)decode(inst, stray), MalformedRepair);

        auto extra_node = inst.graph;
        extra_node.add_node("y", "var");
        CHECK_THROWS_AS((void)decode(inst, extra_node), MalformedRepair);
    }

    TEST_CASE("DIMACS") {
        const auto phi = parse_dimacs("c example\np cnf 3 2\n1 -3 0\n2 3 -1 0\n");
        CHECK(phi.num_vars == 3);
        CHECK(phi.clauses == std::vector<std::vector<int>>{{1, -3}, {2, 3, -1}});
        // clauses may span lines; '%' ends the clause list
        const auto split = parse_dimacs("p cnf 2 1\n1\n-2 0\n%\n0\n");
        CHECK(split.clauses == std::vector<std::vector<int>>{{1, -2}});

        CHECK_THROWS_AS((void)parse_dimacs("1 2 0\n"), ParseError);
        CHECK_THROWS_AS((void)parse_dimacs("p cnf 2 1\n1 2 -1 2 0\n"), ParseError);
        CHECK_THROWS_AS((void)parse_dimacs("p cnf 2 1\n3 0\n"), ParseError);
        CHECK_THROWS_AS((void)parse_dimacs("p cnf 2 2\n1 0\n"), ParseError);
        CHECK_THROWS_AS((void)parse_dimacs("p cnf 2 1\n0\n"), ParseError);
        try {
            (void)parse_dimacs("p cnf 2 1\n1 x 0\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
}
