// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "gxrepair/datagraph.hpp"
#include "gxrepair/gxpath.hpp"

namespace gxrepair {

// CNF with at most three literals per clause. Literals are signed 1-based
// variable indices.
struct Cnf3 {
    std::size_t num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

// Throws std::invalid_argument on an empty clause, a clause longer than three
// literals, or a literal outside 1..num_vars.
void validate(const Cnf3& phi);

using Assignment = std::map<std::size_t, bool>;

[[nodiscard]] bool satisfies(const Cnf3& phi, const Assignment& f);
// Tries all 2^n assignments.
[[nodiscard]] bool brute_force_sat(const Cnf3& phi);

// Graph, constraints, weights and symbol order of the repair instance built
// from a 3-CNF: nodes x1..xn ("var"), c1..cm ("clause"), T and F; an
// appears_in / appears_negated_in edge from x_i to c_j per occurrence of
// x_i / ¬x_i in clause j. A repair must give every variable a value_of edge
// to T or F such that every clause sees a true literal.
struct ReductionInstance {
    DataGraph graph;
    ConstraintSet constraints;
    WeightSpec weights;
    SymbolOrder order;
    std::uint64_t k_w = 0;
    std::uint64_t k_mset = 0;
    EdgeLabel label = "value_of";
};

[[nodiscard]] ReductionInstance encode(const Cnf3& phi);

// Reads the assignment off a repair that adds exactly one value_of edge per
// variable and nothing else. Throws MalformedRepair otherwise.
[[nodiscard]] Assignment decode(const ReductionInstance& inst, const DataGraph& repair);

// DIMACS CNF ("p cnf n m" header, zero-terminated clauses, `c` comments).
// Throws ParseError.
[[nodiscard]] Cnf3 parse_dimacs(std::string_view text);

}  // namespace gxrepair
