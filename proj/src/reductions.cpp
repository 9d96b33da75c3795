// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#include "gxrepair/reductions.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "gxrepair/error.hpp"

namespace gxrepair {

namespace {

NodeId var_id(std::size_t i) { return "x" + std::to_string(i); }
NodeId clause_id(std::size_t j) { return "c" + std::to_string(j); }

}  // namespace

void validate(const Cnf3& phi) {
    for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
        const auto& c = phi.clauses[j];
        if (c.empty() || c.size() > 3) {
            throw std::invalid_argument("clause " + std::to_string(j + 1) + " has " + std::to_string(c.size()) +
                                        " literals, expected 1 to 3");
        }
        for (int lit : c) {
            if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > phi.num_vars) {
                throw std::invalid_argument("literal " + std::to_string(lit) + " outside 1.." +
                                            std::to_string(phi.num_vars));
            }
        }
    }
}

bool satisfies(const Cnf3& phi, const Assignment& f) {
    return std::all_of(phi.clauses.begin(), phi.clauses.end(), [&](const std::vector<int>& c) {
        return std::any_of(c.begin(), c.end(), [&](int lit) {
            auto it = f.find(static_cast<std::size_t>(std::abs(lit)));
            return it != f.end() && it->second == (lit > 0);
        });
    });
}

bool brute_force_sat(const Cnf3& phi) {
    if (phi.num_vars >= 63) {
        throw std::invalid_argument("too many variables for exhaustive search");
    }
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << phi.num_vars); ++bits) {
        Assignment f;
        for (std::size_t i = 1; i <= phi.num_vars; ++i) {
            f[i] = ((bits >> (i - 1)) & 1U) != 0;
        }
        if (satisfies(phi, f)) {
            return true;
        }
    }
    return false;
}

ReductionInstance encode(const Cnf3& phi) {
    validate(phi);
    ReductionInstance inst;
    auto& g = inst.graph;
    for (std::size_t i = 1; i <= phi.num_vars; ++i) {
        g.add_node(var_id(i), "var");
    }
    for (std::size_t j = 1; j <= phi.clauses.size(); ++j) {
        g.add_node(clause_id(j), "clause");
    }
    g.add_node("T", "T");
    g.add_node("F", "F");
    for (std::size_t j = 1; j <= phi.clauses.size(); ++j) {
        const auto& c = phi.clauses[j - 1];
        for (std::size_t i = 1; i <= phi.num_vars; ++i) {
            const auto v = static_cast<int>(i);
            if (std::find(c.begin(), c.end(), v) != c.end()) {
                g.add_edge(var_id(i), clause_id(j), "appears_in");
            }
            if (std::find(c.begin(), c.end(), -v) != c.end()) {
                g.add_edge(var_id(i), clause_id(j), "appears_negated_in");
            }
        }
    }

    // <[!="var"] + value_of.[="T"] + value_of.[="F"]>
    inst.constraints.add(exists(alt(alt(test(data_neq("var")), concat(label("value_of"), test(data_eq("T")))),
                                    concat(label("value_of"), test(data_eq("F"))))));
    // <[!="clause"] + appears_in^-.value_of.[="T"] + appears_negated_in^-.value_of.[="F"]>
    inst.constraints.add(
        exists(alt(alt(test(data_neq("clause")),
                       concat(concat(inverse("appears_in"), label("value_of")), test(data_eq("T")))),
                   concat(concat(inverse("appears_negated_in"), label("value_of")), test(data_eq("F"))))));

    inst.weights.edge_weights = {{"value_of", 1}, {"appears_in", 2}, {"appears_negated_in", 2}};
    inst.weights.data_weights = {{"var", 2}, {"clause", 2}, {"T", 2}, {"F", 2}};
    inst.weights.default_edge = 2;
    inst.weights.default_data = 2;

    const std::vector<std::string> chain = {"value_of", "appears_in", "appears_negated_in", "clause", "var", "T", "F"};
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        pairs.emplace_back(chain[k], chain[k + 1]);
    }
    inst.order = SymbolOrder::from_pairs({}, pairs);

    inst.k_w = weight_of(g, inst.weights) + phi.num_vars;
    inst.k_mset = phi.num_vars;
    return inst;
}

Assignment decode(const ReductionInstance& inst, const DataGraph& repair) {
    if (!is_subgraph(inst.graph, repair) || repair.node_count() != inst.graph.node_count()) {
        throw MalformedRepair("repair must keep the instance nodes and edges and add no nodes");
    }
    Assignment f;
    for (const auto& e : repair.edges()) {
        if (inst.graph.contains_edge(e)) {
            continue;
        }
        const bool value_edge = e.label == inst.label && inst.graph.data(e.from) == "var" && (e.to == "T" || e.to == "F");
        if (!value_edge) {
            throw MalformedRepair("unexpected added edge (" + e.from + ", " + e.label + ", " + e.to + ")");
        }
        const auto i = static_cast<std::size_t>(std::stoul(e.from.substr(1)));
        if (!f.emplace(i, e.to == "T").second) {
            throw MalformedRepair("variable " + e.from + " gets two values");
        }
    }
    for (const auto& [id, value] : inst.graph.nodes()) {
        if (value == "var" && !f.contains(static_cast<std::size_t>(std::stoul(id.substr(1))))) {
            throw MalformedRepair("variable " + id + " gets no value");
        }
    }
    return f;
}

Cnf3 parse_dimacs(std::string_view text) {
    Cnf3 phi;
    bool header = false;
    std::size_t declared_clauses = 0;
    std::vector<int> current;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;

        std::size_t i = 0;
        auto skip_space = [&] {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
                ++i;
            }
        };
        skip_space();
        if (i == line.size() || line[i] == 'c') {
            continue;
        }
        if (line[i] == '%') {
            break;
        }
        if (line[i] == 'p') {
            if (header) {
                throw ParseError("second problem line", line_no, i + 1);
            }
            const std::string rest(line.substr(i + 1));
            char fmt[8] = {};
            unsigned long n = 0;
            unsigned long m = 0;
            if (std::sscanf(rest.c_str(), " %7s %lu %lu", fmt, &n, &m) != 3 || std::string(fmt) != "cnf") {
                throw ParseError("expected 'p cnf <vars> <clauses>'", line_no, i + 1);
            }
            phi.num_vars = n;
            declared_clauses = m;
            header = true;
            continue;
        }
        if (!header) {
            throw ParseError("clause before the problem line", line_no, i + 1);
        }
        while (i < line.size()) {
            const std::size_t start = i;
            int lit = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), lit);
            if (ec != std::errc()) {
                throw ParseError("expected an integer literal", line_no, start + 1);
            }
            i = static_cast<std::size_t>(ptr - line.data());
            if (lit == 0) {
                if (current.empty()) {
                    throw ParseError("empty clause", line_no, start + 1);
                }
                phi.clauses.push_back(std::move(current));
                current.clear();
            } else {
                if (static_cast<std::size_t>(std::abs(lit)) > phi.num_vars) {
                    throw ParseError("literal " + std::to_string(lit) + " exceeds the declared variable count",
                                     line_no, start + 1);
                }
                if (current.size() == 3) {
                    throw ParseError("clause has more than 3 literals", line_no, start + 1);
                }
                current.push_back(lit);
            }
            skip_space();
        }
    }
    if (!header) {
        throw ParseError("missing problem line", line_no, 1);
    }
    if (!current.empty()) {
        phi.clauses.push_back(std::move(current));
    }
    if (phi.clauses.size() != declared_clauses) {
        throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                             std::to_string(phi.clauses.size()),
                         line_no, 1);
    }
    return phi;
}

}  // namespace gxrepair
