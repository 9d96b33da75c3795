// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#include "gxrepair/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <optional>

#include "gxrepair/consistency.hpp"
#include "gxrepair/error.hpp"
#include "gxrepair/eval.hpp"
#include "gxrepair/io.hpp"
#include "gxrepair/parser.hpp"
#include "gxrepair/reductions.hpp"
#include "gxrepair/repair.hpp"

namespace gxrepair::cli {

namespace {

class UsageError : public Error {
  public:
    using Error::Error;
    [[nodiscard]] const char* kind() const noexcept override { return "usage"; }
};

struct Options {
    bool pretty = false;
    unsigned threads = 0;

    std::string graph;
    std::string constraints;
    bool first_violation = false;

    std::string expr;
    std::string sort = "path";

    std::string mode;
    std::string prefer;
    std::size_t budget_nodes = 0;
    std::uint64_t max_explored = SearchBudget{}.max_explored;
    std::optional<std::size_t> max_repair_size;
    std::optional<std::size_t> max_candidate_edges;
    bool all_optima = false;
    bool oracle = false;

    std::string problem;
    std::uint64_t k = 0;
    std::string weights;
    std::string order;
    std::string label;

    std::string cnf;
    std::string outdir;
};

unsigned thread_count(unsigned flag) {
    if (flag > 0) {
        return flag;
    }
    if (const char* env = std::getenv("GXREPAIR_THREADS")) {
        try {
            const unsigned long v = std::stoul(env);
            if (v > 0) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
            throw UsageError("GXREPAIR_THREADS must be a positive integer");
        }
    }
    return 1;
}

SearchBudget budget_of(const Options& o) {
    SearchBudget b;
    b.max_new_nodes = o.budget_nodes;
    b.max_explored = o.max_explored;
    b.max_repair_size = o.max_repair_size;
    b.max_candidate_edges = o.max_candidate_edges;
    b.threads = thread_count(o.threads);
    return b;
}

PreferenceCriterion criterion_of(const std::string& prefer) {
    if (prefer.empty() || prefer == "none") {
        return NoPreference{};
    }
    const auto colon = prefer.find(':');
    const std::string kind = prefer.substr(0, colon);
    if (colon == std::string::npos || colon + 1 == prefer.size()) {
        throw UsageError("--prefer expects weight:<file>, mset:<file> or none");
    }
    const std::string file = prefer.substr(colon + 1);
    if (kind == "weight") {
        return io::read_weights(file);
    }
    if (kind == "mset") {
        return io::read_order(file);
    }
    throw UsageError("--prefer expects weight:<file>, mset:<file> or none");
}

std::int64_t extra_weight(const DataGraph& g, const DataGraph& repair, const PreferenceCriterion& crit) {
    const auto* w = std::get_if<WeightSpec>(&crit);
    const WeightSpec spec = w != nullptr ? *w : WeightSpec{};
    return static_cast<std::int64_t>(weight_of(repair, spec)) - static_cast<std::int64_t>(weight_of(g, spec));
}

int do_check(const Options& o, std::ostream& out) {
    const auto g = io::read_graph(o.graph);
    const auto r = io::read_constraints(o.constraints);
    const auto verdict = check(g, r, o.first_violation);
    out << io::dump(io::to_json(verdict), o.pretty) << '\n';
    return verdict.consistent ? 0 : 1;
}

int do_eval(const Options& o, std::ostream& out) {
    const auto g = io::read_graph(o.graph);
    if (o.sort == "node") {
        out << io::dump(io::to_json(eval_node(g, *parse_node(o.expr))), o.pretty) << '\n';
    } else {
        out << io::dump(io::to_json(eval_path(g, *parse_path(o.expr))), o.pretty) << '\n';
    }
    return 0;
}

std::vector<DataGraph> preferred_among(const std::vector<DataGraph>& all, const PreferenceCriterion& crit,
                                       RepairMode mode) {
    std::vector<DataGraph> out;
    for (const auto& rep : all) {
        const bool dominated = std::any_of(all.begin(), all.end(), [&](const DataGraph& other) {
            return mode == RepairMode::Subset ? graph_less(rep, other, crit) : graph_less(other, rep, crit);
        });
        if (!dominated) {
            out.push_back(rep);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int do_repair(const Options& o, std::ostream& out) {
    const auto g = io::read_graph(o.graph);
    const auto r = io::read_constraints(o.constraints);
    const auto crit = criterion_of(o.prefer);
    const auto budget = budget_of(o);
    const RepairMode mode = o.mode == "subset" ? RepairMode::Subset : RepairMode::Superset;

    if (o.all_optima) {
        std::vector<DataGraph> repairs;
        if (o.oracle) {
            repairs = preferred_among(mode == RepairMode::Subset ? brute_force_subset_repairs(g, r, budget)
                                                                 : brute_force_superset_repairs(g, r, budget),
                                      crit, mode);
        } else {
            repairs = mode == RepairMode::Subset ? all_preferred_subset_repairs(g, r, crit, budget)
                                                 : all_preferred_superset_repairs(g, r, crit, budget);
        }
        io::Json list = io::Json::array();
        for (const auto& rep : repairs) {
            io::Json item;
            item["extra_weight"] = extra_weight(g, rep, crit);
            item["graph"] = io::to_json(rep);
            list.push_back(std::move(item));
        }
        io::Json doc;
        doc["status"] = repairs.empty() ? "unknown_beyond_budget" : "repaired";
        doc["repairs"] = std::move(list);
        out << io::dump(doc, o.pretty) << '\n';
        return 0;
    }

    RepairResult result;
    if (o.oracle) {
        const auto all = mode == RepairMode::Subset ? brute_force_subset_repairs(g, r, budget)
                                                    : brute_force_superset_repairs(g, r, budget);
        result.repair = select_preferred(all, crit, mode);
        result.explored = all.size();
        if (!result.repair) {
            result.status = RepairStatus::UnknownBeyondBudget;
        } else {
            result.status = result.repair->empty() && mode == RepairMode::Subset ? RepairStatus::Trivial
                                                                                  : RepairStatus::Repaired;
        }
    } else {
        result = mode == RepairMode::Subset ? find_preferred_subset_repair(g, r, crit, budget)
                                            : find_preferred_superset_repair(g, r, crit, budget);
    }
    std::optional<std::int64_t> extra;
    if (result.repair) {
        extra = extra_weight(g, *result.repair, crit);
    }
    out << io::dump(io::to_json(result, extra), o.pretty) << '\n';
    return 0;
}

int do_decide(const Options& o, std::ostream& out) {
    const auto g = io::read_graph(o.graph);
    const auto r = io::read_constraints(o.constraints);
    const auto budget = budget_of(o);
    bool answer = false;
    try {
        if (o.problem == "pw") {
            const WeightSpec w = o.weights.empty() ? WeightSpec{} : io::read_weights(o.weights);
            answer = decide_pi_w(g, r, w, o.k, budget);
        } else {
            if (o.order.empty() || o.label.empty()) {
                throw UsageError("--problem pmset needs --order and --label");
            }
            answer = decide_pi_mset(g, r, io::read_order(o.order), o.label, o.k, budget);
        }
    } catch (const BudgetExceeded&) {
        out << io::dump(io::Json("unknown_beyond_budget"), o.pretty) << '\n';
        return 0;
    }
    out << (answer ? "true" : "false") << '\n';
    return 0;
}

int do_gen_sat(const Options& o, std::ostream& out) {
    Cnf3 phi = parse_dimacs(io::read_file(o.cnf));
    const auto inst = encode(phi);
    io::write_instance(inst, o.outdir);
    io::Json meta;
    meta["K_w"] = inst.k_w;
    meta["K_mset"] = inst.k_mset;
    meta["label"] = inst.label;
    out << io::dump(meta, o.pretty) << '\n';
    return 0;
}

void emit_error(std::ostream& out, std::ostream& err, const std::string& kind, const std::string& message,
                bool pretty) {
    io::Json doc;
    doc["error"]["kind"] = kind;
    doc["error"]["message"] = message;
    out << io::dump(doc, pretty) << '\n';
    err << "gxrepair: " << message << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Consistency checking and preferred repairs for data-graphs", "gxrepair"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--pretty", o.pretty, "Indent JSON output");
    app.add_option("--threads", o.threads, "Worker threads for exhaustive search (default: $GXREPAIR_THREADS or 1)");

    auto graph_opts = [&](CLI::App* sub) {
        sub->add_option("-g,--graph", o.graph, "Graph JSON file")->required();
    };
    auto constraint_opts = [&](CLI::App* sub) {
        sub->add_option("-c,--constraints", o.constraints, "Constraint file")->required();
    };
    auto budget_opts = [&](CLI::App* sub) {
        sub->add_option("--budget-nodes", o.budget_nodes, "Fresh nodes allowed in superset repairs");
        sub->add_option("--max-explored", o.max_explored, "Candidate graphs examined before giving up");
        sub->add_option("--max-repair-size", o.max_repair_size, "Largest number of additions tried");
        sub->add_option("--max-candidate-edges", o.max_candidate_edges, "Cap on candidate edges");
    };

    auto* check_cmd = app.add_subcommand("check", "Check a graph against constraints");
    graph_opts(check_cmd);
    constraint_opts(check_cmd);
    check_cmd->add_flag("--first-violation", o.first_violation, "Stop at the first violation");

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression");
    graph_opts(eval_cmd);
    eval_cmd->add_option("-e,--expr", o.expr, "Expression")->required();
    eval_cmd->add_option("--sort", o.sort, "node or path")->check(CLI::IsMember({"node", "path"}));

    auto* repair_cmd = app.add_subcommand("repair", "Compute a preferred repair");
    graph_opts(repair_cmd);
    constraint_opts(repair_cmd);
    repair_cmd->add_option("--mode", o.mode, "subset or superset")
        ->required()
        ->check(CLI::IsMember({"subset", "superset"}));
    repair_cmd->add_option("--prefer", o.prefer, "weight:<file>, mset:<file> or none");
    budget_opts(repair_cmd);
    repair_cmd->add_flag("--all-optima", o.all_optima, "List every preferred repair");
    repair_cmd->add_flag("--oracle", o.oracle, "Use exhaustive enumeration instead of the search");

    auto* decide_cmd = app.add_subcommand("decide", "Decide a bounded superset repair problem");
    decide_cmd->add_option("--problem", o.problem, "pw or pmset")->required()->check(CLI::IsMember({"pw", "pmset"}));
    graph_opts(decide_cmd);
    constraint_opts(decide_cmd);
    decide_cmd->add_option("-K", o.k, "Bound")->required();
    decide_cmd->add_option("--weights", o.weights, "Weight JSON (pw)");
    decide_cmd->add_option("--order", o.order, "Symbol order JSON (pmset)");
    decide_cmd->add_option("--label", o.label, "Counted edge label (pmset)");
    budget_opts(decide_cmd);

    auto* gen_cmd = app.add_subcommand("gen-sat", "Write the repair instance of a DIMACS 3-CNF");
    gen_cmd->add_option("--cnf", o.cnf, "DIMACS file")->required();
    gen_cmd->add_option("-o,--out", o.outdir, "Output directory")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        emit_error(out, err, "usage", e.what(), o.pretty);
        return 2;
    }

    try {
        if (check_cmd->parsed()) {
            return do_check(o, out);
        }
        if (eval_cmd->parsed()) {
            return do_eval(o, out);
        }
        if (repair_cmd->parsed()) {
            return do_repair(o, out);
        }
        if (decide_cmd->parsed()) {
            return do_decide(o, out);
        }
        return do_gen_sat(o, out);
    } catch (const Error& e) {
        emit_error(out, err, e.kind(), e.what(), o.pretty);
    } catch (const std::invalid_argument& e) {
        emit_error(out, err, "invalid_argument", e.what(), o.pretty);
    } catch (const std::exception& e) {
        emit_error(out, err, "internal", e.what(), o.pretty);
    }
    return 2;
}

}  // namespace gxrepair::cli
