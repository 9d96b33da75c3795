// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#include "gxrepair/io.hpp"

#include <fstream>
#include <sstream>

#include "gxrepair/error.hpp"
#include "gxrepair/parser.hpp"

namespace gxrepair::io {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
    if (!j.is_object()) {
        throw FormatError(std::string(what) + " must be a JSON object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw FormatError(std::string(what) + " is missing \"" + key + "\"");
    }
    return *it;
}

std::string string_field(const Json& j, const char* key, const char* what) {
    const Json& v = field(j, key, what);
    if (!v.is_string()) {
        throw FormatError(std::string(what) + " field \"" + key + "\" must be a string");
    }
    return v.get<std::string>();
}

std::uint64_t weight_value(const Json& v, const std::string& what) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        throw FormatError(what + " must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

std::map<std::string, std::uint64_t> weight_map(const Json& j, const char* key) {
    std::map<std::string, std::uint64_t> out;
    auto it = j.find(key);
    if (it == j.end()) {
        return out;
    }
    if (!it->is_object()) {
        throw FormatError(std::string("\"") + key + "\" must be an object");
    }
    for (const auto& [name, v] : it->items()) {
        out.emplace(name, weight_value(v, "weight of '" + name + "'"));
    }
    return out;
}

}  // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        // byte offset to line and column
        const std::size_t at = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i < at; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("malformed JSON", line, column);
    }
}

Json to_json(const DataGraph& g) {
    Json nodes = Json::array();
    for (const auto& [id, value] : g.nodes()) {
        Json n;
        n["id"] = id;
        n["data"] = value;
        nodes.push_back(std::move(n));
    }
    Json edges = Json::array();
    for (const auto& e : g.edges()) {
        Json x;
        x["from"] = e.from;
        x["to"] = e.to;
        x["label"] = e.label;
        edges.push_back(std::move(x));
    }
    Json out;
    out["nodes"] = std::move(nodes);
    out["edges"] = std::move(edges);
    return out;
}

DataGraph graph_from_json(const Json& j) {
    const Json& nodes = field(j, "nodes", "graph");
    const Json& edges = field(j, "edges", "graph");
    if (!nodes.is_array() || !edges.is_array()) {
        throw FormatError("graph \"nodes\" and \"edges\" must be arrays");
    }
    DataGraph g;
    for (const auto& n : nodes) {
        g.add_node(string_field(n, "id", "node"), string_field(n, "data", "node"));
    }
    for (const auto& e : edges) {
        g.add_edge(string_field(e, "from", "edge"), string_field(e, "to", "edge"), string_field(e, "label", "edge"));
    }
    return g;
}

Json to_json(const WeightSpec& w) {
    Json out;
    out["edge_weights"] = Json::object();
    for (const auto& [k, v] : w.edge_weights) {
        out["edge_weights"][k] = v;
    }
    out["data_weights"] = Json::object();
    for (const auto& [k, v] : w.data_weights) {
        out["data_weights"][k] = v;
    }
    out["default_edge"] = w.default_edge;
    out["default_data"] = w.default_data;
    return out;
}

WeightSpec weights_from_json(const Json& j) {
    if (!j.is_object()) {
        throw FormatError("weights must be a JSON object");
    }
    WeightSpec w;
    w.edge_weights = weight_map(j, "edge_weights");
    w.data_weights = weight_map(j, "data_weights");
    if (auto it = j.find("default_edge"); it != j.end()) {
        w.default_edge = weight_value(*it, "\"default_edge\"");
    }
    if (auto it = j.find("default_data"); it != j.end()) {
        w.default_data = weight_value(*it, "\"default_data\"");
    }
    return w;
}

Json to_json(const SymbolOrder& ord) {
    Json out;
    out["symbols"] = ord.symbols();
    Json pairs = Json::array();
    for (const auto& [x, y] : ord.pairs()) {
        pairs.push_back(Json::array({x, y}));
    }
    out["less_than"] = std::move(pairs);
    return out;
}

SymbolOrder order_from_json(const Json& j) {
    if (!j.is_object()) {
        throw FormatError("order must be a JSON object");
    }
    std::vector<std::string> symbols;
    if (auto it = j.find("symbols"); it != j.end()) {
        if (!it->is_array()) {
            throw FormatError("\"symbols\" must be an array of strings");
        }
        for (const auto& s : *it) {
            if (!s.is_string()) {
                throw FormatError("\"symbols\" must be an array of strings");
            }
            symbols.push_back(s.get<std::string>());
        }
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    if (auto it = j.find("less_than"); it != j.end()) {
        if (!it->is_array()) {
            throw FormatError("\"less_than\" must be an array of pairs");
        }
        for (const auto& p : *it) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
                throw FormatError("\"less_than\" entries must be [smaller, greater] string pairs");
            }
            pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
        }
    }
    return SymbolOrder::from_pairs(std::move(symbols), pairs);
}

Json to_json(const Verdict& v) {
    Json out;
    out["consistent"] = v.consistent;
    Json list = Json::array();
    for (const auto& x : v.violations) {
        Json item;
        item["constraint"] = x.constraint;
        item["witness"] = x.witness;
        list.push_back(std::move(item));
    }
    out["violations"] = std::move(list);
    return out;
}

Json to_json(const NodeSet& s) {
    Json out;
    out["nodes"] = Json::array();
    for (const auto& v : s) {
        out["nodes"].push_back(v);
    }
    return out;
}

Json to_json(const PairSet& s) {
    Json out;
    out["pairs"] = Json::array();
    for (const auto& [u, w] : s) {
        out["pairs"].push_back(Json::array({u, w}));
    }
    return out;
}

Json to_json(const RepairResult& r, std::optional<std::int64_t> extra_weight) {
    Json out;
    out["status"] = to_string(r.status);
    out["maximality"] = to_string(r.maximality);
    out["explored"] = r.explored;
    if (r.repair && extra_weight) {
        out["extra_weight"] = *extra_weight;
    }
    if (r.repair) {
        out["graph"] = to_json(*r.repair);
    }
    return out;
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !out.write(text.data(), static_cast<std::streamsize>(text.size()))) {
        throw IoError("cannot write '" + path.string() + "'");
    }
}

DataGraph read_graph(const std::filesystem::path& path) { return graph_from_json(parse_json(read_file(path))); }

ConstraintSet read_constraints(const std::filesystem::path& path) { return parse_constraints(read_file(path)); }

WeightSpec read_weights(const std::filesystem::path& path) { return weights_from_json(parse_json(read_file(path))); }

SymbolOrder read_order(const std::filesystem::path& path) { return order_from_json(parse_json(read_file(path))); }

std::string constraints_text(const ConstraintSet& r) {
    std::string out;
    for (const auto& c : r.items()) {
        out += pretty(c);
        out += '\n';
    }
    return out;
}

void write_instance(const ReductionInstance& inst, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create '" + dir.string() + "': " + ec.message());
    }
    write_file(dir / "graph.json", dump(to_json(inst.graph), true) + "\n");
    write_file(dir / "constraints.gx", constraints_text(inst.constraints));
    write_file(dir / "weights.json", dump(to_json(inst.weights), true) + "\n");
    write_file(dir / "order.json", dump(to_json(inst.order), true) + "\n");
    Json meta;
    meta["K_w"] = inst.k_w;
    meta["K_mset"] = inst.k_mset;
    meta["label"] = inst.label;
    write_file(dir / "meta.json", dump(meta, true) + "\n");
}

}  // namespace gxrepair::io
