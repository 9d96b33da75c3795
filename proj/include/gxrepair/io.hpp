// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gxrepair/consistency.hpp"
#include "gxrepair/datagraph.hpp"
#include "gxrepair/eval.hpp"
#include "gxrepair/reductions.hpp"
#include "gxrepair/repair.hpp"

namespace gxrepair::io {

using Json = nlohmann::ordered_json;

// Malformed JSON text raises ParseError; JSON of the wrong shape raises
// FormatError; graph-level problems (duplicates, dangling edges) raise
// GraphError.
[[nodiscard]] Json parse_json(std::string_view text);

// Nodes sorted by id, edges by (from, to, label).
[[nodiscard]] Json to_json(const DataGraph& g);
[[nodiscard]] DataGraph graph_from_json(const Json& j);

[[nodiscard]] Json to_json(const WeightSpec& w);
[[nodiscard]] WeightSpec weights_from_json(const Json& j);

[[nodiscard]] Json to_json(const SymbolOrder& ord);
[[nodiscard]] SymbolOrder order_from_json(const Json& j);

[[nodiscard]] Json to_json(const Verdict& v);
[[nodiscard]] Json to_json(const NodeSet& s);
[[nodiscard]] Json to_json(const PairSet& s);

// `extra_weight` is w(repair) - w(g); omitted when there is no repair.
[[nodiscard]] Json to_json(const RepairResult& r, std::optional<std::int64_t> extra_weight);

[[nodiscard]] std::string dump(const Json& j, bool pretty);

// Throws IoError.
[[nodiscard]] std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

[[nodiscard]] DataGraph read_graph(const std::filesystem::path& path);
[[nodiscard]] ConstraintSet read_constraints(const std::filesystem::path& path);
[[nodiscard]] WeightSpec read_weights(const std::filesystem::path& path);
[[nodiscard]] SymbolOrder read_order(const std::filesystem::path& path);

// One `node:`/`path:` line per constraint.
[[nodiscard]] std::string constraints_text(const ConstraintSet& r);

// graph.json, constraints.gx, weights.json, order.json, meta.json.
void write_instance(const ReductionInstance& inst, const std::filesystem::path& dir);

}  // namespace gxrepair::io
