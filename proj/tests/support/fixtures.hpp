// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>
#include <utility>

#include "gxrepair/datagraph.hpp"

namespace gxrepair::testing {

inline std::filesystem::path source_dir() { return GXREPAIR_SOURCE_DIR; }
inline std::filesystem::path data_dir() { return source_dir() / "data"; }
inline std::filesystem::path golden_dir() { return source_dir() / "tests" / "golden"; }

// make_graph({{"u", "1"}, {"v", "2"}}, {{"u", "v", "a"}})
inline DataGraph make_graph(std::initializer_list<std::pair<NodeId, DataValue>> nodes,
                            std::initializer_list<Edge> edges = {}) {
    DataGraph g;
    for (const auto& [id, d] : nodes) {
        g.add_node(id, d);
    }
    for (const auto& e : edges) {
        g.add_edge(e);
    }
    return g;
}

}  // namespace gxrepair::testing
