#pragma once

#include <string>
#include <string_view>

#include "gjs/graph.hpp"

namespace gjs {

// Graph files are JSON objects:
//   {"vertices": [{"id": "v", "parity": "even", "weight2": 0.5}, ...],
//    "edges":    [{"u": "v", "v": "w", "mult": 1}, ...]}
// weight2 and mult are optional. Unknown fields are rejected.
GraphSpec parse_graph_spec(std::string_view text);
GraphSpec load_graph_spec(const std::string& file);
std::string dump_graph_spec(const GraphSpec& spec);

}  // namespace gjs
