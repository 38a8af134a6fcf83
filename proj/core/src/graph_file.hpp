#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "qwalk/graph.hpp"

namespace qwalk::detail {

// Shared edge-list scanner. Returns the vertex count, edge list and, when an
// "X: ..." header follows the count, the X-side vertex list.
struct ParsedGraphFile {
    std::size_t vertex_count = 0;
    std::vector<Edge> edges;
    bool has_side_header = false;
    std::vector<std::size_t> x_side;
};

ParsedGraphFile parse_graph_file(std::string_view text);

} // namespace qwalk::detail
