#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qwalk/bipartite.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

Multigraph path_graph(std::size_t n);
Multigraph cycle_graph(std::size_t n);
Multigraph complete_graph(std::size_t n);
Multigraph star_graph(std::size_t leaves); // K_{1,leaves}, center first
Multigraph cube_graph();                   // Q_3
Multigraph complete_bipartite_graph(std::size_t a, std::size_t b);

struct NamedGraph {
    std::string name;
    Multigraph graph;
};

/// The bundled verification corpus: connected graphs on at most 8 vertices,
/// covering trees, cycles, complete graphs and multigraphs with parallel
/// edges and loops.
std::vector<NamedGraph> bundled_corpus();

/// The md2 regular members (C_n, K_n, the cube) used by the positive-support
/// suite.
std::vector<NamedGraph> regular_corpus();

/// Two-coloring of a bipartite multigraph, X = the color class of vertex 0;
/// nullopt when an odd cycle exists.
std::optional<BipartiteGraph> bipartite_view(const Multigraph& g);

} // namespace qwalk
