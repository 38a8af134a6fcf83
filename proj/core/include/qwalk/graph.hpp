#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/complex_matrix.hpp"

namespace qwalk {

struct Edge {
    std::size_t u;
    std::size_t v;
    bool loop() const { return u == v; }
};

/// Finite undirected multigraph; parallel edges and loops allowed. The edge
/// list order is the canonical index space for every edge-indexed matrix.
/// A loop contributes 2 to the degree and 2 to the adjacency diagonal.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_[i]; }

    std::size_t degree(std::size_t v) const { return degree_[v]; }
    std::size_t loops_at(std::size_t v) const;
    std::size_t min_degree() const;
    bool regular(std::size_t* k = nullptr) const;
    bool connected() const;
    bool is_tree() const { return connected() && edge_count() + 1 == vertex_count(); }

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> degree_;
};

/// Oriented edges e_1..e_m followed by their inverses e_1^-1..e_m^-1.
struct Arc {
    std::size_t origin;
    std::size_t terminus;
    std::size_t inverse; // index of the reversed arc
};

class ArcSet {
public:
    explicit ArcSet(const Multigraph& g);
    std::size_t size() const { return arcs_.size(); }
    const Arc& operator[](std::size_t i) const { return arcs_[i]; }
    const std::vector<Arc>& arcs() const { return arcs_; }

private:
    std::vector<Arc> arcs_;
};

/// Edge-list format: first non-comment line is the vertex count, every
/// following line is "u v" with 0-based indices. '#' starts a comment.
Multigraph parse_multigraph(std::string_view text);

Matrix adjacency_matrix(const Multigraph& g);

/// Simple random walk matrix T = D^-1 A; rows sum to 1. Degree-zero vertices
/// are rejected.
Matrix random_walk_matrix(const Multigraph& g);

/// Real spectrum of T via the symmetrized D^1/2 T D^-1/2, ascending.
std::vector<double> transition_spectrum(const Multigraph& g);

/// One vertex per edge of h; two vertices are joined once for every shared
/// endpoint, so parallel edges of h produce a double edge in L(h).
Multigraph line_graph(const Multigraph& h);

} // namespace qwalk
