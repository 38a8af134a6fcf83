#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "qwalk/graph.hpp"

namespace qwalk {

enum class Side { X, Y };

/// A multigraph together with a two-part vertex partition; every edge joins
/// side X to side Y (so loops are impossible here).
class BipartiteGraph {
public:
    BipartiteGraph(Multigraph underlying, std::vector<Side> side_of);

    const Multigraph& graph() const { return underlying_; }
    Side side(std::size_t v) const { return side_of_[v]; }
    std::size_t m() const { return x_vertices_.size(); } // |X|
    std::size_t n() const { return y_vertices_.size(); } // |Y|

    /// The endpoint of edge e on side X (resp. Y).
    std::size_t x_end(std::size_t e) const;
    std::size_t y_end(std::size_t e) const;

    /// Dense column index of a vertex within its own side, by ascending
    /// vertex number. All isometry columns are keyed to these.
    std::size_t x_index(std::size_t v) const { return x_pos_[v]; }
    std::size_t y_index(std::size_t v) const { return y_pos_[v]; }
    const std::vector<std::size_t>& x_vertices() const { return x_vertices_; }
    const std::vector<std::size_t>& y_vertices() const { return y_vertices_; }

private:
    Multigraph underlying_;
    std::vector<Side> side_of_;
    std::vector<std::size_t> x_vertices_, y_vertices_;
    std::vector<std::size_t> x_pos_, y_pos_;
};

/// Same edge-list format as parse_multigraph plus a second header line
/// "X: i j k ..." naming the side-X vertices.
BipartiteGraph parse_bipartite(std::string_view text);

/// The probability pair (p, q) on the edges of a bipartite graph: p rows sum
/// to one around every x in X, q rows around every y in Y.
struct EdgeWeighting {
    std::vector<double> p;
    std::vector<double> q;
};

void validate_weighting(const BipartiteGraph& bg, const EdgeWeighting& w, double tol = 1e-12);

/// p(e) = 1/deg(X(e)), q(e) = 1/deg(Y(e)).
EdgeWeighting uniform_weighting(const BipartiteGraph& bg);

/// Bipartite double of g on V ⊔ V': every edge uv yields u-v' and v-u';
/// a loop at u yields the single edge u-u'. Copies are numbered v' = n + v.
BipartiteGraph duplication(const Multigraph& g);

} // namespace qwalk
