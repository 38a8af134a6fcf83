#include "qwalk/bipartite.hpp"

#include <cmath>

#include "graph_file.hpp"

namespace qwalk {

BipartiteGraph::BipartiteGraph(Multigraph underlying, std::vector<Side> side_of)
    : underlying_(std::move(underlying)), side_of_(std::move(side_of)) {
    const std::size_t n = underlying_.vertex_count();
    if (side_of_.size() != n)
        throw ValidationError("bipartite side map size mismatch");
    x_pos_.assign(n, 0);
    y_pos_.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (side_of_[v] == Side::X) {
            x_pos_[v] = x_vertices_.size();
            x_vertices_.push_back(v);
        } else {
            y_pos_[v] = y_vertices_.size();
            y_vertices_.push_back(v);
        }
    }
    for (const Edge& e : underlying_.edges())
        if (side_of_[e.u] == side_of_[e.v])
            throw ValidationError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                  " does not cross the bipartition");
}

std::size_t BipartiteGraph::x_end(std::size_t e) const {
    const Edge& ed = underlying_.edge(e);
    return side_of_[ed.u] == Side::X ? ed.u : ed.v;
}

std::size_t BipartiteGraph::y_end(std::size_t e) const {
    const Edge& ed = underlying_.edge(e);
    return side_of_[ed.u] == Side::Y ? ed.u : ed.v;
}

BipartiteGraph parse_bipartite(std::string_view text) {
    const auto parsed = detail::parse_graph_file(text);
    if (!parsed.has_side_header)
        throw ValidationError("bipartite graph file needs an 'X: ...' header line");
    std::vector<Side> side(parsed.vertex_count, Side::Y);
    for (std::size_t v : parsed.x_side) {
        if (v >= parsed.vertex_count)
            throw ValidationError("X: header names vertex " + std::to_string(v) +
                                  " outside the vertex range");
        side[v] = Side::X;
    }
    return BipartiteGraph(Multigraph(parsed.vertex_count, parsed.edges), std::move(side));
}

void validate_weighting(const BipartiteGraph& bg, const EdgeWeighting& w, double tol) {
    const std::size_t eps = bg.graph().edge_count();
    if (w.p.size() != eps || w.q.size() != eps)
        throw ValidationError("weighting size does not match edge count");
    for (std::size_t e = 0; e < eps; ++e)
        if (w.p[e] < 0.0 || w.p[e] > 1.0 || w.q[e] < 0.0 || w.q[e] > 1.0)
            throw ValidationError("weighting entry outside [0,1] at edge " + std::to_string(e));
    std::vector<double> psum(bg.graph().vertex_count(), 0.0), qsum(bg.graph().vertex_count(), 0.0);
    for (std::size_t e = 0; e < eps; ++e) {
        psum[bg.x_end(e)] += w.p[e];
        qsum[bg.y_end(e)] += w.q[e];
    }
    for (std::size_t v : bg.x_vertices())
        if (std::abs(psum[v] - 1.0) > tol)
            throw ValidationError("p does not sum to 1 around vertex " + std::to_string(v));
    for (std::size_t v : bg.y_vertices())
        if (std::abs(qsum[v] - 1.0) > tol)
            throw ValidationError("q does not sum to 1 around vertex " + std::to_string(v));
}

EdgeWeighting uniform_weighting(const BipartiteGraph& bg) {
    const std::size_t eps = bg.graph().edge_count();
    EdgeWeighting w;
    w.p.resize(eps);
    w.q.resize(eps);
    for (std::size_t e = 0; e < eps; ++e) {
        w.p[e] = 1.0 / static_cast<double>(bg.graph().degree(bg.x_end(e)));
        w.q[e] = 1.0 / static_cast<double>(bg.graph().degree(bg.y_end(e)));
    }
    return w;
}

BipartiteGraph duplication(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(2 * g.edge_count());
    for (const Edge& e : g.edges()) {
        if (e.loop()) {
            edges.push_back(Edge{e.u, n + e.u});
        } else {
            edges.push_back(Edge{e.u, n + e.v});
            edges.push_back(Edge{e.v, n + e.u});
        }
    }
    std::vector<Side> side(2 * n, Side::Y);
    for (std::size_t v = 0; v < n; ++v) side[v] = Side::X;
    return BipartiteGraph(Multigraph(2 * n, std::move(edges)), std::move(side));
}

} // namespace qwalk
