#include "qwalk/corpus.hpp"

namespace qwalk {

Multigraph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t v = 0; v + 1 < n; ++v) edges.push_back(Edge{v, v + 1});
    return Multigraph(n, std::move(edges));
}

Multigraph cycle_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < n; ++v) edges.push_back(Edge{v, (v + 1) % n});
    return Multigraph(n, std::move(edges));
}

Multigraph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) edges.push_back(Edge{u, v});
    return Multigraph(n, std::move(edges));
}

Multigraph star_graph(std::size_t leaves) {
    std::vector<Edge> edges;
    for (std::size_t v = 1; v <= leaves; ++v) edges.push_back(Edge{0, v});
    return Multigraph(leaves + 1, std::move(edges));
}

Multigraph cube_graph() {
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < 8; ++v)
        for (std::size_t bit = 0; bit < 3; ++bit) {
            const std::size_t w = v ^ (std::size_t{1} << bit);
            if (v < w) edges.push_back(Edge{v, w});
        }
    return Multigraph(8, std::move(edges));
}

Multigraph complete_bipartite_graph(std::size_t a, std::size_t b) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < a; ++u)
        for (std::size_t v = 0; v < b; ++v) edges.push_back(Edge{u, a + v});
    return Multigraph(a + b, std::move(edges));
}

std::vector<NamedGraph> bundled_corpus() {
    std::vector<NamedGraph> out;
    out.push_back({"P2", path_graph(2)});
    out.push_back({"P3", path_graph(3)});
    out.push_back({"P5", path_graph(5)});
    out.push_back({"star3", star_graph(3)});
    out.push_back({"star5", star_graph(5)});
    out.push_back({"spider", Multigraph(7, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}, {5, 6}})});
    out.push_back({"C3", cycle_graph(3)});
    out.push_back({"C4", cycle_graph(4)});
    out.push_back({"C5", cycle_graph(5)});
    out.push_back({"C6", cycle_graph(6)});
    out.push_back({"C8", cycle_graph(8)});
    out.push_back({"K3", complete_graph(3)});
    out.push_back({"K4", complete_graph(4)});
    out.push_back({"K5", complete_graph(5)});
    out.push_back({"K6", complete_graph(6)});
    out.push_back({"K23", complete_bipartite_graph(2, 3)});
    out.push_back({"cube", cube_graph()});
    out.push_back({"bowtie", Multigraph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}})});
    out.push_back({"double_edge", Multigraph(2, {{0, 1}, {0, 1}})});
    out.push_back({"theta", Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {0, 2}})});
    out.push_back({"loop1", Multigraph(1, {{0, 0}})});
    out.push_back({"loop_triangle", Multigraph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 0}})});
    out.push_back({"loop_path", Multigraph(3, {{0, 1}, {1, 2}, {2, 2}, {0, 0}})});
    return out;
}

std::optional<BipartiteGraph> bipartite_view(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const Edge& e : g.edges()) {
        if (e.loop()) return std::nullopt;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> color(n, -1);
    for (std::size_t start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : adj[v]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<Side> side(n);
    for (std::size_t v = 0; v < n; ++v) side[v] = color[v] == 0 ? Side::X : Side::Y;
    return BipartiteGraph(g, std::move(side));
}

std::vector<NamedGraph> regular_corpus() {
    std::vector<NamedGraph> out;
    out.push_back({"C3", cycle_graph(3)});
    out.push_back({"C4", cycle_graph(4)});
    out.push_back({"C6", cycle_graph(6)});
    out.push_back({"K3", complete_graph(3)});
    out.push_back({"K4", complete_graph(4)});
    out.push_back({"K5", complete_graph(5)});
    out.push_back({"cube", cube_graph()});
    return out;
}

} // namespace qwalk
