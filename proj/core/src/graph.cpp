#include "qwalk/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "graph_file.hpp"
#include "qwalk/eigen.hpp"

namespace qwalk {

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), degree_(vertex_count, 0) {
    for (const Edge& e : edges_) {
        if (e.u >= vertex_count_ || e.v >= vertex_count_)
            throw ValidationError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                                  std::to_string(e.v));
        degree_[e.u] += 1;
        degree_[e.v] += 1; // a loop lands here twice, giving degree 2
    }
}

std::size_t Multigraph::loops_at(std::size_t v) const {
    std::size_t c = 0;
    for (const Edge& e : edges_)
        if (e.loop() && e.u == v) ++c;
    return c;
}

std::size_t Multigraph::min_degree() const {
    std::size_t m = edges_.empty() && vertex_count_ == 0 ? 0 : SIZE_MAX;
    for (std::size_t v = 0; v < vertex_count_; ++v) m = std::min(m, degree_[v]);
    return vertex_count_ == 0 ? 0 : m;
}

bool Multigraph::regular(std::size_t* k) const {
    if (vertex_count_ == 0) return false;
    for (std::size_t v = 1; v < vertex_count_; ++v)
        if (degree_[v] != degree_[0]) return false;
    if (k) *k = degree_[0];
    return true;
}

bool Multigraph::connected() const {
    if (vertex_count_ == 0) return false;
    std::vector<std::vector<std::size_t>> adj(vertex_count_);
    for (const Edge& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<bool> seen(vertex_count_, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t visited = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == vertex_count_;
}

ArcSet::ArcSet(const Multigraph& g) {
    const std::size_t m = g.edge_count();
    arcs_.resize(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        const Edge& e = g.edge(i);
        arcs_[i] = Arc{e.u, e.v, i + m};
        arcs_[i + m] = Arc{e.v, e.u, i};
    }
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::string_view strip_comment(std::string_view s) {
    const auto pos = s.find('#');
    return trim(pos == std::string_view::npos ? s : s.substr(0, pos));
}

bool parse_size(std::string_view tok, std::size_t& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    const auto res = std::from_chars(first, last, out);
    return res.ec == std::errc{} && res.ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace

namespace detail {

ParsedGraphFile parse_graph_file(std::string_view text) {
    ParsedGraphFile out;
    std::size_t lineno = 0;
    bool have_count = false;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto nl = rest.find('\n');
        std::string_view raw = rest.substr(0, nl);
        rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
        ++lineno;
        const std::string_view line = strip_comment(raw);
        if (line.empty()) continue;
        if (!have_count) {
            if (!parse_size(line, out.vertex_count))
                throw ParseError("expected vertex count, got '" + std::string(line) + "'", lineno);
            have_count = true;
            continue;
        }
        if (line.substr(0, 2) == "X:") {
            if (out.has_side_header || !out.edges.empty())
                throw ParseError("misplaced 'X:' header", lineno);
            out.has_side_header = true;
            for (std::string_view tok : split_ws(line.substr(2))) {
                std::size_t v;
                if (!parse_size(tok, v))
                    throw ParseError("bad vertex index '" + std::string(tok) + "' in X: header", lineno);
                out.x_side.push_back(v);
            }
            continue;
        }
        const auto toks = split_ws(line);
        std::size_t u, v;
        if (toks.size() != 2 || !parse_size(toks[0], u) || !parse_size(toks[1], v))
            throw ParseError("expected edge 'u v', got '" + std::string(line) + "'", lineno);
        out.edges.push_back(Edge{u, v});
    }
    if (!have_count) throw ParseError("empty graph document", lineno == 0 ? 1 : lineno);
    return out;
}

} // namespace detail

Multigraph parse_multigraph(std::string_view text) {
    const auto parsed = detail::parse_graph_file(text);
    if (parsed.has_side_header)
        throw ValidationError("unexpected 'X:' header in a plain graph file");
    return Multigraph(parsed.vertex_count, parsed.edges);
}

Matrix adjacency_matrix(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    Matrix a(n, n);
    for (const Edge& e : g.edges()) {
        if (e.loop()) {
            a(e.u, e.u) += 2.0;
        } else {
            a(e.u, e.v) += 1.0;
            a(e.v, e.u) += 1.0;
        }
    }
    return a;
}

Matrix random_walk_matrix(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    for (std::size_t v = 0; v < n; ++v)
        if (g.degree(v) == 0)
            throw ValidationError("random_walk_matrix: vertex " + std::to_string(v) +
                                  " has degree zero");
    Matrix t = adjacency_matrix(g);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) t(u, v) /= static_cast<double>(g.degree(u));
    return t;
}

std::vector<double> transition_spectrum(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    for (std::size_t v = 0; v < n; ++v)
        if (g.degree(v) == 0)
            throw ValidationError("transition_spectrum: vertex has degree zero");
    // D^1/2 T D^-1/2 = D^-1/2 A D^-1/2 is Hermitian with the same spectrum as T.
    Matrix s = adjacency_matrix(g);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            s(u, v) /= std::sqrt(static_cast<double>(g.degree(u)) * static_cast<double>(g.degree(v)));
    return eig_hermitian(s).values;
}

Multigraph line_graph(const Multigraph& h) {
    const std::size_t m = h.edge_count();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const Edge& e = h.edge(i);
            const Edge& f = h.edge(j);
            // Multiplicity = number of shared endpoint slots; a parallel pair
            // shares two, so it yields a double edge in L(h).
            std::size_t shared = 0;
            for (std::size_t a : {e.u, e.v})
                for (std::size_t b : {f.u, f.v})
                    if (a == b) ++shared;
            for (std::size_t k = 0; k < shared; ++k) edges.push_back(Edge{i, j});
        }
    }
    return Multigraph(m, std::move(edges));
}

} // namespace qwalk
