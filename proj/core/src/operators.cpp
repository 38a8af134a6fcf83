#include "qwalk/operators.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace qwalk {

namespace {

Matrix reflection_from(const Matrix& iso) {
    // 2 A A* - I for an isometry A
    Matrix r = iso * iso.conj_transpose() * Complex{2.0};
    for (std::size_t i = 0; i < r.rows(); ++i) r(i, i) -= 1.0;
    return r;
}

std::vector<std::string> edge_labels(const Multigraph& g) {
    std::vector<std::string> out;
    out.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        out.push_back(std::to_string(e.u) + "-" + std::to_string(e.v));
    return out;
}

} // namespace

WalkOperator grover_matrix(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    for (std::size_t v = 0; v < n; ++v)
        if (g.degree(v) == 0)
            throw ValidationError("grover_matrix: vertex " + std::to_string(v) +
                                  " has degree zero");
    const ArcSet arcs(g);
    const std::size_t na = arcs.size();
    Matrix u(na, na);
    for (std::size_t e = 0; e < na; ++e) {
        for (std::size_t f = 0; f < na; ++f) {
            if (arcs[f].terminus != arcs[e].origin) continue;
            double val = 2.0 / static_cast<double>(g.degree(arcs[f].terminus));
            if (arcs[e].inverse == f) val -= 1.0;
            u(e, f) = val;
        }
    }
    WalkOperator op{std::move(u), WalkKind::Grover, BasisKind::Arcs, {}, std::nullopt};
    op.labels.reserve(na);
    for (std::size_t i = 0; i < na; ++i)
        op.labels.push_back("(" + std::to_string(arcs[i].origin) + "->" +
                            std::to_string(arcs[i].terminus) + ")");
    return op;
}

Matrix positive_support(const Matrix& f) {
    Matrix out(f.rows(), f.cols());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j)
            out(i, j) = f(i, j).real() > 0.0 ? 1.0 : 0.0;
    return out;
}

Isometries szegedy_isometries(const BipartiteGraph& bg, const EdgeWeighting& w) {
    validate_weighting(bg, w);
    const std::size_t eps = bg.graph().edge_count();
    Matrix k(eps, bg.m()), l(eps, bg.n());
    for (std::size_t e = 0; e < eps; ++e) {
        k(e, bg.x_index(bg.x_end(e))) = std::sqrt(w.p[e]);
        l(e, bg.y_index(bg.y_end(e))) = std::sqrt(w.q[e]);
    }
    return {std::move(k), std::move(l)};
}

WalkOperator szegedy_walk(const Matrix& k, const Matrix& l, std::vector<std::string> labels) {
    if (k.rows() != l.rows())
        throw ValidationError("szegedy_walk: isometries act on different spaces");
    Matrix r0 = reflection_from(k);
    Matrix r1 = reflection_from(l);
    Matrix w = r1 * r0;
    if (labels.empty()) {
        labels.reserve(k.rows());
        for (std::size_t i = 0; i < k.rows(); ++i) labels.push_back("e" + std::to_string(i));
    }
    WalkOperator op{std::move(w), WalkKind::Szegedy, BasisKind::Edges, std::move(labels),
                    std::make_pair(std::move(r0), std::move(r1))};
    return op;
}

WalkOperator szegedy_walk(const BipartiteGraph& bg, const EdgeWeighting& w) {
    const Isometries iso = szegedy_isometries(bg, w);
    return szegedy_walk(iso.k, iso.l, edge_labels(bg.graph()));
}

Discriminant discriminant_ap(const Matrix& k, const Matrix& l) {
    const Matrix kl = k.conj_transpose() * l;
    return Discriminant{kl * kl.conj_transpose(), k.rows(), l.cols(), k.cols(),
                        DiscriminantKind::Ap};
}

Discriminant discriminant_aq(const Matrix& k, const Matrix& l) {
    const Matrix lk = l.conj_transpose() * k;
    return Discriminant{lk * lk.conj_transpose(), k.rows(), k.cols(), l.cols(),
                        DiscriminantKind::Aq};
}

void validate_amplitudes(const BipartiteGraph& h, const AmplitudeAssignment& amps, double tol) {
    const std::size_t eps = h.graph().edge_count();
    if (amps.a.size() != eps || amps.b.size() != eps)
        throw ValidationError("amplitude assignment size does not match edge count");
    std::vector<double> asum(h.graph().vertex_count(), 0.0), bsum(h.graph().vertex_count(), 0.0);
    for (std::size_t e = 0; e < eps; ++e) {
        asum[h.x_end(e)] += std::norm(amps.a[e]);
        bsum[h.y_end(e)] += std::norm(amps.b[e]);
    }
    for (std::size_t v : h.x_vertices())
        if (std::abs(asum[v] - 1.0) > tol)
            throw ValidationError("amplitudes a not normalized around vertex " + std::to_string(v));
    for (std::size_t v : h.y_vertices())
        if (std::abs(bsum[v] - 1.0) > tol)
            throw ValidationError("amplitudes b not normalized around vertex " + std::to_string(v));
}

AmplitudeAssignment uniform_amplitudes(const BipartiteGraph& h) {
    const EdgeWeighting w = uniform_weighting(h);
    AmplitudeAssignment amps;
    amps.a.reserve(w.p.size());
    amps.b.reserve(w.q.size());
    for (double p : w.p) amps.a.emplace_back(std::sqrt(p), 0.0);
    for (double q : w.q) amps.b.emplace_back(std::sqrt(q), 0.0);
    return amps;
}

SqwOperators sqw_operators(const BipartiteGraph& h, const AmplitudeAssignment& amps) {
    validate_amplitudes(h, amps);
    const std::size_t nu = h.graph().edge_count(); // vertices of L(H)
    Matrix k(nu, h.m()), l(nu, h.n());
    for (std::size_t e = 0; e < nu; ++e) {
        k(e, h.x_index(h.x_end(e))) = amps.a[e];
        l(e, h.y_index(h.y_end(e))) = amps.b[e];
    }
    Matrix u0 = reflection_from(k);
    Matrix u1 = reflection_from(l);
    Matrix u = u1 * u0;
    const Matrix kl = k.conj_transpose() * l;
    Discriminant ahat{kl * kl.conj_transpose(), nu, h.n(), h.m(), DiscriminantKind::Ahat};
    WalkOperator op{std::move(u), WalkKind::Sqw, BasisKind::Edges, edge_labels(h.graph()),
                    std::make_pair(std::move(u0), std::move(u1))};
    return SqwOperators{std::move(op), std::move(ahat)};
}

namespace {

Isometries search_isometries(const SearchInstance& si) {
    const std::size_t dim = si.edge_space_size();
    const std::size_t n = si.n();
    Matrix k(dim, n), l(dim, n);
    for (std::size_t e = 0; e < dim; ++e) {
        const EmEdge& em = si.edge_space()[e];
        k(e, em.v_end) = std::sqrt(em.p_mod);
        l(e, em.vprime_end) = std::sqrt(em.q_mod);
    }
    return {std::move(k), std::move(l)};
}

const char* class_tag(EdgeClass c) {
    switch (c) {
        case EdgeClass::Matching: return "N2";
        case EdgeClass::MarkedMarked: return "F2";
        default: return nullptr;
    }
}

} // namespace

SearchOperators search_operators(const SearchInstance& si) {
    const std::size_t n = si.n();
    const auto iso = search_isometries(si);

    Matrix r0 = reflection_from(iso.k);
    Matrix r1 = reflection_from(iso.l);
    Matrix wprime = r1 * r0;

    const Matrix kl = iso.k.conj_transpose() * iso.l;
    Discriminant ahat_p{kl * kl.conj_transpose(), si.edge_space_size(), n, n,
                        DiscriminantKind::SearchAp};

    Matrix p_full(2 * n, 2 * n), p_modified(2 * n, 2 * n);
    const auto& dup_edges = si.dup().graph().edges();
    for (std::size_t e = 0; e < si.edge_space_size(); ++e) {
        const EmEdge& em = si.edge_space()[e];
        if (e < dup_edges.size()) {
            p_full(em.v_end, n + em.vprime_end) += si.weighting().p[e];
            p_full(n + em.vprime_end, em.v_end) += si.weighting().q[e];
        }
        p_modified(em.v_end, n + em.vprime_end) += em.p_mod;
        p_modified(n + em.vprime_end, em.v_end) += em.q_mod;
    }

    std::vector<std::size_t> unmarked;
    for (std::size_t v = 0; v < n; ++v)
        if (!si.is_marked(v)) unmarked.push_back(v);
    Matrix p_dirichlet(unmarked.size(), unmarked.size());
    std::vector<std::size_t> pos(n, SIZE_MAX);
    for (std::size_t i = 0; i < unmarked.size(); ++i) pos[unmarked[i]] = i;
    for (std::size_t e = 0; e < dup_edges.size(); ++e) {
        const EmEdge& em = si.edge_space()[e];
        if (!si.is_marked(em.v_end) && !si.is_marked(em.vprime_end))
            p_dirichlet(pos[em.v_end], pos[em.vprime_end]) += si.weighting().p[e];
    }

    std::vector<std::string> labels;
    labels.reserve(si.edge_space_size());
    for (const EmEdge& em : si.edge_space()) {
        std::string lab = std::to_string(em.v_end) + "-" + std::to_string(em.vprime_end) + "'";
        if (const char* tag = class_tag(em.cls)) lab += std::string("[") + tag + "]";
        labels.push_back(std::move(lab));
    }
    WalkOperator op{std::move(wprime), WalkKind::Search, BasisKind::EdgeSpace, std::move(labels),
                    std::make_pair(std::move(r0), std::move(r1))};
    return SearchOperators{std::move(op), std::move(ahat_p), std::move(p_full),
                           std::move(p_modified), std::move(p_dirichlet)};
}

std::optional<std::vector<double>> detailed_balance(const SearchInstance& si, double tol) {
    const std::size_t n = si.n();
    std::vector<double> pi(2 * n, 0.0);
    for (std::size_t v : si.marked()) {
        pi[v] = 1.0;
        pi[n + v] = 1.0;
    }

    // Propagate ratios across the unmarked support, then verify every edge.
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(2 * n);
    for (const EmEdge& em : si.edge_space()) {
        if (em.cls != EdgeClass::Ordinary) continue;
        if (em.p_mod > 0.0 && em.q_mod > 0.0) {
            adj[em.v_end].emplace_back(n + em.vprime_end, em.p_mod / em.q_mod);
            adj[n + em.vprime_end].emplace_back(em.v_end, em.q_mod / em.p_mod);
        }
    }
    for (std::size_t root = 0; root < 2 * n; ++root) {
        const std::size_t base_v = root < n ? root : root - n;
        if (si.is_marked(base_v) || pi[root] != 0.0 || adj[root].empty()) continue;
        pi[root] = 1.0;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (const auto& [w, ratio] : adj[u]) {
                if (pi[w] == 0.0) {
                    pi[w] = pi[u] * ratio;
                    queue.push_back(w);
                }
            }
        }
    }
    // Isolated unmarked vertices get weight 1; nothing constrains them.
    for (std::size_t v = 0; v < 2 * n; ++v)
        if (pi[v] == 0.0) pi[v] = 1.0;

    for (const EmEdge& em : si.edge_space()) {
        if (em.cls != EdgeClass::Ordinary) continue;
        if (std::abs(em.p_mod * pi[em.v_end] - em.q_mod * pi[n + em.vprime_end]) > tol)
            return std::nullopt;
    }

    // The search chapter fixes q as the mirror of p (the stochastic matrix is
    // pairwise symmetric between a vertex and its copy); without it the
    // similarity below genuinely fails, so treat it as part of the condition.
    Matrix psum(n, n), qsum(n, n);
    for (const EmEdge& em : si.edge_space()) {
        if (em.cls != EdgeClass::Ordinary) continue;
        psum(em.v_end, em.vprime_end) += em.p_mod;
        qsum(em.v_end, em.vprime_end) += em.q_mod;
    }
    if (max_abs_diff(psum, qsum.conj_transpose()) > tol) return std::nullopt;

    // Theorem-level consistency: the discriminant must be similar to the
    // square of P_M ⊕ I_m under D = diag(sqrt(pi)).
    const SearchOperators ops = search_operators(si);
    std::vector<std::size_t> unmarked;
    for (std::size_t v = 0; v < n; ++v)
        if (!si.is_marked(v)) unmarked.push_back(v);
    Matrix pm_ext(n, n);
    for (std::size_t v : si.marked()) pm_ext(v, v) = 1.0;
    for (std::size_t i = 0; i < unmarked.size(); ++i)
        for (std::size_t j = 0; j < unmarked.size(); ++j)
            pm_ext(unmarked[i], unmarked[j]) = ops.p_dirichlet(i, j);
    Matrix conj = pm_ext * pm_ext;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            conj(u, v) *= std::sqrt(pi[u] / pi[v]);
    if (max_abs_diff(conj, ops.ahat_p.matrix) > 1e-8)
        throw NumericalError("detailed_balance: similarity to (P_M ⊕ I)^2 failed");
    return pi;
}

Matrix ap_combinatorial(const BipartiteGraph& bg, const EdgeWeighting& w) {
    const std::size_t eps = bg.graph().edge_count();
    Matrix a(bg.m(), bg.m());
    for (std::size_t e = 0; e < eps; ++e)
        for (std::size_t f = 0; f < eps; ++f)
            if (bg.y_end(e) == bg.y_end(f))
                a(bg.x_index(bg.x_end(e)), bg.x_index(bg.x_end(f))) +=
                    std::sqrt(w.p[e] * w.q[e] * w.p[f] * w.q[f]);
    return a;
}

Matrix aq_combinatorial(const BipartiteGraph& bg, const EdgeWeighting& w) {
    const std::size_t eps = bg.graph().edge_count();
    Matrix a(bg.n(), bg.n());
    for (std::size_t e = 0; e < eps; ++e)
        for (std::size_t f = 0; f < eps; ++f)
            if (bg.x_end(e) == bg.x_end(f))
                a(bg.y_index(bg.y_end(e)), bg.y_index(bg.y_end(f))) +=
                    std::sqrt(w.p[e] * w.q[e] * w.p[f] * w.q[f]);
    return a;
}

Matrix ahat_combinatorial(const BipartiteGraph& h, const AmplitudeAssignment& amps) {
    const std::size_t eps = h.graph().edge_count();
    Matrix a(h.m(), h.m());
    for (std::size_t e = 0; e < eps; ++e)
        for (std::size_t f = 0; f < eps; ++f)
            if (h.y_end(e) == h.y_end(f))
                a(h.x_index(h.x_end(e)), h.x_index(h.x_end(f))) +=
                    std::conj(amps.a[e]) * amps.b[e] * amps.a[f] * std::conj(amps.b[f]);
    return a;
}

Matrix search_ap_combinatorial(const SearchInstance& si) {
    const std::size_t n = si.n();
    const auto& edges = si.edge_space();
    Matrix a(n, n);
    for (std::size_t e = 0; e < edges.size(); ++e)
        for (std::size_t f = 0; f < edges.size(); ++f)
            if (edges[e].vprime_end == edges[f].vprime_end)
                a(edges[e].v_end, edges[f].v_end) += std::sqrt(edges[e].p_mod * edges[e].q_mod *
                                                               edges[f].p_mod * edges[f].q_mod);
    return a;
}

} // namespace qwalk
