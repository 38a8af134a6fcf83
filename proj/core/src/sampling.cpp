#include "qwalk/sampling.hpp"

#include <cmath>

namespace qwalk {

Matrix random_complex_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Complex{gauss(rng), gauss(rng)};
    return m;
}

Matrix random_isometry(std::size_t big_n, std::size_t s, Rng& rng) {
    if (s > big_n) throw ValidationError("random_isometry: more columns than rows");
    Matrix a = random_complex_matrix(big_n, s, rng);
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < s; ++j) {
            for (std::size_t k = 0; k < j; ++k) {
                Complex dot{};
                for (std::size_t i = 0; i < big_n; ++i) dot += std::conj(a(i, k)) * a(i, j);
                for (std::size_t i = 0; i < big_n; ++i) a(i, j) -= dot * a(i, k);
            }
            double nrm = 0.0;
            for (std::size_t i = 0; i < big_n; ++i) nrm += std::norm(a(i, j));
            nrm = std::sqrt(nrm);
            if (nrm < 1e-12) return random_isometry(big_n, s, rng); // rank fluke, re-draw
            for (std::size_t i = 0; i < big_n; ++i) a(i, j) /= nrm;
        }
    }
    return a;
}

EdgeWeighting random_weighting(const BipartiteGraph& bg, Rng& rng) {
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    const std::size_t eps = bg.graph().edge_count();
    EdgeWeighting w;
    w.p.resize(eps);
    w.q.resize(eps);
    std::vector<double> psum(bg.graph().vertex_count(), 0.0), qsum(bg.graph().vertex_count(), 0.0);
    for (std::size_t e = 0; e < eps; ++e) {
        w.p[e] = unit(rng);
        w.q[e] = unit(rng);
        psum[bg.x_end(e)] += w.p[e];
        qsum[bg.y_end(e)] += w.q[e];
    }
    for (std::size_t e = 0; e < eps; ++e) {
        w.p[e] /= psum[bg.x_end(e)];
        w.q[e] /= qsum[bg.y_end(e)];
    }
    return w;
}

AmplitudeAssignment random_amplitudes(const BipartiteGraph& h, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::size_t eps = h.graph().edge_count();
    AmplitudeAssignment amps;
    amps.a.resize(eps);
    amps.b.resize(eps);
    std::vector<double> asum(h.graph().vertex_count(), 0.0), bsum(h.graph().vertex_count(), 0.0);
    for (std::size_t e = 0; e < eps; ++e) {
        // Keep every entry away from zero so star norms stay well conditioned.
        amps.a[e] = Complex{gauss(rng), gauss(rng)} + Complex{0.3, 0.3};
        amps.b[e] = Complex{gauss(rng), gauss(rng)} + Complex{0.3, -0.3};
        asum[h.x_end(e)] += std::norm(amps.a[e]);
        bsum[h.y_end(e)] += std::norm(amps.b[e]);
    }
    for (std::size_t e = 0; e < eps; ++e) {
        amps.a[e] /= std::sqrt(asum[h.x_end(e)]);
        amps.b[e] /= std::sqrt(bsum[h.y_end(e)]);
    }
    return amps;
}

std::optional<EdgeWeighting> doubly_stochastic_weighting(const BipartiteGraph& bg, Rng& rng,
                                                         int max_iters) {
    std::uniform_real_distribution<double> unit(0.2, 1.0);
    const std::size_t eps = bg.graph().edge_count();
    std::vector<double> w(eps);
    for (double& x : w) x = unit(rng);

    std::vector<double> xsum(bg.graph().vertex_count()), ysum(bg.graph().vertex_count());
    for (int it = 0; it < max_iters; ++it) {
        std::fill(xsum.begin(), xsum.end(), 0.0);
        for (std::size_t e = 0; e < eps; ++e) xsum[bg.x_end(e)] += w[e];
        for (std::size_t e = 0; e < eps; ++e) w[e] /= xsum[bg.x_end(e)];
        std::fill(ysum.begin(), ysum.end(), 0.0);
        for (std::size_t e = 0; e < eps; ++e) ysum[bg.y_end(e)] += w[e];
        double worst = 0.0;
        for (std::size_t v : bg.y_vertices()) worst = std::max(worst, std::abs(ysum[v] - 1.0));
        if (worst < 1e-14) {
            EdgeWeighting out{w, w};
            return out;
        }
        for (std::size_t e = 0; e < eps; ++e) w[e] /= ysum[bg.y_end(e)];
    }
    return std::nullopt;
}

Multigraph random_connected_multigraph(std::size_t max_vertices, Rng& rng, bool allow_loops) {
    std::uniform_int_distribution<std::size_t> nv(2, max_vertices);
    const std::size_t n = nv(rng);
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> parent(0, v - 1);
        edges.push_back(Edge{parent(rng), v});
    }
    std::uniform_int_distribution<std::size_t> extra(0, n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const std::size_t extras = extra(rng);
    for (std::size_t i = 0; i < extras; ++i) {
        std::size_t u = pick(rng), v = pick(rng);
        if (u == v && !allow_loops) continue;
        edges.push_back(Edge{u, v});
    }
    return Multigraph(n, std::move(edges));
}

} // namespace qwalk
