#include "qwalk/verification.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "qwalk/corpus.hpp"
#include "qwalk/sampling.hpp"
#include "qwalk/spectra.hpp"

namespace qwalk {

namespace {

struct IsometryShape {
    std::size_t big_n, s, t;
};

// Cycle through the four sign regimes of N-(s+t) and s-t so every code path
// of the lift is exercised.
IsometryShape shape_for(std::size_t trial, Rng& rng) {
    std::uniform_int_distribution<std::size_t> nd(4, 20);
    const std::size_t n = nd(rng);
    auto pick = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, std::max(lo, hi))(rng);
    };
    switch (trial % 4) {
        case 0: { // N >= s+t, s >= t
            const std::size_t t = pick(1, n / 2);
            return IsometryShape{n, pick(t, n - t), t};
        }
        case 1: { // N >= s+t, s < t
            const std::size_t t = pick(2, n / 2);
            return IsometryShape{n, pick(1, std::min(t - 1, n - t)), t};
        }
        case 2: { // N < s+t, s >= t
            const std::size_t s = pick(n / 2 + 1, n);
            return IsometryShape{n, s, pick(n - s + 1, s)};
        }
        default: { // N < s+t, s < t
            const std::size_t t = pick(n / 2 + 2, n);
            return IsometryShape{n, pick(n - t + 1, t - 1), t};
        }
    }
}

std::string residual_detail(double worst, double bound) {
    std::ostringstream os;
    os << "max residual " << worst << " (bound " << bound << ")";
    return os.str();
}

} // namespace

SuiteResult run_key_identity_suite(std::size_t trials, std::uint64_t seed) {
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
        const IsometryShape sh = shape_for(i, rng);
        const Matrix a = random_isometry(sh.big_n, sh.s, rng);
        const Matrix b = random_isometry(sh.big_n, sh.t, rng);
        worst = std::max(worst, key_identity_check(a, b, 20, rng()));
    }
    const bool pass = worst <= 1e-8;
    return SuiteResult{"key-identity", pass, trials, worst, residual_detail(worst, 1e-8)};
}

SuiteResult run_lemma32_suite(std::size_t trials, std::uint64_t seed) {
    Rng rng(seed);
    double worst = 0.0; // distance outside [0, 1]
    for (std::size_t i = 0; i < trials; ++i) {
        const IsometryShape sh = shape_for(i, rng);
        const Matrix a = random_isometry(sh.big_n, sh.s, rng);
        const Matrix b = random_isometry(sh.big_n, sh.t, rng);
        const Matrix t_ba = b.conj_transpose() * a;
        const Matrix disc = t_ba * t_ba.conj_transpose();
        for (double lam : eig_hermitian(disc).values)
            worst = std::max({worst, -lam, lam - 1.0});
    }
    const bool pass = worst <= 1e-9;
    return SuiteResult{"lemma32", pass, trials, worst,
                       residual_detail(worst, 1e-9) + " outside [0,1]"};
}

SuiteResult run_remark33_suite(std::size_t trials, std::uint64_t seed) {
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
        const IsometryShape sh = shape_for(i, rng);
        const Matrix a = random_isometry(sh.big_n, sh.s, rng);
        const Matrix b = random_isometry(sh.big_n, sh.t, rng);
        const Matrix t_ba = b.conj_transpose() * a;
        const Matrix t_ab = t_ba.conj_transpose();
        std::vector<double> side_t = eig_hermitian(t_ba * t_ab).values; // t x t
        std::vector<double> side_s = eig_hermitian(t_ab * t_ba).values; // s x s
        // Pad the smaller side with zeros; the multisets must then agree.
        while (side_t.size() < side_s.size()) side_t.push_back(0.0);
        while (side_s.size() < side_t.size()) side_s.push_back(0.0);
        std::sort(side_t.begin(), side_t.end());
        std::sort(side_s.begin(), side_s.end());
        for (std::size_t j = 0; j < side_t.size(); ++j)
            worst = std::max(worst, std::abs(side_t[j] - side_s[j]));
    }
    const bool pass = worst <= 1e-7;
    return SuiteResult{"remark33", pass, trials, worst, residual_detail(worst, 1e-7)};
}

SuiteResult run_grover_charpoly_suite(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    double worst = 0.0;
    std::size_t cases = 0;
    for (const NamedGraph& ng : bundled_corpus()) {
        if (!ng.graph.connected()) continue;
        worst = std::max(worst, grover_charpoly_check(ng.graph, static_cast<int>(samples), rng()));
        ++cases;
    }
    const bool pass = worst <= 1e-8;
    return SuiteResult{"grover-charpoly", pass, cases, worst, residual_detail(worst, 1e-8)};
}

SuiteResult run_formula_vs_direct_suite(std::size_t trials, std::uint64_t seed, double tol) {
    Rng rng(seed);
    double worst = 0.0;
    std::size_t cases = 0;
    std::string first_failure;

    auto check = [&](const SpectrumReport& formula, const Matrix& op, const std::string& what) {
        const SpectrumReport direct = direct_spectrum(op);
        const MatchReport match = multiset_match(formula.multiset(), direct.multiset(), tol);
        worst = std::max(worst, match.max_distance);
        ++cases;
        if (!match.ok && first_failure.empty()) first_failure = what;
    };

    for (const NamedGraph& ng : bundled_corpus()) {
        if (!ng.graph.connected()) continue;
        check(grover_spectrum(ng.graph), grover_matrix(ng.graph).matrix, "grover/" + ng.name);

        std::size_t k = 0;
        if (ng.graph.regular(&k) && k >= 2)
            check(positive_support_spectrum(ng.graph),
                  positive_support(grover_matrix(ng.graph).matrix), "support/" + ng.name);

        if (const auto bg = bipartite_view(ng.graph)) {
            check(szegedy_spectrum(*bg, uniform_weighting(*bg)), szegedy_walk(*bg, uniform_weighting(*bg)).matrix,
                  "szegedy-uniform/" + ng.name);
            for (std::size_t trial = 0; trial < trials; ++trial) {
                const EdgeWeighting w = random_weighting(*bg, rng);
                check(szegedy_spectrum(*bg, w), szegedy_walk(*bg, w).matrix,
                      "szegedy/" + ng.name);
                const AmplitudeAssignment amps = random_amplitudes(*bg, rng);
                check(sqw_spectrum(*bg, amps), sqw_operators(*bg, amps).walk.matrix,
                      "sqw/" + ng.name);
            }
        }

        const std::size_t n = ng.graph.vertex_count();
        if (n >= 2) {
            std::vector<std::vector<std::size_t>> marked_sets = {{n - 1}};
            if (n >= 3) marked_sets.push_back({n - 2, n - 1});
            for (const auto& marked : marked_sets) {
                const SearchInstance si = build_search_instance_uniform(ng.graph, marked);
                check(search_spectrum(si), search_operators(si).walk.matrix,
                      "search-uniform/" + ng.name);
            }
            for (std::size_t trial = 0; trial < trials; ++trial) {
                const BipartiteGraph dup = duplication(ng.graph);
                const SearchInstance si(ng.graph, random_weighting(dup, rng), {n - 1});
                check(search_spectrum(si), search_operators(si).walk.matrix,
                      "search/" + ng.name);
            }
        }
    }
    const bool pass = first_failure.empty();
    std::string detail = residual_detail(worst, tol);
    if (!pass) detail += ", first failure: " + first_failure;
    return SuiteResult{"formula-vs-direct", pass, cases, worst, detail};
}

} // namespace qwalk
