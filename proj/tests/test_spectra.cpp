#include <doctest.h>

#include <cmath>

#include <qwalk/corpus.hpp>
#include <qwalk/sampling.hpp>
#include <qwalk/spectra.hpp>

#include "helpers.hpp"

using namespace qwalk;
using qwalk::testing::multiset;
using qwalk::testing::paper_k22;
using qwalk::testing::paper_k3;

namespace {

void expect_match(const SpectrumReport& formula, const Matrix& op, double tol = 1e-6) {
    const SpectrumReport direct = direct_spectrum(op);
    const MatchReport match = multiset_match(formula.multiset(), direct.multiset(), tol);
    CAPTURE(match.max_distance);
    CHECK(match.ok);
}

} // namespace

TEST_CASE("key identity on the section-6 isometries") {
    const auto iso = szegedy_isometries(paper_k22(), qwalk::testing::half_weighting());
    CHECK(key_identity_check(iso.k, iso.l, 20, 7) <= 1e-9);
}

TEST_CASE("key identity trivial and random cases") {
    const Matrix id = Matrix::identity(5);
    CHECK(key_identity_check(id, id, 10, 3) <= 1e-12);

    Rng rng(41);
    const Matrix a = random_isometry(9, 4, rng);
    const Matrix b = random_isometry(9, 3, rng);
    CHECK(key_identity_check(a, b, 20, 11) <= 1e-8);

    const Matrix notiso(3, 2, {1.0, 0.0, 1.0, 0.0, 0.0, 1.0});
    CHECK_THROWS_AS(key_identity_check(notiso, id, 5, 1), ValidationError);
}

TEST_CASE("lift_spectrum reproduces the worked examples") {
    // section 6: disc {0, 1}, N=4, s=t=2 -> {1, 1, -1, -1}
    const SpectrumReport s6 = lift_spectrum({0.0, 1.0}, 4, 2, 2);
    CHECK(s6.plus_one_multiplicity == 0);
    CHECK(s6.minus_one_multiplicity == 0);
    CHECK(qwalk::testing::spectrum_is(s6.values, {1.0, 1.0, -1.0, -1.0}, 1e-12));

    // section 8: disc {1/4, 1/4, 1}, N=7, s=t=3
    const SpectrumReport s8 = lift_spectrum({0.25, 0.25, 1.0}, 7, 3, 3);
    CHECK(s8.plus_one_multiplicity == 1);
    const double r3 = std::sqrt(3.0) / 2.0;
    CHECK(qwalk::testing::spectrum_is(s8.values,
                                      {1.0, 1.0, 1.0, Complex{-0.5, r3}, Complex{-0.5, r3},
                                       Complex{-0.5, -r3}, Complex{-0.5, -r3}},
                                      1e-12));

    // N < s+t forces the top eigenvalue to be 1 and consumes it
    const SpectrumReport tiny = lift_spectrum({1.0}, 1, 1, 1);
    CHECK(qwalk::testing::spectrum_is(tiny.values, {1.0}, 1e-12));
}

TEST_CASE("lift_spectrum rejects missing forced eigenvalues") {
    CHECK_THROWS_AS(lift_spectrum({0.5, 0.9}, 4, 1, 2), ValidationError); // needs a 0
    CHECK_THROWS_AS(lift_spectrum({0.2, 0.5}, 3, 2, 2), ValidationError); // needs a 1
    CHECK_THROWS_AS(lift_spectrum({0.5}, 4, 2, 2), ValidationError);      // size mismatch
}

TEST_CASE("lift_spectrum count identity and unit-circle closure") {
    for (std::size_t n = 1; n <= 10; ++n) {
        for (std::size_t s = 1; s <= n; ++s) {
            for (std::size_t t = 1; t <= n; ++t) {
                const std::size_t zeros = t > s ? t - s : 0;
                const std::size_t ones = s + t > n ? s + t - n : 0;
                std::vector<double> disc(t, 0.5);
                for (std::size_t i = 0; i < zeros; ++i) disc[i] = 0.0;
                for (std::size_t i = 0; i < ones; ++i) disc[t - 1 - i] = 1.0;
                if (zeros + ones > t) continue; // no room: inconsistent shape
                std::sort(disc.begin(), disc.end());
                const SpectrumReport rep = lift_spectrum(disc, n, s, t);
                CHECK(rep.values.size() == n); // the Remark's count identity
                for (const Complex& z : rep.values)
                    CHECK(std::abs(std::abs(z) - 1.0) <= 1e-12);
                for (const LiftedPair& p : rep.lifted)
                    CHECK(std::abs(p.plus * p.minus - 1.0) <= 1e-12);
            }
        }
    }
}

TEST_CASE("grover charpoly identity") {
    CHECK(grover_charpoly_check(paper_k3(), 20, 5) <= 1e-9);
    CHECK(grover_charpoly_check(cycle_graph(4), 20, 6) <= 1e-9);
    CHECK(grover_charpoly_check(complete_graph(4), 20, 7) <= 1e-9); // (λ²−1)² prefactor
}

TEST_CASE("grover spectrum formula vs direct") {
    const SpectrumReport c4 = grover_spectrum(cycle_graph(4));
    CHECK(qwalk::testing::spectrum_is(c4.values,
                                      {1.0, 1.0, -1.0, -1.0, Complex{0, 1}, Complex{0, 1},
                                       Complex{0, -1}, Complex{0, -1}},
                                      1e-7));
    expect_match(c4, grover_matrix(cycle_graph(4)).matrix);

    const double r3 = std::sqrt(3.0) / 2.0;
    const SpectrumReport k3 = grover_spectrum(paper_k3());
    CHECK(qwalk::testing::spectrum_is(k3.values,
                                      {1.0, 1.0, Complex{-0.5, r3}, Complex{-0.5, r3},
                                       Complex{-0.5, -r3}, Complex{-0.5, -r3}},
                                      1e-7));
    expect_match(k3, grover_matrix(paper_k3()).matrix);

    // single edge: the tree consumption branch, authoritative answer {1, -1}
    const SpectrumReport p2 = grover_spectrum(path_graph(2));
    CHECK(p2.note == "tree branch");
    CHECK(qwalk::testing::spectrum_is(p2.values, {1.0, -1.0}, 1e-7));
    expect_match(p2, grover_matrix(path_graph(2)).matrix);
}

TEST_CASE("positive support spectrum on regular graphs") {
    const SpectrumReport k4 = positive_support_spectrum(complete_graph(4));
    const double s7 = std::sqrt(7.0) / 2.0;
    CHECK(qwalk::testing::spectrum_is(k4.values,
                                      {2.0, 1.0, 1.0, 1.0, -1.0, -1.0, Complex{-0.5, s7},
                                       Complex{-0.5, s7}, Complex{-0.5, s7}, Complex{-0.5, -s7},
                                       Complex{-0.5, -s7}, Complex{-0.5, -s7}},
                                      1e-7));
    expect_match(k4, positive_support(grover_matrix(complete_graph(4)).matrix));

    for (const NamedGraph& ng : regular_corpus()) {
        CAPTURE(ng.name);
        expect_match(positive_support_spectrum(ng.graph),
                     positive_support(grover_matrix(ng.graph).matrix));
    }
    CHECK_THROWS_AS(positive_support_spectrum(star_graph(3)), ValidationError);
}

TEST_CASE("szegedy spectrum") {
    const SpectrumReport s6 = szegedy_spectrum(paper_k22(), qwalk::testing::half_weighting());
    CHECK(qwalk::testing::spectrum_is(s6.values, {1.0, 1.0, -1.0, -1.0}, 1e-9));
    expect_match(s6, szegedy_walk(paper_k22(), qwalk::testing::half_weighting()).matrix);

    // both orientations of a star exercise the tree branch and side choice
    const BipartiteGraph star_center_x = *bipartite_view(star_graph(3)); // X = {center}
    const SpectrumReport st = szegedy_spectrum(star_center_x, uniform_weighting(star_center_x));
    CHECK(st.note == "tree branch");
    expect_match(st, szegedy_walk(star_center_x, uniform_weighting(star_center_x)).matrix);

    std::vector<Side> flipped(4, Side::X);
    flipped[0] = Side::Y; // X = leaves, m > n
    const BipartiteGraph star_leaves_x(star_graph(3), flipped);
    const SpectrumReport sl = szegedy_spectrum(star_leaves_x, uniform_weighting(star_leaves_x));
    expect_match(sl, szegedy_walk(star_leaves_x, uniform_weighting(star_leaves_x)).matrix);

    // C6: ε = ν, no prefactor ones
    const BipartiteGraph c6 = *bipartite_view(cycle_graph(6));
    const SpectrumReport sc = szegedy_spectrum(c6, uniform_weighting(c6));
    CHECK(sc.plus_one_multiplicity == 0);
    expect_match(sc, szegedy_walk(c6, uniform_weighting(c6)).matrix);
}

TEST_CASE("szegedy spectrum with random weightings") {
    Rng rng(42);
    for (const NamedGraph& ng : bundled_corpus()) {
        const auto bg = bipartite_view(ng.graph);
        if (!bg || !ng.graph.connected()) continue;
        CAPTURE(ng.name);
        for (int trial = 0; trial < 3; ++trial) {
            const EdgeWeighting w = random_weighting(*bg, rng);
            expect_match(szegedy_spectrum(*bg, w), szegedy_walk(*bg, w).matrix);
        }
    }
}

TEST_CASE("sqw spectrum") {
    // K22 with uniform real amplitudes reproduces the section-6 multiset
    const BipartiteGraph bg = paper_k22();
    const SpectrumReport rep = sqw_spectrum(bg, uniform_amplitudes(bg));
    CHECK(qwalk::testing::spectrum_is(rep.values, {1.0, 1.0, -1.0, -1.0}, 1e-9));

    // P3 root: small tree SQW
    const BipartiteGraph p3 = *bipartite_view(path_graph(3));
    expect_match(sqw_spectrum(p3, uniform_amplitudes(p3)),
                 sqw_operators(p3, uniform_amplitudes(p3)).walk.matrix);

    // random complex phases
    Rng rng(43);
    for (const NamedGraph& ng : bundled_corpus()) {
        const auto root = bipartite_view(ng.graph);
        if (!root || !ng.graph.connected()) continue;
        CAPTURE(ng.name);
        const AmplitudeAssignment amps = random_amplitudes(*root, rng);
        expect_match(sqw_spectrum(*root, amps), sqw_operators(*root, amps).walk.matrix, 1e-7);
    }
}

TEST_CASE("search spectrum") {
    const double r3 = std::sqrt(3.0) / 2.0;
    const SearchInstance s8 = build_search_instance_uniform(paper_k3(), {2});
    const SpectrumReport rep = search_spectrum(s8);
    CHECK(qwalk::testing::spectrum_is(rep.values,
                                      {1.0, 1.0, 1.0, Complex{-0.5, r3}, Complex{-0.5, r3},
                                       Complex{-0.5, -r3}, Complex{-0.5, -r3}},
                                      1e-9));
    expect_match(rep, search_operators(s8).walk.matrix);

    // single edge with one marked vertex: tree branch of the corollary
    const SearchInstance p2 = build_search_instance_uniform(path_graph(2), {1});
    const SpectrumReport trep = search_spectrum(p2);
    CHECK(trep.note == "tree branch");
    expect_match(trep, search_operators(p2).walk.matrix);

    // tree with two marked vertices: prefactor exponent back to zero
    const SearchInstance p3m2 = build_search_instance_uniform(path_graph(3), {0, 2});
    CHECK(search_spectrum(p3m2).note.empty());
    expect_match(search_spectrum(p3m2), search_operators(p3m2).walk.matrix);

    // marked pair adjacent in K3: F2 support contributes extra fixed points
    const SearchInstance f2 = build_search_instance_uniform(paper_k3(), {1, 2});
    expect_match(search_spectrum(f2), search_operators(f2).walk.matrix);
}

TEST_CASE("formula vs direct over the corpus with random search weightings") {
    Rng rng(44);
    for (const NamedGraph& ng : bundled_corpus()) {
        if (!ng.graph.connected() || ng.graph.vertex_count() < 2) continue;
        CAPTURE(ng.name);
        const std::size_t n = ng.graph.vertex_count();
        const BipartiteGraph dup = duplication(ng.graph);
        const SearchInstance si(ng.graph, random_weighting(dup, rng), {n - 1});
        expect_match(search_spectrum(si), search_operators(si).walk.matrix);
    }
}
