#include <doctest.h>

#include <cmath>

#include <qwalk/corpus.hpp>
#include <qwalk/eigen.hpp>
#include <qwalk/operators.hpp>
#include <qwalk/sampling.hpp>

#include "helpers.hpp"

using namespace qwalk;
using qwalk::testing::paper_k22;
using qwalk::testing::paper_k3;

namespace {

void check_reflections(const WalkOperator& op, double tol = 1e-9) {
    REQUIRE(op.factors.has_value());
    for (const Matrix* r : {&op.factors->first, &op.factors->second}) {
        CHECK(r->is_hermitian(tol));
        CHECK(max_abs_diff(*r * *r, Matrix::identity(r->rows())) <= tol);
    }
    CHECK(op.matrix.is_unitary(tol));
}

} // namespace

TEST_CASE("grover matrix on a single edge bounces") {
    const WalkOperator op = grover_matrix(path_graph(2));
    CHECK(op.matrix.rows() == 2);
    CHECK(op.matrix(0, 0) == Complex{});
    CHECK(op.matrix(0, 1) == Complex{1.0});
    CHECK(op.matrix(1, 0) == Complex{1.0});
    CHECK(op.matrix(1, 1) == Complex{});
}

TEST_CASE("grover matrix of C4 has the known spectrum") {
    const WalkOperator op = grover_matrix(cycle_graph(4));
    CHECK(op.matrix.is_unitary(1e-12));
    const auto eigs = eig_general(op.matrix);
    CHECK(multiset_equal(eigs,
                         qwalk::testing::multiset({1.0, 1.0, -1.0, -1.0, Complex{0, 1},
                                                   Complex{0, 1}, Complex{0, -1}, Complex{0, -1}}),
                         1e-9));
}

TEST_CASE("grover matrix unitary across the corpus, loops included") {
    for (const NamedGraph& ng : bundled_corpus()) {
        CAPTURE(ng.name);
        CHECK(grover_matrix(ng.graph).matrix.is_unitary(1e-9));
    }
    CHECK_THROWS_AS(grover_matrix(Multigraph(2, {{0, 0}})), ValidationError);
}

TEST_CASE("positive_support") {
    const Matrix id = Matrix::identity(3);
    CHECK(max_abs_diff(positive_support(id), id) == 0.0);

    Matrix mixed(2, 2, {0.5, -0.25, 0.0, 1e-30});
    const Matrix sup = positive_support(mixed);
    CHECK(sup(0, 0) == Complex{1.0});
    CHECK(sup(0, 1) == Complex{});
    CHECK(sup(1, 0) == Complex{});
    CHECK(sup(1, 1) == Complex{1.0}); // strictly positive, however small

    // U+ of K4: eigenvalues 2, 1, (-1±i√7)/2 ×3, ±1 ×2 each
    const Matrix uplus = positive_support(grover_matrix(complete_graph(4)).matrix);
    const double s7 = std::sqrt(7.0) / 2.0;
    CHECK(multiset_equal(
        eig_general(uplus),
        qwalk::testing::multiset({2.0, 1.0, 1.0, 1.0, -1.0, -1.0, Complex{-0.5, s7},
                                  Complex{-0.5, s7}, Complex{-0.5, s7}, Complex{-0.5, -s7},
                                  Complex{-0.5, -s7}, Complex{-0.5, -s7}}),
        1e-7));
}

TEST_CASE("szegedy isometries reproduce the section-6 displays") {
    const BipartiteGraph bg = paper_k22();
    const auto iso = szegedy_isometries(bg, qwalk::testing::half_weighting());
    const double h = 1.0 / std::sqrt(2.0);
    const Matrix k_expected(4, 2, {h, 0.0, h, 0.0, 0.0, h, 0.0, h});
    const Matrix l_expected(4, 2, {h, 0.0, 0.0, h, h, 0.0, 0.0, h});
    CHECK(max_abs_diff(iso.k, k_expected) <= 1e-15);
    CHECK(max_abs_diff(iso.l, l_expected) <= 1e-15);
    CHECK(is_isometry(iso.k, 1e-12));
    CHECK(is_isometry(iso.l, 1e-12));
}

TEST_CASE("szegedy isometries on tiny graphs") {
    const BipartiteGraph single = *bipartite_view(path_graph(2));
    const auto iso = szegedy_isometries(single, EdgeWeighting{{1.0}, {1.0}});
    CHECK(iso.k(0, 0) == Complex{1.0});
    CHECK(iso.l(0, 0) == Complex{1.0});

    // star K_{1,2} rooted in X: p = (1/2, 1/2), q = 1
    const BipartiteGraph star = *bipartite_view(star_graph(2));
    const auto siso = szegedy_isometries(star, uniform_weighting(star));
    CHECK(siso.k.rows() == 2);
    CHECK(siso.k.cols() == 1);
    CHECK(siso.k(0, 0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(max_abs_diff(siso.l, Matrix::identity(2)) <= 1e-15);
    CHECK(is_isometry(siso.k, 1e-12));
}

TEST_CASE("szegedy walk matches the section-6 matrix") {
    const BipartiteGraph bg = paper_k22();
    const WalkOperator op = szegedy_walk(bg, qwalk::testing::half_weighting());
    Matrix expected(4, 4); // [[0, J0], [J0, 0]]
    expected(0, 3) = expected(1, 2) = expected(2, 1) = expected(3, 0) = 1.0;
    CHECK(max_abs_diff(op.matrix, expected) <= 1e-15);
    check_reflections(op);

    const WalkOperator trivial = szegedy_walk(*bipartite_view(path_graph(2)),
                                              EdgeWeighting{{1.0}, {1.0}});
    CHECK(trivial.matrix(0, 0) == Complex{1.0});
}

TEST_CASE("szegedy walk is unitary for random weightings") {
    Rng rng(31);
    for (int trial = 0; trial < 15; ++trial) {
        const Multigraph g = random_connected_multigraph(8, rng, /*allow_loops=*/false);
        const auto bg = bipartite_view(g);
        if (!bg) continue;
        const WalkOperator op = szegedy_walk(*bg, random_weighting(*bg, rng));
        check_reflections(op);
    }
}

TEST_CASE("discriminant A_p and its combinatorial oracle") {
    const BipartiteGraph bg = paper_k22();
    const auto iso = szegedy_isometries(bg, qwalk::testing::half_weighting());
    const Discriminant ap = discriminant_ap(iso.k, iso.l);
    const Matrix expected(2, 2, {0.5, 0.5, 0.5, 0.5});
    CHECK(max_abs_diff(ap.matrix, expected) <= 1e-15);
    CHECK(max_abs_diff(ap.matrix, ap_combinatorial(bg, qwalk::testing::half_weighting())) <= 1e-12);

    const BipartiteGraph single = *bipartite_view(path_graph(2));
    const EdgeWeighting w1{{1.0}, {1.0}};
    const auto iso1 = szegedy_isometries(single, w1);
    CHECK(discriminant_ap(iso1.k, iso1.l).matrix(0, 0) == Complex{1.0});

    // P3 with X = outer vertices, Y = center
    const BipartiteGraph p3 = *bipartite_view(Multigraph(3, {{1, 0}, {1, 2}}));
    const EdgeWeighting wp = uniform_weighting(p3);
    const auto isop = szegedy_isometries(p3, wp);
    CHECK(max_abs_diff(discriminant_ap(isop.k, isop.l).matrix, ap_combinatorial(p3, wp)) <= 1e-12);
    CHECK(max_abs_diff(discriminant_aq(isop.k, isop.l).matrix, aq_combinatorial(p3, wp)) <= 1e-12);
}

TEST_CASE("matrix and combinatorial discriminants agree on random instances") {
    Rng rng(32);
    int done = 0;
    for (int trial = 0; trial < 40 && done < 12; ++trial) {
        const Multigraph g = random_connected_multigraph(12, rng, /*allow_loops=*/false);
        const auto bg = bipartite_view(g);
        if (!bg) continue;
        ++done;
        const EdgeWeighting w = random_weighting(*bg, rng);
        const auto iso = szegedy_isometries(*bg, w);
        CHECK(max_abs_diff(discriminant_ap(iso.k, iso.l).matrix, ap_combinatorial(*bg, w)) <= 1e-12);
        CHECK(max_abs_diff(discriminant_aq(iso.k, iso.l).matrix, aq_combinatorial(*bg, w)) <= 1e-12);

        const AmplitudeAssignment amps = random_amplitudes(*bg, rng);
        const SqwOperators sqw = sqw_operators(*bg, amps);
        CHECK(max_abs_diff(sqw.ahat.matrix, ahat_combinatorial(*bg, amps)) <= 1e-12);
    }
    CHECK(done >= 5);
}

TEST_CASE("sqw operators") {
    // single edge: U = [1], Ahat = [1]
    const BipartiteGraph single = *bipartite_view(path_graph(2));
    const AmplitudeAssignment unit{{Complex{1.0}}, {Complex{1.0}}};
    const SqwOperators triv = sqw_operators(single, unit);
    CHECK(triv.walk.matrix(0, 0) == Complex{1.0});
    CHECK(triv.ahat.matrix(0, 0) == Complex{1.0});

    // real sqrt(1/2) amplitudes on K22 reproduce the Szegedy walk of section 6
    const BipartiteGraph bg = paper_k22();
    const SqwOperators sqw = sqw_operators(bg, uniform_amplitudes(bg));
    const WalkOperator sz = szegedy_walk(bg, qwalk::testing::half_weighting());
    CHECK(max_abs_diff(sqw.walk.matrix, sz.matrix) <= 1e-12);

    // complex phases on a star: unitary walk, Hermitian discriminant in [0,1]
    const BipartiteGraph star = *bipartite_view(star_graph(3));
    Rng rng(33);
    const AmplitudeAssignment amps = random_amplitudes(star, rng);
    const SqwOperators sop = sqw_operators(star, amps);
    check_reflections(sop.walk);
    CHECK(sop.ahat.matrix.is_hermitian(1e-12));
    for (double lam : eig_hermitian(sop.ahat.matrix).values) {
        CHECK(lam >= -1e-9);
        CHECK(lam <= 1.0 + 1e-9);
    }

    AmplitudeAssignment bad = uniform_amplitudes(bg);
    bad.a[0] *= 2.0;
    CHECK_THROWS_AS(sqw_operators(bg, bad), ValidationError);
}

TEST_CASE("search operators reproduce section 8") {
    const SearchInstance si = build_search_instance_uniform(paper_k3(), {2});
    const SearchOperators ops = search_operators(si);
    check_reflections(ops.walk);

    // E_M order: 0-1', 1-0', 1-2', 2-1', 2-0', 0-2', 2-2'. The walk is a pair
    // of signed 3-cycles plus the fixed matching edge.
    Matrix expected(7, 7);
    expected(0, 3) = -1.0;
    expected(1, 4) = -1.0;
    expected(2, 1) = -1.0;
    expected(3, 5) = 1.0;
    expected(4, 2) = 1.0;
    expected(5, 0) = -1.0;
    expected(6, 6) = 1.0;
    CHECK(max_abs_diff(ops.walk.matrix, expected) <= 1e-14);

    Matrix ahat_expected(3, 3);
    ahat_expected(0, 0) = ahat_expected(1, 1) = 0.25;
    ahat_expected(2, 2) = 1.0;
    CHECK(max_abs_diff(ops.ahat_p.matrix, ahat_expected) <= 1e-14);
    CHECK(max_abs_diff(ops.ahat_p.matrix, search_ap_combinatorial(si)) <= 1e-12);

    // P' as displayed in the paper (rows v1 v2 v3 v1' v2' v3')
    Matrix p_expected(6, 6);
    p_expected(0, 4) = p_expected(0, 5) = 0.5;
    p_expected(1, 3) = p_expected(1, 5) = 0.5;
    p_expected(2, 5) = 1.0;
    p_expected(3, 1) = p_expected(3, 2) = 0.5;
    p_expected(4, 0) = p_expected(4, 2) = 0.5;
    p_expected(5, 2) = 1.0;
    CHECK(max_abs_diff(ops.p_modified, p_expected) <= 1e-14);

    Matrix pm_expected(2, 2);
    pm_expected(0, 1) = pm_expected(1, 0) = 0.5;
    CHECK(max_abs_diff(ops.p_dirichlet, pm_expected) <= 1e-14);
}

TEST_CASE("search operators with everything marked") {
    const SearchInstance si = build_search_instance_uniform(paper_k3(), {0, 1, 2});
    const SearchOperators ops = search_operators(si);
    CHECK(max_abs_diff(ops.walk.matrix, Matrix::identity(si.edge_space_size())) <= 1e-12);
    CHECK(max_abs_diff(ops.ahat_p.matrix, Matrix::identity(3)) <= 1e-12);
    CHECK(ops.p_dirichlet.rows() == 0);
}

TEST_CASE("search discriminant matches its oracle on a single edge") {
    const SearchInstance si = build_search_instance_uniform(path_graph(2), {1});
    const SearchOperators ops = search_operators(si);
    CHECK(max_abs_diff(ops.ahat_p.matrix, search_ap_combinatorial(si)) <= 1e-12);

    Rng rng(34);
    for (int trial = 0; trial < 10; ++trial) {
        const Multigraph g = random_connected_multigraph(7, rng);
        const SearchInstance ri(g, random_weighting(duplication(g), rng),
                                {g.vertex_count() - 1});
        CHECK(max_abs_diff(search_operators(ri).ahat_p.matrix, search_ap_combinatorial(ri)) <=
              1e-12);
    }
}

TEST_CASE("F2 support coordinates are fixed by the walk") {
    const SearchInstance si = build_search_instance_uniform(paper_k3(), {1, 2});
    REQUIRE(si.f2_count() > 0);
    const SearchOperators ops = search_operators(si);
    for (std::size_t e = 0; e < si.edge_space_size(); ++e) {
        if (si.edge_space()[e].cls != EdgeClass::MarkedMarked) continue;
        for (std::size_t i = 0; i < si.edge_space_size(); ++i) {
            CHECK(std::abs(ops.walk.matrix(i, e) - (i == e ? 1.0 : 0.0)) <= 1e-12);
            CHECK(std::abs(ops.walk.matrix(e, i) - (i == e ? 1.0 : 0.0)) <= 1e-12);
        }
    }
}

TEST_CASE("detailed balance") {
    // p = 1/deg: balanced with pi = deg on unmarked vertices (up to the
    // per-component scale fixed at the BFS root)
    const Multigraph g(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    const SearchInstance si = build_search_instance_uniform(g, {3});
    const auto pi = detailed_balance(si);
    REQUIRE(pi.has_value());
    const double scale = (*pi)[0] / static_cast<double>(g.degree(0));
    for (std::size_t v = 0; v < 3; ++v) {
        CHECK((*pi)[v] == doctest::Approx(scale * g.degree(v)));
        CHECK((*pi)[4 + v] == doctest::Approx(scale * g.degree(v)));
    }
    CHECK((*pi)[3] == 1.0);

    // section 8: Spec(A'_p) = Spec((P_M ⊕ I)^2) = {1/4, 1/4, 1}
    const SearchInstance s8 = build_search_instance_uniform(paper_k3(), {2});
    CHECK(detailed_balance(s8).has_value());
    const auto eig = eig_hermitian(search_operators(s8).ahat_p.matrix);
    CHECK(eig.values[0] == doctest::Approx(0.25));
    CHECK(eig.values[1] == doctest::Approx(0.25));
    CHECK(eig.values[2] == doctest::Approx(1.0));

    // a deliberately skewed p on C4's duplication with q left uniform: the
    // per-star ratios stay propagatable (the unmarked support is a forest)
    // but q no longer mirrors p, so the condition fails
    const BipartiteGraph dc4 = duplication(cycle_graph(4));
    EdgeWeighting cskew = uniform_weighting(dc4);
    bool cfirst = true;
    for (std::size_t e = 0; e < dc4.graph().edge_count(); ++e) {
        if (dc4.x_end(e) != 0) continue;
        cskew.p[e] = cfirst ? 0.75 : 0.25;
        cfirst = false;
    }
    CHECK_FALSE(detailed_balance(SearchInstance(cycle_graph(4), cskew, {3})).has_value());

    // a mirror-symmetric skew on K4 passes the mirror check but breaks the
    // ratio product around the 6-cycle of the unmarked support
    const BipartiteGraph dk4 = duplication(complete_graph(4));
    EdgeWeighting skew = uniform_weighting(dk4);
    for (std::size_t e = 0; e < dk4.graph().edge_count(); ++e)
        if (dk4.x_end(e) == 0) skew.p[e] = dk4.y_end(e) - 4 == 1 ? 0.5 : 0.25;
    for (std::size_t e = 0; e < dk4.graph().edge_count(); e += 2) {
        skew.q[e] = skew.p[e + 1]; // q mirrors p across each duplication pair
        skew.q[e + 1] = skew.p[e];
    }
    const SearchInstance sskew(complete_graph(4), skew, {3});
    CHECK_FALSE(detailed_balance(sskew).has_value());
}
