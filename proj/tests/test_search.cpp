#include <doctest.h>

#include <cmath>

#include <qwalk/corpus.hpp>
#include <qwalk/sampling.hpp>
#include <qwalk/search.hpp>

#include "helpers.hpp"

using namespace qwalk;
using qwalk::testing::paper_k3;

TEST_CASE("initial state") {
    const SearchInstance s8 = build_search_instance_uniform(paper_k3(), {2});
    const StateVector psi = initial_state(s8);
    const double amp = 1.0 / std::sqrt(6.0);
    for (std::size_t e = 0; e < 6; ++e)
        CHECK(std::abs(psi.amplitudes[e] - amp) <= 1e-15);
    CHECK(psi.amplitudes[6] == Complex{}); // nothing on the matching edge
    CHECK(std::abs(psi.norm() - 1.0) <= 1e-12);

    const SearchInstance p2 = build_search_instance_uniform(path_graph(2), {1});
    const StateVector phi = initial_state(p2);
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(phi.amplitudes[0] - h) <= 1e-15);
    CHECK(std::abs(phi.amplitudes[1] - h) <= 1e-15);
    CHECK(phi.amplitudes[2] == Complex{});

    Rng rng(51);
    for (int trial = 0; trial < 10; ++trial) {
        const Multigraph g = random_connected_multigraph(8, rng);
        const SearchInstance si(g, random_weighting(duplication(g), rng), {0});
        CHECK(std::abs(initial_state(si).norm() - 1.0) <= 1e-12);
    }
}

TEST_CASE("evolution") {
    const SearchInstance s8 = build_search_instance_uniform(paper_k3(), {2});
    const SearchOperators ops = search_operators(s8);
    const StateVector psi0 = initial_state(s8);

    const StateVector same = evolve(ops.walk, psi0, 0);
    for (std::size_t i = 0; i < same.amplitudes.size(); ++i)
        CHECK(same.amplitudes[i] == psi0.amplitudes[i]);

    // period-3 dynamics: W'^3 psi0 = psi0
    const StateVector cyc = evolve(ops.walk, psi0, 3);
    for (std::size_t i = 0; i < cyc.amplitudes.size(); ++i)
        CHECK(std::abs(cyc.amplitudes[i] - psi0.amplitudes[i]) <= 1e-12);

    const StateVector longrun = evolve(ops.walk, psi0, 1000);
    CHECK(std::abs(longrun.norm() - 1.0) <= 1e-9);

    CHECK_THROWS_AS(evolve(ops.walk, StateVector{{1.0, 0.0}}, 1), ValidationError);
}

TEST_CASE("unmodified walk leaves the initial state invariant") {
    // doubly stochastic weightings: q = p balanced on both sides
    Rng rng(52);
    for (const Multigraph& g : {paper_k3(), cycle_graph(4), complete_graph(4), cube_graph()}) {
        REQUIRE(g.connected());
        const BipartiteGraph dup = duplication(g);
        const auto w = doubly_stochastic_weighting(dup, rng);
        REQUIRE(w.has_value());
        const WalkOperator walk = szegedy_walk(dup, *w);

        // psi(0) over E(G_2), scaled by 1/sqrt(n)
        StateVector psi;
        psi.amplitudes.resize(dup.graph().edge_count());
        const double n = static_cast<double>(g.vertex_count());
        for (std::size_t e = 0; e < psi.amplitudes.size(); ++e)
            psi.amplitudes[e] = std::sqrt(w->p[e] / n);
        REQUIRE(std::abs(psi.norm() - 1.0) <= 1e-12);

        const StateVector out = evolve(walk, psi, 1);
        for (std::size_t i = 0; i < psi.amplitudes.size(); ++i)
            CHECK(std::abs(out.amplitudes[i] - psi.amplitudes[i]) <= 1e-9);
    }
}

TEST_CASE("f statistic") {
    const SearchInstance s8 = build_search_instance_uniform(paper_k3(), {2});
    const SearchOperators ops = search_operators(s8);
    const StateVector psi0 = initial_state(s8);

    CHECK(f_statistic(ops.walk, psi0, 0) == 0.0);
    CHECK(f_statistic(ops.walk, psi0, 1) == doctest::Approx(4.0 / 3.0));
    for (std::size_t t : {2u, 5u, 9u}) {
        const double f = f_statistic(ops.walk, psi0, t);
        CHECK(f >= 0.0);
        CHECK(f <= 4.0);
    }
}

TEST_CASE("quantum hitting time on the section-8 instance") {
    const SearchInstance s8 = build_search_instance_uniform(paper_k3(), {2});
    const HittingReport rep = quantum_hitting_time(s8, default_hitting_cap(s8));
    CHECK(rep.threshold == doctest::Approx(2.0 / 3.0));
    REQUIRE(rep.t_hit.has_value());
    CHECK(*rep.t_hit == 1); // frozen from the first oracle run: F(1) = 4/3
    CHECK(rep.f_values.back() == doctest::Approx(4.0 / 3.0));
    CHECK(rep.f_values.back() >= rep.threshold);
    CHECK(rep.doubly_stochastic);
    CHECK(rep.classical_gap == doctest::Approx(0.5)); // P_M = [[0,1/2],[1/2,0]]
}

TEST_CASE("all marked means hitting at time zero") {
    const SearchInstance si = build_search_instance_uniform(paper_k3(), {0, 1, 2});
    const HittingReport rep = quantum_hitting_time(si, 10);
    REQUIRE(rep.t_hit.has_value());
    CHECK(*rep.t_hit == 0);
    CHECK(rep.threshold == 0.0);
}

TEST_CASE("asymmetric weighting is flagged but still simulated") {
    // skew p on one star of K3's duplication; q stays uniform, so P is no
    // longer doubly stochastic
    const BipartiteGraph dup = duplication(paper_k3());
    EdgeWeighting w = uniform_weighting(dup);
    bool first = true;
    for (std::size_t e = 0; e < dup.graph().edge_count(); ++e) {
        if (dup.x_end(e) != 0) continue;
        w.p[e] = first ? 0.75 : 0.25;
        first = false;
    }
    const SearchInstance si(paper_k3(), w, {2});
    const HittingReport rep = quantum_hitting_time(si, 200);
    CHECK_FALSE(rep.doubly_stochastic);
    CHECK(rep.f_values.size() > 1); // computation proceeded
}

TEST_CASE("dirichlet matrix is strictly substochastic") {
    Rng rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        const Multigraph g = random_connected_multigraph(8, rng, /*allow_loops=*/false);
        const SearchInstance si = build_search_instance_uniform(g, {0});
        const Matrix pm = search_operators(si).p_dirichlet;
        double rho = 0.0;
        for (const Complex& z : eig_general(pm).values) rho = std::max(rho, std::abs(z));
        CHECK(rho < 1.0 - 1e-9);
    }
}

TEST_CASE("complete graph trend: quantum growth stays below the classical ratio") {
    auto t_hit_for = [](std::size_t n) {
        const SearchInstance si = build_search_instance_uniform(complete_graph(n), {n - 1});
        const HittingReport rep = quantum_hitting_time(si, default_hitting_cap(si));
        REQUIRE(rep.t_hit.has_value());
        return static_cast<double>(*rep.t_hit);
    };
    const double t4 = t_hit_for(4);
    const double t8 = t_hit_for(8);
    const double t16 = t_hit_for(16);
    // classical hitting grows ~n: ratios 2 and 4 over these sizes
    CHECK(t8 / t4 <= 2.0);
    CHECK(t16 / t4 < 4.0);
    CHECK(t16 >= t4); // it does grow
}
