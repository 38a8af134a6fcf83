#include "qwalk/search.hpp"

#include <cmath>

#include "qwalk/eigen.hpp"

namespace qwalk {

double StateVector::norm() const {
    double s = 0.0;
    for (const Complex& z : amplitudes) s += std::norm(z);
    return std::sqrt(s);
}

StateVector initial_state(const SearchInstance& si) {
    const double n = static_cast<double>(si.n());
    StateVector psi;
    psi.amplitudes.assign(si.edge_space_size(), Complex{});
    const std::size_t dup_edges = si.dup().graph().edge_count();
    for (std::size_t e = 0; e < dup_edges; ++e)
        psi.amplitudes[e] = std::sqrt(si.weighting().p[e] / n);
    const double nrm = psi.norm();
    if (std::abs(nrm - 1.0) > 1e-12)
        throw NumericalError("initial_state: norm " + std::to_string(nrm) +
                             " departs from 1; p does not sum to n over E(G_2)");
    return psi;
}

StateVector evolve(const WalkOperator& walk, StateVector psi, std::size_t steps) {
    if (walk.matrix.cols() != psi.amplitudes.size())
        throw ValidationError("evolve: state dimension does not match the walk");
    for (std::size_t t = 0; t < steps; ++t) {
        psi.amplitudes = walk.matrix.apply(psi.amplitudes);
        if (std::abs(psi.norm() - 1.0) > 1e-9)
            throw NumericalError("evolve: norm drifted beyond 1e-9 at step " + std::to_string(t + 1));
    }
    return psi;
}

namespace {

double step_distance2(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return s;
}

} // namespace

double f_statistic(const WalkOperator& walk, const StateVector& psi0, std::size_t big_t) {
    StateVector psi = psi0;
    double acc = 0.0; // t = 0 contributes nothing
    for (std::size_t t = 1; t <= big_t; ++t) {
        psi = evolve(walk, std::move(psi), 1);
        acc += step_distance2(psi.amplitudes, psi0.amplitudes);
    }
    return acc / static_cast<double>(big_t + 1);
}

std::size_t default_hitting_cap(const SearchInstance& si) {
    return 10 * si.n() * si.n();
}

HittingReport quantum_hitting_time(const SearchInstance& si, std::size_t cap) {
    if (cap < 1) throw ValidationError("quantum_hitting_time: cap must be at least 1");
    const SearchOperators ops = search_operators(si);
    HittingReport rep;
    rep.cap = cap;
    rep.threshold = 1.0 - static_cast<double>(si.m()) / static_cast<double>(si.n());

    const std::size_t n = si.n();
    rep.doubly_stochastic = true;
    for (std::size_t u = 0; u < n && rep.doubly_stochastic; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (std::abs(ops.p_full(u, n + v) - ops.p_full(n + v, u)) > 1e-9) {
                rep.doubly_stochastic = false;
                break;
            }

    if (ops.p_dirichlet.rows() > 0) {
        double rho = 0.0;
        for (const Complex& z : eig_general(ops.p_dirichlet).values)
            rho = std::max(rho, std::abs(z));
        rep.classical_gap = 1.0 - rho;
    } else {
        rep.classical_gap = 1.0; // everything marked
    }

    const StateVector psi0 = initial_state(si);
    StateVector psi = psi0;
    double acc = 0.0;
    rep.f_values.push_back(0.0); // F(0)
    if (rep.f_values.back() >= rep.threshold) {
        rep.t_hit = 0;
        return rep;
    }
    for (std::size_t t = 1; t <= cap; ++t) {
        psi = evolve(ops.walk, std::move(psi), 1);
        acc += step_distance2(psi.amplitudes, psi0.amplitudes);
        const double f = acc / static_cast<double>(t + 1);
        rep.f_values.push_back(f);
        if (f >= rep.threshold) {
            rep.t_hit = t;
            return rep;
        }
    }
    return rep;
}

} // namespace qwalk
