#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qwalk/operators.hpp"

namespace qwalk {

/// Unit vector over the search edge space E_M.
struct StateVector {
    std::vector<Complex> amplitudes;
    double norm() const;
};

/// psi(0) = (1/sqrt(n)) sum over E(G_2) of sqrt(p(e)) |e>, zero on the
/// matching entries; built from the unmodified weighting.
StateVector initial_state(const SearchInstance& si);

/// (W')^steps applied by repeated matvec; the norm must stay within 1e-9 of 1
/// after every step.
StateVector evolve(const WalkOperator& walk, StateVector psi, std::size_t steps);

/// F(T) = (1/(T+1)) sum_{t=0..T} || psi(t) - psi(0) ||^2.
double f_statistic(const WalkOperator& walk, const StateVector& psi0, std::size_t big_t);

struct HittingReport {
    std::optional<std::size_t> t_hit; // smallest T with F(T) >= 1 - m/n, if found below cap
    std::vector<double> f_values;     // F(0..T_hit), or F(0..cap) when not found
    double threshold = 0.0;           // 1 - m/n
    double classical_gap = 0.0;       // 1 - spectral radius of P_M
    std::size_t cap = 0;
    bool doubly_stochastic = true;    // p_{uv'} = p_{v'u} held within 1e-9
};

/// Simulates until F crosses its threshold or `cap` steps elapse. A violated
/// doubly-stochastic assumption downgrades the result to diagnostic (flagged
/// in the report) but does not stop the run.
HittingReport quantum_hitting_time(const SearchInstance& si, std::size_t cap);

/// Default step cap, 10 n^2: generous against the classical O(n^2) bound.
std::size_t default_hitting_cap(const SearchInstance& si);

} // namespace qwalk
