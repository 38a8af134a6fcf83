#pragma once

#include <cstdint>
#include <string>

namespace qwalk {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::size_t cases = 0;
    double worst = 0.0; // max residual / distance observed
    std::string detail;
};

/// Determinant identity on random isometry pairs (N <= 20), all four sign
/// regimes of N-(s+t) and s-t; passes at max relative residual 1e-8.
SuiteResult run_key_identity_suite(std::size_t trials, std::uint64_t seed);

/// Discriminant eigenvalues stay in [-1e-9, 1+1e-9] on the same ensemble.
SuiteResult run_lemma32_suite(std::size_t trials, std::uint64_t seed);

/// Spec(T_AB T_BA) = {0}^{s-t} ∪ Spec(T_BA T_AB) within 1e-7.
SuiteResult run_remark33_suite(std::size_t trials, std::uint64_t seed);

/// Coin-walk characteristic polynomial identity over the bundled corpus.
SuiteResult run_grover_charpoly_suite(std::size_t samples, std::uint64_t seed);

/// Formula spectra match direct eigendecompositions for all four walks over
/// the bundled corpus, with `trials` random weightings/amplitudes per graph.
SuiteResult run_formula_vs_direct_suite(std::size_t trials, std::uint64_t seed, double tol);

} // namespace qwalk
