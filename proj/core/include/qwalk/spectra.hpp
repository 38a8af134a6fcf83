#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qwalk/eigen.hpp"
#include "qwalk/operators.hpp"

namespace qwalk {

enum class Provenance { Formula, Direct };

struct LiftedPair {
    double disc_value; // discriminant eigenvalue in [0,1] (T or A eigenvalue for coin walks)
    Complex plus;
    Complex minus;
};

/// An eigenvalue multiset with the bookkeeping that produced it: the
/// prefactor multiplicities of ±1 and the pairs lifted from a discriminant.
struct SpectrumReport {
    std::size_t dimension = 0; // N
    std::size_t s = 0, t = 0;
    std::size_t plus_one_multiplicity = 0;
    std::size_t minus_one_multiplicity = 0;
    std::vector<LiftedPair> lifted;
    std::vector<Complex> values; // full multiset, size == dimension
    Provenance provenance = Provenance::Formula;
    std::string note; // e.g. "tree branch"

    EigenMultiset multiset() const { return EigenMultiset{values, 1e-7}; }
};

/// The four-case lift: eigenvalue 1 with multiplicity |N-(s+t)|, eigenvalue
/// -1 with multiplicity |t-s|, pairs e^{±2i arccos sqrt(lambda)} for the
/// case-dependent index window. The disc values are read as the t x t side;
/// forced 0 entries (t > s) and forced 1 entries (N < s+t) are consumed and
/// must be present within 1e-7.
SpectrumReport lift_spectrum(std::vector<double> disc_eigs, std::size_t big_n, std::size_t s,
                             std::size_t t);

/// Max relative residual of the determinant identity
///   det(I - uU) = (1-u)^{N-s-t} (1+u)^{s-t} det((1+u)^2 I_t - 4u T_BA T_AB)
/// (and its s-side variant) at `samples` random points |u| <= 0.9 kept 0.05
/// away from ±1.
double key_identity_check(const Matrix& a, const Matrix& b, int samples, std::uint64_t seed);

/// Max relative residual of det(lambda I - U) = (lambda^2-1)^{m-n}
/// det((lambda^2+1) I - 2 lambda T) over random sample points.
double grover_charpoly_check(const Multigraph& g, int samples, std::uint64_t seed);

SpectrumReport grover_spectrum(const Multigraph& g);
SpectrumReport positive_support_spectrum(const Multigraph& g);
SpectrumReport szegedy_spectrum(const BipartiteGraph& bg, const EdgeWeighting& w);
SpectrumReport sqw_spectrum(const BipartiteGraph& h, const AmplitudeAssignment& amps);
SpectrumReport search_spectrum(const SearchInstance& si);

/// Direct eigendecomposition of an operator matrix, reported in the same shape.
SpectrumReport direct_spectrum(const Matrix& matrix);

} // namespace qwalk
