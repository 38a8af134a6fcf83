#pragma once

#include <cstdint>
#include <vector>

#include "qwalk/complex_matrix.hpp"

namespace qwalk {

struct HermitianEigen {
    std::vector<double> values; // ascending
    Matrix vectors;             // orthonormal columns, a = V diag(values) V*
};

/// Cyclic Jacobi for Hermitian matrices. The input is symmetrized as
/// (a + *a)/2 before iterating; deviations beyond `sym_tol` (relative to
/// max|a|) are rejected.
HermitianEigen eig_hermitian(const Matrix& a, double sym_tol = 1e-9);

/// Eigenvalue multiset of a square matrix. `cluster_tol` records the tolerance
/// used when multiplicities are counted downstream.
struct EigenMultiset {
    std::vector<Complex> values;
    double cluster_tol = 1e-7;
};

struct GeneralEigen {
    std::vector<Complex> values;
    Matrix vectors; // column j: unit eigenvector for values[j]
};

/// Schur-based dense eigensolver: Householder Hessenberg reduction followed
/// by shifted QR, eigenvectors by triangular back-substitution. Every computed
/// pair satisfies |a·v - lambda·v| <= 1e-7 |a|_F; a NumericalError is thrown
/// if the iteration stalls or that bound fails.
GeneralEigen eig_general_full(const Matrix& a);
EigenMultiset eig_general(const Matrix& a);

struct MatchReport {
    bool ok = false;
    double max_distance = 0.0;
    std::vector<std::size_t> matching; // matching[i] = index in b paired with sorted a[i]
};

/// Greedy nearest-neighbour multiset comparison after a lexicographic sort by
/// (re, im). Adequate here because walk spectra are either well separated or
/// exactly degenerate at the tested tolerances.
MatchReport multiset_match(const EigenMultiset& a, const EigenMultiset& b, double tol);
bool multiset_equal(const EigenMultiset& a, const EigenMultiset& b, double tol);

/// Cluster eigenvalues within `tol` (absolute) into (representative, count)
/// pairs; representatives are cluster means, ordered lexicographically.
std::vector<std::pair<Complex, std::size_t>> cluster_eigenvalues(std::vector<Complex> values,
                                                                 double tol);

} // namespace qwalk
