#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/complex_matrix.hpp"
#include "qwalk/search_instance.hpp"

namespace qwalk {

enum class WalkKind { Grover, Szegedy, Sqw, Search };
enum class BasisKind { Arcs, Edges, EdgeSpace };

/// A walk's unitary together with the index space it acts on and, for the
/// two-reflection walks, the reflection factors it was built from.
struct WalkOperator {
    Matrix matrix;
    WalkKind kind;
    BasisKind basis;
    std::vector<std::string> labels;
    std::optional<std::pair<Matrix, Matrix>> factors; // (R0, R1); W = R1 R0
};

enum class DiscriminantKind { Generic, Ap, Aq, Ahat, SearchAp };

/// The small Hermitian PSD matrix whose [0,1] eigenvalues lift to the walk
/// spectrum. `big_n`, `s`, `t` are the isometry shape parameters feeding the
/// determinant identity: the matrix itself is t x t.
struct Discriminant {
    Matrix matrix;
    std::size_t big_n, s, t;
    DiscriminantKind kind;
};

/// Grover coin walk on the arc space, U_{ef} = 2/deg(t(f)) [t(f)=o(e)] - [f=e^-1].
WalkOperator grover_matrix(const Multigraph& g);

/// 0/1 matrix marking the strictly positive entries of a real matrix.
Matrix positive_support(const Matrix& f);

struct Isometries {
    Matrix k; // ε x m, sqrt(p) incidence
    Matrix l; // ε x n, sqrt(q) incidence
};

Isometries szegedy_isometries(const BipartiteGraph& bg, const EdgeWeighting& w);

WalkOperator szegedy_walk(const Matrix& k, const Matrix& l,
                          std::vector<std::string> labels = {});
WalkOperator szegedy_walk(const BipartiteGraph& bg, const EdgeWeighting& w);

/// A_p = tK L tL K, with entries the sqrt(pqpq) sums over 2-paths.
Discriminant discriminant_ap(const Matrix& k, const Matrix& l);
Discriminant discriminant_aq(const Matrix& k, const Matrix& l);

/// Complex amplitudes on the edges of the bipartite root graph H: a drives
/// the tessellation over X-stars, b the one over Y-stars. Each star carries
/// unit 2-norm.
struct AmplitudeAssignment {
    std::vector<Complex> a;
    std::vector<Complex> b;
};

void validate_amplitudes(const BipartiteGraph& h, const AmplitudeAssignment& amps,
                         double tol = 1e-12);

/// Amplitudes sqrt(1/deg) reproducing the uniform Szegedy walk.
AmplitudeAssignment uniform_amplitudes(const BipartiteGraph& h);

struct SqwOperators {
    WalkOperator walk;  // U = U1 U0 on the vertices of L(H) = edges of H
    Discriminant ahat;  // m x m
};

/// Two-tessellation staggered walk from its bipartite root graph H; the
/// walked graph is the line graph of H and never has to be recognized.
SqwOperators sqw_operators(const BipartiteGraph& h, const AmplitudeAssignment& amps);

struct SearchOperators {
    WalkOperator walk;      // W' on E_M
    Discriminant ahat_p;    // n x n
    Matrix p_full;          // 2n x 2n stochastic P from the unmodified weighting
    Matrix p_modified;      // 2n x 2n stochastic P' from p', q'
    Matrix p_dirichlet;     // (n-m) x (n-m) substochastic P_M on unmarked vertices
};

SearchOperators search_operators(const SearchInstance& si);

/// Stationary weights pi on V ⊔ V' with p'(e) pi(V(e)) = q'(e) pi(V'(e)) on the
/// unmarked support and pi = 1 on M ⊔ M', when they exist. Presence also
/// certifies the similarity of the search discriminant to (P_M ⊕ I_m)^2.
std::optional<std::vector<double>> detailed_balance(const SearchInstance& si, double tol = 1e-9);

// Combinatorial 2-path evaluations of the discriminants. These are the
// independent oracles the matrix products are cross-checked against.
Matrix ap_combinatorial(const BipartiteGraph& bg, const EdgeWeighting& w);
Matrix aq_combinatorial(const BipartiteGraph& bg, const EdgeWeighting& w);
Matrix ahat_combinatorial(const BipartiteGraph& h, const AmplitudeAssignment& amps);
Matrix search_ap_combinatorial(const SearchInstance& si);

} // namespace qwalk
