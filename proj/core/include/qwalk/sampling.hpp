#pragma once

#include <optional>
#include <random>

#include "qwalk/bipartite.hpp"
#include "qwalk/complex_matrix.hpp"
#include "qwalk/operators.hpp"

namespace qwalk {

using Rng = std::mt19937_64;

Matrix random_complex_matrix(std::size_t rows, std::size_t cols, Rng& rng);

/// Random N x s isometry: complex Gaussian columns, modified Gram-Schmidt
/// with one re-orthogonalization pass. Requires s <= N.
Matrix random_isometry(std::size_t big_n, std::size_t s, Rng& rng);

/// Independent positive weights per star, normalized to the simplex.
EdgeWeighting random_weighting(const BipartiteGraph& bg, Rng& rng);

/// Random complex amplitudes, unit 2-norm per star.
AmplitudeAssignment random_amplitudes(const BipartiteGraph& h, Rng& rng);

/// Sinkhorn-balanced weighting with q = p, so that the associated stochastic
/// matrix is doubly stochastic and the paper's initial-state invariance holds.
/// Fails (nullopt) when the support admits no such weighting.
std::optional<EdgeWeighting> doubly_stochastic_weighting(const BipartiteGraph& bg, Rng& rng,
                                                         int max_iters = 500);

/// Connected multigraph on up to `max_vertices` vertices: a random spanning
/// tree plus extra edges, parallels and loops allowed.
Multigraph random_connected_multigraph(std::size_t max_vertices, Rng& rng, bool allow_loops = true);

} // namespace qwalk
