#pragma once

#include <cstddef>
#include <vector>

#include "qwalk/bipartite.hpp"

namespace qwalk {

enum class EdgeClass {
    Ordinary,       // both endpoints unmarked: p' = p, q' = q
    MarkedOrigin,   // V(e) marked, V'(e) not: p' = 0, q' = q
    MarkedTerminus, // V'(e) marked, V(e) not: p' = p, q' = 0
    MarkedMarked,   // both endpoints marked (F2 support): p' = q' = 0
    Matching        // the added u-u' edge for marked u: p' = q' = 1
};

/// Edge space E_M = E(G_2) ∪ [N_2] for the quantum search walk: first the
/// duplication edges in duplication order, then one matching edge per marked
/// vertex in ascending order.
struct EmEdge {
    std::size_t v_end;      // endpoint in V (original vertex index)
    std::size_t vprime_end; // endpoint in V' (original vertex index of the copy)
    EdgeClass cls;
    double p_mod; // p' on this edge
    double q_mod; // q'
};

class SearchInstance {
public:
    SearchInstance(Multigraph base, EdgeWeighting weighting, std::vector<std::size_t> marked);

    const Multigraph& base() const { return base_; }
    const BipartiteGraph& dup() const { return dup_; }
    const EdgeWeighting& weighting() const { return weighting_; } // unmodified p, q on E(G_2)
    const std::vector<std::size_t>& marked() const { return marked_; }
    bool is_marked(std::size_t v) const { return marked_flags_[v]; }

    std::size_t n() const { return base_.vertex_count(); }
    std::size_t m() const { return marked_.size(); }
    std::size_t eps() const { return base_.edge_count(); }

    const std::vector<EmEdge>& edge_space() const { return edge_space_; }
    std::size_t edge_space_size() const { return edge_space_.size(); } // 2ε + m with loops folded

    std::size_t r() const { return r_; } // unmarked-unmarked edges
    std::size_t s() const { return s_; } // unmarked-to-marked-copy edges
    std::size_t eps_prime() const { return eps_prime_; }
    std::size_t f2_count() const { return f2_count_; }

private:
    Multigraph base_;
    BipartiteGraph dup_;
    EdgeWeighting weighting_;
    std::vector<std::size_t> marked_;
    std::vector<bool> marked_flags_;
    std::vector<EmEdge> edge_space_;
    std::size_t r_ = 0, s_ = 0, eps_prime_ = 0, f2_count_ = 0;
};

SearchInstance build_search_instance(const Multigraph& g, const EdgeWeighting& w,
                                     const std::vector<std::size_t>& marked);

/// Uniform weighting on the duplication of g: 1/deg within each star.
SearchInstance build_search_instance_uniform(const Multigraph& g,
                                             const std::vector<std::size_t>& marked);

} // namespace qwalk
