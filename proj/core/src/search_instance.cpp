#include "qwalk/search_instance.hpp"

#include <algorithm>

namespace qwalk {

SearchInstance::SearchInstance(Multigraph base, EdgeWeighting weighting,
                               std::vector<std::size_t> marked)
    : base_(std::move(base)), dup_(duplication(base_)), weighting_(std::move(weighting)),
      marked_(std::move(marked)) {
    if (marked_.empty()) throw ValidationError("marked vertex set is empty");
    std::sort(marked_.begin(), marked_.end());
    marked_.erase(std::unique(marked_.begin(), marked_.end()), marked_.end());
    if (marked_.back() >= base_.vertex_count())
        throw ValidationError("marked vertex " + std::to_string(marked_.back()) +
                              " out of range");
    validate_weighting(dup_, weighting_);
    marked_flags_.assign(base_.vertex_count(), false);
    for (std::size_t v : marked_) marked_flags_[v] = true;

    const std::size_t nv = base_.vertex_count();
    const auto& dup_edges = dup_.graph().edges();
    edge_space_.reserve(dup_edges.size() + marked_.size());
    for (std::size_t e = 0; e < dup_edges.size(); ++e) {
        const std::size_t v = dup_.x_end(e);
        const std::size_t vp = dup_.y_end(e) - nv;
        const bool mv = marked_flags_[v], mvp = marked_flags_[vp];
        EmEdge em{v, vp, EdgeClass::Ordinary, weighting_.p[e], weighting_.q[e]};
        if (mv && mvp) {
            em.cls = EdgeClass::MarkedMarked;
            em.p_mod = em.q_mod = 0.0;
            ++f2_count_;
        } else if (mv) {
            em.cls = EdgeClass::MarkedOrigin;
            em.p_mod = 0.0;
        } else if (mvp) {
            em.cls = EdgeClass::MarkedTerminus;
            em.q_mod = 0.0;
            ++s_;
        } else {
            ++r_;
        }
        edge_space_.push_back(em);
    }
    for (std::size_t u : marked_)
        edge_space_.push_back(EmEdge{u, u, EdgeClass::Matching, 1.0, 1.0});
    eps_prime_ = r_ + 2 * s_ + marked_.size();
}

SearchInstance build_search_instance(const Multigraph& g, const EdgeWeighting& w,
                                     const std::vector<std::size_t>& marked) {
    return SearchInstance(g, w, marked);
}

SearchInstance build_search_instance_uniform(const Multigraph& g,
                                             const std::vector<std::size_t>& marked) {
    return SearchInstance(g, uniform_weighting(duplication(g)), marked);
}

} // namespace qwalk
