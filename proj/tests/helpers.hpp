#pragma once

#include <initializer_list>
#include <vector>

#include <qwalk/corpus.hpp>
#include <qwalk/eigen.hpp>
#include <qwalk/operators.hpp>

namespace qwalk::testing {

inline EigenMultiset multiset(std::initializer_list<Complex> values) {
    return EigenMultiset{std::vector<Complex>(values), 1e-7};
}

inline bool spectrum_is(const std::vector<Complex>& got, std::initializer_list<Complex> want,
                        double tol = 1e-9) {
    if (got.size() != want.size()) return false;
    return multiset_equal(EigenMultiset{got, tol}, multiset(want), tol);
}

/// K_{2,2} with the §6 labeling: X = {0,1}, Y = {2,3}, edges ac, ad, bc, bd.
inline BipartiteGraph paper_k22() {
    return *bipartite_view(Multigraph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
}

inline EdgeWeighting half_weighting() {
    return EdgeWeighting{{0.5, 0.5, 0.5, 0.5}, {0.5, 0.5, 0.5, 0.5}};
}

/// K_3 in the edge order of the parse example; the §8 instance is this graph
/// with marked vertex 2 and the uniform weighting.
inline Multigraph paper_k3() {
    return Multigraph(3, {{0, 1}, {1, 2}, {2, 0}});
}

} // namespace qwalk::testing
