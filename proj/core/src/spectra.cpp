#include "qwalk/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace qwalk {

namespace {

constexpr double kForcedTol = 1e-7;

bool lex_less(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

void finalize(SpectrumReport& rep) {
    std::sort(rep.values.begin(), rep.values.end(), lex_less);
    if (rep.values.size() != rep.dimension)
        throw NumericalError("spectrum report size " + std::to_string(rep.values.size()) +
                             " does not match dimension " + std::to_string(rep.dimension));
}

// Random sample point with |u| <= 0.9 and |u ∓ 1| >= 0.05, away from the unit
// circle where the characteristic polynomials vanish.
Complex sample_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> radius(0.1, 0.9);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (;;) {
        const Complex u = std::polar(radius(rng), angle(rng));
        if (std::abs(u - 1.0) >= 0.05 && std::abs(u + 1.0) >= 0.05) return u;
    }
}

double rel_residual(Complex lhs, Complex rhs) {
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-100});
    return std::abs(lhs - rhs) / scale;
}

} // namespace

SpectrumReport lift_spectrum(std::vector<double> disc_eigs, std::size_t big_n, std::size_t s,
                             std::size_t t) {
    if (s > big_n || t > big_n)
        throw ValidationError("lift_spectrum: isometry widths exceed the ambient dimension");
    if (disc_eigs.size() != t)
        throw ValidationError("lift_spectrum: expected " + std::to_string(t) +
                              " discriminant eigenvalues, got " + std::to_string(disc_eigs.size()));
    std::sort(disc_eigs.begin(), disc_eigs.end());

    const std::size_t zeros = t > s ? t - s : 0;
    const std::size_t ones = s + t > big_n ? s + t - big_n : 0;
    for (std::size_t i = 0; i < zeros; ++i)
        if (disc_eigs[i] > kForcedTol)
            throw ValidationError("lift_spectrum: missing forced 0 eigenvalue (got " +
                                  std::to_string(disc_eigs[i]) + ")");
    for (std::size_t i = t - ones; i < t; ++i)
        if (disc_eigs[i] < 1.0 - kForcedTol)
            throw ValidationError("lift_spectrum: missing forced 1 eigenvalue (got " +
                                  std::to_string(disc_eigs[i]) + ")");

    SpectrumReport rep;
    rep.dimension = big_n;
    rep.s = s;
    rep.t = t;
    rep.plus_one_multiplicity = big_n > s + t ? big_n - s - t : s + t - big_n;
    rep.minus_one_multiplicity = t > s ? t - s : s - t;

    rep.values.assign(rep.plus_one_multiplicity, Complex{1.0, 0.0});
    rep.values.insert(rep.values.end(), rep.minus_one_multiplicity, Complex{-1.0, 0.0});

    const std::size_t window_end = std::min(t, big_n - s);
    for (std::size_t j = zeros; j < window_end; ++j) {
        double lam = std::clamp(disc_eigs[j], 0.0, 1.0);
        if (lam < kForcedTol) lam = 0.0;
        if (lam > 1.0 - kForcedTol) lam = 1.0;
        Complex plus;
        if (lam == 0.0) {
            plus = Complex{-1.0, 0.0}; // snapped endpoints lift to exact ±1
        } else if (lam == 1.0) {
            plus = Complex{1.0, 0.0};
        } else {
            plus = std::polar(1.0, 2.0 * std::acos(std::sqrt(lam)));
        }
        rep.lifted.push_back(LiftedPair{lam, plus, std::conj(plus)});
        rep.values.push_back(plus);
        rep.values.push_back(std::conj(plus));
    }
    finalize(rep);
    return rep;
}

double key_identity_check(const Matrix& a, const Matrix& b, int samples, std::uint64_t seed) {
    if (a.rows() != b.rows())
        throw ValidationError("key_identity_check: isometries act on different spaces");
    if (!is_isometry(a, 1e-9) || !is_isometry(b, 1e-9))
        throw ValidationError("key_identity_check: inputs are not isometries");
    const std::size_t big_n = a.rows();
    const long s = static_cast<long>(a.cols());
    const long t = static_cast<long>(b.cols());

    Matrix ub = b * b.conj_transpose() * Complex{2.0};
    Matrix ua = a * a.conj_transpose() * Complex{2.0};
    for (std::size_t i = 0; i < big_n; ++i) {
        ub(i, i) -= 1.0;
        ua(i, i) -= 1.0;
    }
    const Matrix u = ub * ua;
    const Matrix t_ba = b.conj_transpose() * a;
    const Matrix t_ab = a.conj_transpose() * b;
    const Matrix disc_t = t_ba * t_ab; // t x t
    const Matrix disc_s = t_ab * t_ba; // s x s

    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const Complex uu = sample_point(rng);
        Matrix lhs_m = u * (-uu);
        for (std::size_t i = 0; i < big_n; ++i) lhs_m(i, i) += 1.0;
        const Complex lhs = determinant(lhs_m);

        const Complex pre = ipow(1.0 - uu, static_cast<long>(big_n) - s - t);
        Matrix mt = disc_t * (-4.0 * uu);
        const Complex shift = (1.0 + uu) * (1.0 + uu);
        for (std::size_t i = 0; i < disc_t.rows(); ++i) mt(i, i) += shift;
        const Complex rhs_t = pre * ipow(1.0 + uu, s - t) * determinant(mt);

        Matrix ms = disc_s * (-4.0 * uu);
        for (std::size_t i = 0; i < disc_s.rows(); ++i) ms(i, i) += shift;
        const Complex rhs_s = pre * ipow(1.0 + uu, t - s) * determinant(ms);

        worst = std::max({worst, rel_residual(lhs, rhs_t), rel_residual(lhs, rhs_s)});
    }
    return worst;
}

double grover_charpoly_check(const Multigraph& g, int samples, std::uint64_t seed) {
    const WalkOperator op = grover_matrix(g);
    const Matrix t = random_walk_matrix(g);
    const long m = static_cast<long>(g.edge_count());
    const long n = static_cast<long>(g.vertex_count());

    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const Complex lambda = sample_point(rng);
        Matrix lhs_m = op.matrix * Complex{-1.0};
        for (std::size_t i = 0; i < lhs_m.rows(); ++i) lhs_m(i, i) += lambda;
        const Complex lhs = determinant(lhs_m);

        Matrix rhs_m = t * (-2.0 * lambda);
        const Complex shift = lambda * lambda + 1.0;
        for (std::size_t i = 0; i < rhs_m.rows(); ++i) rhs_m(i, i) += shift;
        const Complex rhs = ipow(lambda * lambda - 1.0, m - n) * determinant(rhs_m);
        worst = std::max(worst, rel_residual(lhs, rhs));
    }
    return worst;
}

namespace {

// Shared coin-walk lift: pairs f(x) ± i sqrt(g(x)) over a real base spectrum,
// plus prefactor ±1 copies; negative prefactor exponents consume base values
// pinned at `hi` (for +1) and `lo` (for -1).
SpectrumReport coin_lift(const std::vector<double>& base, long excess, double lo, double hi,
                         const std::function<std::pair<Complex, Complex>(double)>& pair_of,
                         std::size_t dimension, std::size_t side) {
    SpectrumReport rep;
    rep.dimension = dimension;
    rep.s = rep.t = side;
    std::vector<double> usable = base;
    if (excess >= 0) {
        rep.plus_one_multiplicity = static_cast<std::size_t>(excess);
        rep.minus_one_multiplicity = static_cast<std::size_t>(excess);
    } else {
        // Tree-style cancellation: each missing prefactor power eats one base
        // eigenvalue at +1 and one at -1, leaving single ±1 eigenvalues.
        const std::size_t k = static_cast<std::size_t>(-excess);
        rep.plus_one_multiplicity = k;
        rep.minus_one_multiplicity = k;
        for (std::size_t c = 0; c < k; ++c) {
            auto it_hi = std::find_if(usable.begin(), usable.end(),
                                      [&](double v) { return std::abs(v - hi) <= kForcedTol; });
            if (it_hi == usable.end())
                throw ValidationError("coin lift: missing forced base eigenvalue at upper end");
            usable.erase(it_hi);
            auto it_lo = std::find_if(usable.begin(), usable.end(),
                                      [&](double v) { return std::abs(v - lo) <= kForcedTol; });
            if (it_lo == usable.end())
                throw ValidationError("coin lift: missing forced base eigenvalue at lower end");
            usable.erase(it_lo);
        }
        rep.note = "tree branch";
    }
    rep.values.assign(rep.plus_one_multiplicity, Complex{1.0, 0.0});
    rep.values.insert(rep.values.end(), rep.minus_one_multiplicity, Complex{-1.0, 0.0});
    for (double x : usable) {
        const auto [vp, vm] = pair_of(x);
        rep.lifted.push_back(LiftedPair{x, vp, vm});
        rep.values.push_back(vp);
        rep.values.push_back(vm);
    }
    finalize(rep);
    return rep;
}

} // namespace

SpectrumReport grover_spectrum(const Multigraph& g) {
    if (!g.connected()) throw ValidationError("grover_spectrum: graph must be connected");
    const std::vector<double> lam_t = transition_spectrum(g);
    const long excess = static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count());
    auto pair_of = [](double x) {
        double xc = std::clamp(x, -1.0, 1.0);
        if (xc > 1.0 - kForcedTol) xc = 1.0;
        if (xc < -1.0 + kForcedTol) xc = -1.0;
        const double im = std::sqrt(std::max(0.0, 1.0 - xc * xc));
        return std::make_pair(Complex{xc, im}, Complex{xc, -im});
    };
    return coin_lift(lam_t, excess, -1.0, 1.0, pair_of, 2 * g.edge_count(), g.vertex_count());
}

SpectrumReport positive_support_spectrum(const Multigraph& g) {
    std::size_t k = 0;
    if (!g.regular(&k))
        throw ValidationError("positive_support_spectrum: graph is not regular");
    if (k < 2 || !g.connected())
        throw ValidationError("positive_support_spectrum: needs a connected md2 graph");
    const std::vector<double> lam_a = eig_hermitian(adjacency_matrix(g)).values;
    const long excess = static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count());
    const double kd = static_cast<double>(k);
    auto pair_of = [kd](double x) {
        double radicand = kd - 1.0 - 0.25 * x * x;
        if (std::abs(radicand) < 1e-9) radicand = 0.0;
        if (radicand >= 0.0) {
            const double im = std::sqrt(radicand);
            return std::make_pair(Complex{0.5 * x, im}, Complex{0.5 * x, -im});
        }
        const double re = std::sqrt(-radicand);
        return std::make_pair(Complex{0.5 * x + re, 0.0}, Complex{0.5 * x - re, 0.0});
    };
    return coin_lift(lam_a, excess, -kd, kd, pair_of, 2 * g.edge_count(), g.vertex_count());
}

SpectrumReport szegedy_spectrum(const BipartiteGraph& bg, const EdgeWeighting& w) {
    const Isometries iso = szegedy_isometries(bg, w);
    const std::size_t eps = bg.graph().edge_count();
    // Lift from the smaller partite side's discriminant.
    SpectrumReport rep;
    if (bg.m() <= bg.n()) {
        const Discriminant ap = discriminant_ap(iso.k, iso.l);
        rep = lift_spectrum(eig_hermitian(ap.matrix).values, eps, bg.n(), bg.m());
    } else {
        const Discriminant aq = discriminant_aq(iso.k, iso.l);
        rep = lift_spectrum(eig_hermitian(aq.matrix).values, eps, bg.m(), bg.n());
    }
    if (bg.graph().is_tree()) rep.note = "tree branch";
    return rep;
}

SpectrumReport sqw_spectrum(const BipartiteGraph& h, const AmplitudeAssignment& amps) {
    const SqwOperators ops = sqw_operators(h, amps);
    const std::size_t nu = h.graph().edge_count();
    SpectrumReport rep = lift_spectrum(eig_hermitian(ops.ahat.matrix).values, nu, h.n(), h.m());
    if (h.graph().is_tree()) rep.note = "tree branch";
    return rep;
}

SpectrumReport search_spectrum(const SearchInstance& si) {
    const SearchOperators ops = search_operators(si);
    SpectrumReport rep = lift_spectrum(eig_hermitian(ops.ahat_p.matrix).values,
                                       si.edge_space_size(), si.n(), si.n());
    if (si.base().is_tree() && si.m() <= 1) rep.note = "tree branch";
    return rep;
}

SpectrumReport direct_spectrum(const Matrix& matrix) {
    SpectrumReport rep;
    rep.dimension = matrix.rows();
    rep.values = eig_general(matrix).values;
    rep.provenance = Provenance::Direct;
    std::sort(rep.values.begin(), rep.values.end(), lex_less);
    return rep;
}

} // namespace qwalk
