#include "qwalk/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace qwalk {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool lex_less(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

// Rotation R = [[c, s], [-conj(s), c]] with R [a b]^t = [r 0]^t.
struct Givens {
    double c;
    Complex s;
};

Givens make_givens(Complex a, Complex b) {
    const double na = std::abs(a), nb = std::abs(b);
    if (nb == 0.0) return {1.0, Complex{}};
    const double r = std::hypot(na, nb);
    if (na == 0.0) return {0.0, std::conj(b) / nb}; // |s| = 1 carrying b's phase
    const Complex phase_a = a / na;
    return {na / r, phase_a * std::conj(b) / r};
}

// Rows i, j of h become R [row_i; row_j].
void apply_givens_left(Matrix& h, std::size_t i, std::size_t j, const Givens& g) {
    for (std::size_t k = 0; k < h.cols(); ++k) {
        const Complex x = h(i, k), y = h(j, k);
        h(i, k) = g.c * x + g.s * y;
        h(j, k) = -std::conj(g.s) * x + g.c * y;
    }
}

// Columns i, j of h become [col_i, col_j] R*.
void apply_givens_right(Matrix& h, std::size_t i, std::size_t j, const Givens& g) {
    for (std::size_t k = 0; k < h.rows(); ++k) {
        const Complex x = h(k, i), y = h(k, j);
        h(k, i) = g.c * x + std::conj(g.s) * y;
        h(k, j) = -g.s * x + g.c * y;
    }
}

// Householder reduction to upper Hessenberg form; q accumulates the
// transformation so that a = q h q*.
void hessenberg(Matrix& h, Matrix& q) {
    const std::size_t n = h.rows();
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double colnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) colnorm = std::hypot(colnorm, std::abs(h(i, k)));
        if (colnorm == 0.0) continue;
        std::vector<Complex> v(n - k - 1);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = h(k + 1 + i, k);
        const double x0 = std::abs(v[0]);
        const Complex phase = x0 == 0.0 ? Complex{1.0} : v[0] / x0;
        v[0] += phase * colnorm;
        double vnorm2 = 0.0;
        for (const auto& z : v) vnorm2 += std::norm(z);
        if (vnorm2 == 0.0) continue;

        // h <- P h, P = I - 2 v v* / v*v acting on rows k+1..n-1
        for (std::size_t j = 0; j < n; ++j) {
            Complex dot{};
            for (std::size_t i = 0; i < v.size(); ++i) dot += std::conj(v[i]) * h(k + 1 + i, j);
            dot *= 2.0 / vnorm2;
            for (std::size_t i = 0; i < v.size(); ++i) h(k + 1 + i, j) -= dot * v[i];
        }
        // h <- h P on columns k+1..n-1
        for (std::size_t i = 0; i < n; ++i) {
            Complex dot{};
            for (std::size_t j = 0; j < v.size(); ++j) dot += h(i, k + 1 + j) * v[j];
            dot *= 2.0 / vnorm2;
            for (std::size_t j = 0; j < v.size(); ++j) h(i, k + 1 + j) -= dot * std::conj(v[j]);
        }
        // q <- q P
        for (std::size_t i = 0; i < n; ++i) {
            Complex dot{};
            for (std::size_t j = 0; j < v.size(); ++j) dot += q(i, k + 1 + j) * v[j];
            dot *= 2.0 / vnorm2;
            for (std::size_t j = 0; j < v.size(); ++j) q(i, k + 1 + j) -= dot * std::conj(v[j]);
        }
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = Complex{};
    }
}

Complex wilkinson_shift(const Matrix& h, std::size_t hi) {
    const Complex a = h(hi - 1, hi - 1), b = h(hi - 1, hi);
    const Complex c = h(hi, hi - 1), d = h(hi, hi);
    const Complex tr = a + d;
    const Complex disc = std::sqrt(tr * tr - 4.0 * (a * d - b * c));
    const Complex l1 = (tr + disc) / 2.0, l2 = (tr - disc) / 2.0;
    return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

// Complex Schur form a = q t q* via single-shift QR with bulge chasing.
void schur(Matrix& h, Matrix& q) {
    const std::size_t n = h.rows();
    if (n < 2) return;
    const double hnorm = std::max(h.frobenius_norm(), kEps);
    const std::size_t max_total = 60 * n + 200;
    std::size_t total_iters = 0;

    std::size_t hi = n - 1;
    std::size_t stalled = 0;
    while (hi > 0) {
        // Deflate converged subdiagonal entries.
        std::size_t lo = hi;
        while (lo > 0) {
            const double sub = std::abs(h(lo, lo - 1));
            if (sub <= kEps * (std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo))) ||
                sub <= kEps * hnorm) {
                h(lo, lo - 1) = Complex{};
                break;
            }
            --lo;
        }
        if (lo == hi) {
            --hi;
            stalled = 0;
            continue;
        }
        if (++total_iters > max_total)
            throw NumericalError("eig_general: QR iteration did not converge");

        Complex mu = wilkinson_shift(h, hi);
        if (++stalled % 12 == 0) // exceptional shift to break rare cycles
            mu = h(hi, hi) + Complex(0.75 * std::abs(h(hi, hi - 1)), 0.0);

        // Start the sweep at the lowest row where the bulge it would create
        // is negligible; interior near-converged subdiagonals otherwise make
        // every rotation near-identity and progress stalls.
        std::size_t start = lo;
        for (std::size_t m = hi - 1; m > lo; --m) {
            const Complex h11s = h(m, m) - mu;
            const double sc = std::abs(h11s) + std::abs(h(m + 1, m));
            if (sc == 0.0) continue;
            const double h10 = std::abs(h(m, m - 1));
            const double h21 = std::abs(h(m + 1, m)) / sc;
            if (h10 * h21 <= kEps * (std::abs(h11s) / sc) *
                                 (std::abs(h(m, m)) + std::abs(h(m + 1, m + 1)))) {
                start = m;
                break;
            }
        }

        Complex x = h(start, start) - mu;
        Complex z = h(start + 1, start);
        for (std::size_t k = start; k < hi; ++k) {
            const Givens g = make_givens(x, z);
            apply_givens_left(h, k, k + 1, g);
            apply_givens_right(h, k, k + 1, g);
            apply_givens_right(q, k, k + 1, g);
            if (k + 1 < hi) {
                x = h(k + 1, k);
                z = h(k + 2, k);
            }
        }
    }
}

} // namespace

HermitianEigen eig_hermitian(const Matrix& a, double sym_tol) {
    if (!a.square()) throw ValidationError("eig_hermitian requires a square matrix");
    const std::size_t n = a.rows();
    const double scale = std::max(1.0, a.max_abs());
    const Matrix adj = a.conj_transpose();
    if (max_abs_diff(a, adj) > sym_tol * scale)
        throw ValidationError("eig_hermitian: matrix is not Hermitian within tolerance");

    Matrix w(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w(i, j) = 0.5 * (a(i, j) + adj(i, j));
    Matrix v = Matrix::identity(n);

    auto offdiag = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += std::norm(w(i, j));
        return std::sqrt(2.0 * s);
    };

    const double target = 1e2 * kEps * std::max(w.frobenius_norm(), kEps);
    for (int sweep = 0; sweep < 60 && offdiag() > target; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = w(p, q);
                const double g = std::abs(apq);
                if (g <= kEps * target) continue;
                const double app = w(p, p).real(), aqq = w(q, q).real();
                const Complex phase = apq / g; // peel the phase, rotate the real core
                double theta;
                if (app == aqq) {
                    theta = 0.25 * M_PI;
                } else {
                    theta = 0.5 * std::atan2(2.0 * g, app - aqq);
                }
                const double c = std::cos(theta);
                const Complex s = std::sin(theta) * std::conj(phase);
                // Columns: [col_p col_q] <- [col_p col_q] [[c, -conj(s)],[s... ]]
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex xi = w(i, p), yi = w(i, q);
                    w(i, p) = c * xi + s * yi;
                    w(i, q) = -std::conj(s) * xi + c * yi;
                    const Complex vx = v(i, p), vy = v(i, q);
                    v(i, p) = c * vx + s * vy;
                    v(i, q) = -std::conj(s) * vx + c * vy;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex xj = w(p, j), yj = w(q, j);
                    w(p, j) = c * xj + std::conj(s) * yj;
                    w(q, j) = -s * xj + c * yj;
                }
                w(p, q) = Complex{};
                w(q, p) = Complex{};
                w(p, p) = Complex(w(p, p).real(), 0.0);
                w(q, q) = Complex(w(q, q).real(), 0.0);
            }
        }
    }

    HermitianEigen out;
    out.values.resize(n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = w(i, i).real();
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return diag[i] < diag[j]; });
    out.vectors = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = diag[order[j]];
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

GeneralEigen eig_general_full(const Matrix& a) {
    if (!a.square()) throw ValidationError("eig_general requires a square matrix");
    const std::size_t n = a.rows();
    GeneralEigen out;
    out.vectors = Matrix(n, n);
    if (n == 0) return out;

    Matrix t = a;
    Matrix q = Matrix::identity(n);
    hessenberg(t, q);
    schur(t, q);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) t(i, j) = Complex{};

    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = t(i, i);

    // Right eigenvectors of the triangular factor by back-substitution, with
    // near-singular pivots floored to keep residuals at the eps level even for
    // repeated eigenvalues.
    const double tnorm = std::max(t.frobenius_norm(), kEps);
    const double smallnum = kEps * tnorm;
    std::vector<Complex> y(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(y.begin(), y.end(), Complex{});
        y[j] = 1.0;
        const Complex lambda = out.values[j];
        for (std::size_t ii = j; ii-- > 0;) {
            Complex rhs{};
            for (std::size_t k = ii + 1; k <= j; ++k) rhs += t(ii, k) * y[k];
            Complex denom = lambda - t(ii, ii);
            if (std::abs(denom) < smallnum) denom = smallnum;
            y[ii] = rhs / denom;
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i <= j; ++i) nrm += std::norm(y[i]);
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i <= j; ++i) y[i] /= nrm;
        for (std::size_t i = 0; i < n; ++i) {
            Complex acc{};
            for (std::size_t k = 0; k <= j; ++k) acc += q(i, k) * y[k];
            out.vectors(i, j) = acc;
        }
    }

    const double anorm = std::max(a.frobenius_norm(), kEps);
    for (std::size_t j = 0; j < n; ++j) {
        double resid = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex acc = -out.values[j] * out.vectors(i, j);
            for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * out.vectors(k, j);
            resid += std::norm(acc);
        }
        if (std::sqrt(resid) > 1e-7 * anorm)
            throw NumericalError("eig_general: eigenpair residual exceeds 1e-7·|a|");
    }
    return out;
}

EigenMultiset eig_general(const Matrix& a) {
    EigenMultiset out;
    out.values = eig_general_full(a).values;
    std::sort(out.values.begin(), out.values.end(), lex_less);
    return out;
}

MatchReport multiset_match(const EigenMultiset& a, const EigenMultiset& b, double tol) {
    if (a.values.size() != b.values.size())
        throw ValidationError("multiset_match: size mismatch");
    std::vector<Complex> as = a.values, bs = b.values;
    std::sort(as.begin(), as.end(), lex_less);
    std::sort(bs.begin(), bs.end(), lex_less);

    MatchReport rep;
    rep.matching.resize(as.size());
    std::vector<bool> used(bs.size(), false);
    rep.ok = true;
    for (std::size_t i = 0; i < as.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t pick = 0;
        for (std::size_t j = 0; j < bs.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(as[i] - bs[j]);
            if (d < best) {
                best = d;
                pick = j;
            }
        }
        used[pick] = true;
        rep.matching[i] = pick;
        rep.max_distance = std::max(rep.max_distance, best);
        if (best > tol) rep.ok = false;
    }
    return rep;
}

bool multiset_equal(const EigenMultiset& a, const EigenMultiset& b, double tol) {
    return multiset_match(a, b, tol).ok;
}

std::vector<std::pair<Complex, std::size_t>> cluster_eigenvalues(std::vector<Complex> values,
                                                                 double tol) {
    std::sort(values.begin(), values.end(), lex_less);
    std::vector<std::pair<Complex, std::size_t>> out;
    std::size_t i = 0;
    while (i < values.size()) {
        Complex sum = values[i];
        std::size_t count = 1;
        while (i + count < values.size() && std::abs(values[i + count] - values[i]) <= tol) {
            sum += values[i + count];
            ++count;
        }
        out.emplace_back(sum / static_cast<double>(count), count);
        i += count;
    }
    return out;
}

} // namespace qwalk
