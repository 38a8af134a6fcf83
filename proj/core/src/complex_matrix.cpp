#include "qwalk/complex_matrix.hpp"

#include <cmath>
#include <utility>

namespace qwalk {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> entries)
    : rows_(rows), cols_(cols), data_(entries) {
    if (data_.size() != rows * cols)
        throw ValidationError("matrix literal has " + std::to_string(data_.size()) +
                              " entries, expected " + std::to_string(rows * cols));
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw ValidationError("matmul dimension mismatch: " + std::to_string(rows_) + "x" +
                              std::to_string(cols_) + " * " + std::to_string(rhs.rows_) + "x" +
                              std::to_string(rhs.cols_));
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex aik = (*this)(i, k);
            if (aik == Complex{}) continue;
            const Complex* rrow = &rhs.data_[k * rhs.cols_];
            Complex* orow = &out.data_[i * out.cols_];
            for (std::size_t j = 0; j < rhs.cols_; ++j) orow[j] += aik * rrow[j];
        }
    }
    return out;
}

Matrix Matrix::operator*(Complex scalar) const {
    Matrix out = *this;
    for (auto& z : out.data_) z *= scalar;
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ValidationError("matrix add shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ValidationError("matrix sub shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
}

std::vector<Complex> Matrix::apply(const std::vector<Complex>& v) const {
    if (v.size() != cols_) throw ValidationError("matvec dimension mismatch");
    std::vector<Complex> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Complex acc{};
        const Complex* row = &data_[i * cols_];
        for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * v[j];
        out[i] = acc;
    }
    return out;
}

Matrix Matrix::conj_transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

bool Matrix::is_hermitian(double tol) const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

bool Matrix::is_unitary(double tol) const {
    return square() && is_isometry(*this, tol);
}

Complex determinant(Matrix a) {
    if (!a.square()) throw ValidationError("determinant requires a square matrix");
    const std::size_t n = a.rows();
    Complex det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(a(i, k)) > best) {
                best = std::abs(a(i, k));
                piv = i;
            }
        }
        if (best == 0.0) return Complex{};
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(piv, j));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = a(i, k) / a(k, k);
            if (f == Complex{}) continue;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

bool is_isometry(const Matrix& a, double tol) {
    const Matrix gram = a.conj_transpose() * a;
    return max_abs_diff(gram, Matrix::identity(a.cols())) <= tol;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ValidationError("max_abs_diff shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

Complex ipow(Complex z, long k) {
    if (k < 0) return 1.0 / ipow(z, -k);
    Complex acc = 1.0;
    while (k > 0) {
        if (k & 1) acc *= z;
        z *= z;
        k >>= 1;
    }
    return acc;
}

} // namespace qwalk
