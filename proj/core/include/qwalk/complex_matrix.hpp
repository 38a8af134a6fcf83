#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk {

using Complex = std::complex<double>;

/// Dense row-major complex matrix, double precision. The workhorse behind
/// every operator and discriminant in this library; sized for dense spectra
/// work up to a few hundred rows, not for sparse or very large problems.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> entries);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex>& data() const { return data_; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator*(Complex scalar) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;

    std::vector<Complex> apply(const std::vector<Complex>& v) const;

    Matrix conj_transpose() const;

    double max_abs() const;
    double frobenius_norm() const;

    bool is_hermitian(double tol) const;
    bool is_unitary(double tol) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// LU determinant with partial pivoting. Singular input yields 0, not an error.
Complex determinant(Matrix a);

/// True iff *a·a is the identity within `tol` in max-abs norm.
bool is_isometry(const Matrix& a, double tol);

/// max_ij |a_ij - b_ij|; matrices must have equal shape.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// z^k for integer k (negative powers allowed).
Complex ipow(Complex z, long k);

} // namespace qwalk
