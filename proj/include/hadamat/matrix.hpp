#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "hadamat/errors.hpp"

namespace hadamat {

using Vector = std::vector<double>;

/// Dense square matrix of finite reals, row-major storage, value semantics.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n, double fill = 0.0);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::size_t n, const std::vector<double>& row_major);

    std::size_t size() const { return n_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

    const std::vector<double>& data() const { return data_; }

    Matrix transpose() const;
    bool all_finite() const;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);

Vector operator*(const Matrix& a, const Vector& x);

/// Entrywise product A .* B.
Matrix hadamard_product(const Matrix& a, const Matrix& b);

/// diag(v) as a full matrix.
Matrix diagonal(const Vector& v);

/// max_{ij} |A_ij|
double max_norm(const Matrix& a);
double max_norm_diff(const Matrix& a, const Matrix& b);

Vector ones(std::size_t n);
double dot(const Vector& a, const Vector& b);
double sum(const Vector& v);
Vector hadamard(const Vector& a, const Vector& b);
Vector scale(double s, const Vector& v);
double min_entry(const Vector& v);

/// Tolerances for sign tests (abs_eps) and residual checks (rel_eps).
struct Tolerance {
    double abs_eps = 1e-9;
    double rel_eps = 1e-9;
};

inline bool nonneg(double x, const Tolerance& tol) { return x >= -tol.abs_eps; }
inline bool positive(double x, const Tolerance& tol) { return x > tol.abs_eps; }

} // namespace hadamat
