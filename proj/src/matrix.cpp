#include "hadamat/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hadamat {

Matrix::Matrix(std::size_t n, double fill) : n_(n), data_(n * n, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    n_ = rows.size();
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw DimensionMismatch("matrix initializer is not square");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::from_rows(std::size_t n, const std::vector<double>& row_major) {
    if (row_major.size() != n * n) throw DimensionMismatch("row data does not match n*n");
    Matrix m(n);
    std::copy(row_major.begin(), row_major.end(), m.data_.begin());
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

static void check_same_size(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) throw DimensionMismatch();
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_size(a, b);
    Matrix c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_size(a, b);
    Matrix c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    check_same_size(a, b);
    const std::size_t n = a.size();
    Matrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix operator*(double s, const Matrix& a) {
    Matrix c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = s * a(i, j);
    return c;
}

Vector operator*(const Matrix& a, const Vector& x) {
    if (x.size() != a.size()) throw DimensionMismatch();
    Vector y(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

Matrix hadamard_product(const Matrix& a, const Matrix& b) {
    check_same_size(a, b);
    Matrix c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = a(i, j) * b(i, j);
    return c;
}

Matrix diagonal(const Vector& v) {
    Matrix d(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) d(i, i) = v[i];
    return d;
}

double max_norm(const Matrix& a) {
    double m = 0.0;
    for (double x : a.data()) m = std::max(m, std::fabs(x));
    return m;
}

double max_norm_diff(const Matrix& a, const Matrix& b) {
    check_same_size(a, b);
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            m = std::max(m, std::fabs(a(i, j) - b(i, j)));
    return m;
}

Vector ones(std::size_t n) { return Vector(n, 1.0); }

double dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch();
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double sum(const Vector& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

Vector hadamard(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch();
    Vector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * b[i];
    return c;
}

Vector scale(double s, const Vector& v) {
    Vector c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = s * v[i];
    return c;
}

double min_entry(const Vector& v) {
    double m = std::numeric_limits<double>::infinity();
    for (double x : v) m = std::min(m, x);
    return m;
}

} // namespace hadamat
