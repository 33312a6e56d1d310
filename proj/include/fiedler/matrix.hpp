#pragma once

#include <cstddef>
#include <vector>

namespace fiedler {

/// Dense square matrix of doubles, row-major. Sized for small graphs
/// (n <= 12 in practice); no sparsity machinery.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}

    static Matrix identity(int n);

    int size() const { return n_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

    /// Column k as a vector.
    std::vector<double> column(int k) const;

    double frobenius_norm() const;
    double max_abs() const;

    bool operator==(const Matrix& other) const = default;

private:
    int n_ = 0;
    std::vector<double> data_;
};

std::vector<double> multiply(const Matrix& a, const std::vector<double>& x);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& a);
double norm_inf(const std::vector<double>& a);

/// Solves a*x = b by Gaussian elimination with partial pivoting.
/// Throws std::runtime_error when a pivot falls below 1e-13 in magnitude.
std::vector<double> solve_linear(Matrix a, std::vector<double> b);

}  // namespace fiedler
