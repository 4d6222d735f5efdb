#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sqrtx {

// Dense square matrix of doubles, row-major storage. This is the raw
// workhorse type; the symmetry-aware wrappers in sym_matrix.hpp are built on
// top of it. Arithmetic goes through the kernel layer so scalar and wide
// builds share one code path.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0.0) {}
  Matrix(std::size_t dim, std::vector<double> entries);

  static Matrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  double& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return a_[i * dim_ + j];
  }

  double* data() { return a_.data(); }
  const double* data() const { return a_.data(); }
  std::span<double> row(std::size_t i) { return {a_.data() + i * dim_, dim_}; }
  std::span<const double> row(std::size_t i) const {
    return {a_.data() + i * dim_, dim_};
  }
  std::size_t size() const { return a_.size(); }

 private:
  std::size_t dim_ = 0;
  std::vector<double> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double alpha, const Matrix& a);

// x + beta * y in one pass.
Matrix add_scaled(const Matrix& x, double beta, const Matrix& y);

Matrix transpose(const Matrix& a);

double frobenius_norm(const Matrix& a);
double max_abs(const Matrix& a);

// Largest |a(i,j) - a(j,i)| over the strict upper triangle.
double asymmetry(const Matrix& a);

}  // namespace sqrtx
