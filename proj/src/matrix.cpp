#include "sqrtx/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "sqrtx/kernels.hpp"

namespace sqrtx {
namespace {

void require_same_dim(const Matrix& a, const Matrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()) + ")");
  }
}

}  // namespace

Matrix::Matrix(std::size_t dim, std::vector<double> entries)
    : dim_(dim), a_(std::move(entries)) {
  if (a_.size() != dim_ * dim_) {
    throw std::invalid_argument("Matrix: entry count does not match dimension");
  }
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "operator*");
  Matrix c(a.dim());
  kernels::active_kernels().mat_mul(a.data(), b.data(), c.data(), a.dim());
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "operator+");
  Matrix c(a.dim());
  kernels::active_kernels().axpby(1.0, a.data(), 1.0, b.data(), c.data(),
                                  a.size());
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "operator-");
  Matrix c(a.dim());
  kernels::active_kernels().axpby(1.0, a.data(), -1.0, b.data(), c.data(),
                                  a.size());
  return c;
}

Matrix operator*(double alpha, const Matrix& a) {
  Matrix c(a.dim());
  kernels::active_kernels().axpby(alpha, a.data(), 0.0, a.data(), c.data(),
                                  a.size());
  return c;
}

Matrix add_scaled(const Matrix& x, double beta, const Matrix& y) {
  require_same_dim(x, y, "add_scaled");
  Matrix c(x.dim());
  kernels::active_kernels().axpby(1.0, x.data(), beta, y.data(), c.data(),
                                  x.size());
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

double frobenius_norm(const Matrix& a) {
  return std::sqrt(kernels::active_kernels().dot(a.data(), a.data(), a.size()));
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a.data()[i]));
  }
  return m;
}

double asymmetry(const Matrix& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      worst = std::max(worst, std::abs(a(i, j) - a(j, i)));
    }
  }
  return worst;
}

}  // namespace sqrtx
