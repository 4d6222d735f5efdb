#include "sqrtx/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sqrtx/errors.hpp"
#include "sqrtx/kernels.hpp"

namespace sqrtx {

const char* norm_kind_name(NormKind kind) {
  return kind == NormKind::spectral ? "spectral" : "frobenius";
}

double norm_bound_factor(NormKind kind, std::size_t dim) {
  return kind == NormKind::spectral ? 1.0
                                    : std::sqrt(static_cast<double>(dim));
}

SymMatrix SymMatrix::zero(std::size_t dim) { return SymMatrix(Matrix(dim)); }

SymMatrix SymMatrix::identity(std::size_t dim) {
  return SymMatrix(Matrix::identity(dim));
}

SymMatrix SymMatrix::diagonal(std::span<const double> entries) {
  Matrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return SymMatrix(std::move(m));
}

SymMatrix SymMatrix::average(const Matrix& m) {
  Matrix out = m;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = i + 1; j < m.dim(); ++j) {
      const double v = 0.5 * (out(i, j) + out(j, i));
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return SymMatrix(std::move(out));
}

SymMatrix symmetrize(const Matrix& m, double* out_deviation) {
  const double dev = asymmetry(m);
  if (out_deviation != nullptr) *out_deviation = dev;
  const double tol = 1e-8 * std::max(1.0, max_abs(m));
  if (dev > tol) {
    throw NotSymmetric(dev, "matrix is not symmetric: |m(i,j) - m(j,i)| up to " +
                                std::to_string(dev) + " exceeds tolerance " +
                                std::to_string(tol));
  }
  return SymMatrix::average(m);
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  return SymMatrix::average(a.mat() + b.mat());
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
  return SymMatrix::average(a.mat() - b.mat());
}

SymMatrix operator*(double alpha, const SymMatrix& a) {
  return SymMatrix::average(alpha * a.mat());
}

SymMatrix add_scaled(const SymMatrix& x, double beta, const SymMatrix& y) {
  return SymMatrix::average(add_scaled(x.mat(), beta, y.mat()));
}

Matrix operator*(const SymMatrix& a, const SymMatrix& b) {
  return a.mat() * b.mat();
}

double frobenius_norm(const SymMatrix& a) { return frobenius_norm(a.mat()); }

double max_abs(const SymMatrix& a) { return max_abs(a.mat()); }

}  // namespace sqrtx
