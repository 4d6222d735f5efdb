#pragma once

#include <cstddef>
#include <span>

#include "sqrtx/matrix.hpp"

namespace sqrtx {

// Which operator norm a bound or an error measurement is expressed in.
enum class NormKind { spectral, frobenius };

const char* norm_kind_name(NormKind kind);

// Norm-dependent constant in the derivative and remainder bounds: 1 for the
// spectral norm, sqrt(dim) for the Frobenius norm.
double norm_bound_factor(NormKind kind, std::size_t dim);

// Symmetric matrix. The invariant is exact: entry (i,j) is bit-identical to
// entry (j,i), which construction enforces by averaging. Instances are
// immutable after construction, so sharing them across threads is safe.
class SymMatrix {
 public:
  SymMatrix() = default;

  static SymMatrix zero(std::size_t dim);
  static SymMatrix identity(std::size_t dim);
  static SymMatrix diagonal(std::span<const double> entries);

  // (m + m^T) / 2 without any symmetry check. This is the internal
  // re-symmetrisation used after products of symmetric operands, where the
  // drift is pure roundoff. User-facing inputs go through symmetrize()
  // below instead, which rejects material asymmetry.
  static SymMatrix average(const Matrix& m);

  std::size_t dim() const { return m_.dim(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& mat() const { return m_; }
  const double* data() const { return m_.data(); }
  std::size_t size() const { return m_.size(); }

 private:
  explicit SymMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

// Checked symmetrisation of user input: averages m with its transpose, but
// throws NotSymmetric when the worst deviation |m(i,j) - m(j,i)| exceeds
// 1e-8 * max(1, max_abs(m)). When out_deviation is non-null the measured
// deviation is stored there regardless of the outcome.
SymMatrix symmetrize(const Matrix& m, double* out_deviation = nullptr);

// Entrywise operations preserve exact symmetry, so these stay in SymMatrix.
SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator*(double alpha, const SymMatrix& a);
SymMatrix add_scaled(const SymMatrix& x, double beta, const SymMatrix& y);

// A product of symmetric matrices is not symmetric in general, so it decays
// to a plain Matrix.
Matrix operator*(const SymMatrix& a, const SymMatrix& b);

double frobenius_norm(const SymMatrix& a);
double max_abs(const SymMatrix& a);

// Operator norm of a symmetric matrix; the spectral case runs the
// eigensolver. Defined in eigen.cpp.
double norm(const SymMatrix& a, NormKind kind);

}  // namespace sqrtx
