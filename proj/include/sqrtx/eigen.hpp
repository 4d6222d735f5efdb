#pragma once

#include <cstddef>
#include <vector>

#include "sqrtx/matrix.hpp"
#include "sqrtx/sym_matrix.hpp"

namespace sqrtx {

// Full spectral factorisation A = U diag(values) U^T with orthogonal U.
struct EigenDecomposition {
  Matrix basis;                    // columns are eigenvectors
  std::vector<double> eigenvalues; // ascending

  std::size_t dim() const { return eigenvalues.size(); }
};

// Cyclic Jacobi rotations with the standard small-element skip. Converges
// when the off-diagonal Frobenius mass drops below dim * eps * ||A||_F;
// throws EigenFailure if that does not happen within the sweep budget.
EigenDecomposition eig_sym(const SymMatrix& a);

double lambda_min(const SymMatrix& a);

// Threshold below which an eigenvalue is not credibly positive for a matrix
// of this size and magnitude: dim * machine-eps * spectral_norm.
double spd_threshold(std::size_t dim, double spectral_norm);

// Symmetric positive definite matrix, produced only by checked or trusted
// construction. Carries its own spectral factorisation so downstream
// operations (square root, the structured linear solves) never have to
// refactor, and so they all agree on one set of eigenvalues.
class SpdMatrix {
 public:
  SpdMatrix() = default;

  const SymMatrix& sym() const { return base_; }
  const EigenDecomposition& eigen() const { return eig_; }
  double lambda_min() const { return lambda_min_; }
  std::size_t dim() const { return base_.dim(); }
  const Matrix& mat() const { return base_.mat(); }

  // Trusted assembly from a factorisation already known to be positive:
  // used where positivity is a theorem (e.g. the square root of an SPD
  // matrix), not a measurement. eigenvalues must be ascending and positive.
  static SpdMatrix from_eigen(SymMatrix base, EigenDecomposition eig);

 private:
  SymMatrix base_;
  EigenDecomposition eig_;
  double lambda_min_ = 0.0;
};

// Checked construction: factorises a and requires every eigenvalue to clear
// spd_threshold. Throws NotPositiveDefinite (carrying the smallest
// eigenvalue) otherwise.
SpdMatrix assert_spd(const SymMatrix& a);

}  // namespace sqrtx
