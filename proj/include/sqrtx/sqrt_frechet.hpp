#pragma once

#include <cstdint>
#include <vector>

#include "sqrtx/eigen.hpp"
#include "sqrtx/sym_matrix.hpp"

namespace sqrtx {

// Derivative orders are capped where the combinatorial coefficients stop
// being exactly representable in 64-bit integers.
inline constexpr int kMaxDerivativeOrder = 30;

// Principal (positive definite) square root via the spectral factorisation
// cached on the argument. The result carries the same eigenbasis with
// square-rooted eigenvalues, so solves against the root are free.
SpdMatrix principal_sqrt(const SpdMatrix& a);

// Solver for S X + X S = H with S symmetric positive definite. In the
// eigenbasis of S the equation decouples entrywise: with G = U^T H U,
// X = U [ G_ij / (d_i + d_j) ] U^T. The divisors are sums of positive
// eigenvalues, so the solve always succeeds, repeated eigenvalues included.
// One instance can serve many right-hand sides.
class SylvesterSolver {
 public:
  explicit SylvesterSolver(const SpdMatrix& s);

  SymMatrix solve(const SymMatrix& h) const;

  // || S x + x S - h ||_F / ||h||_F, or 0 when h is zero.
  double relative_residual(const SymMatrix& h, const SymMatrix& x) const;

  std::size_t dim() const { return s_.dim(); }

 private:
  SpdMatrix s_;
  Matrix basis_t_;  // U^T, precomputed once
};

// One-shot convenience wrapper around SylvesterSolver.
SymMatrix sylvester_sqrt_solve(const SpdMatrix& s, const SymMatrix& h);

// First directional derivative of the square root map at A in direction H:
// the unique symmetric X with sqrt(A) X + X sqrt(A) = H.
SymMatrix frechet_first(const SpdMatrix& a, const SymMatrix& h);

// Scaled derivatives of the square root map along a fixed direction:
// scaled_terms[k-1] holds s_k, which is 1/k! times the k-th directional
// derivative at base applied to (direction, ..., direction). These are
// exactly the Taylor coefficients of t -> sqrt(base + t * direction) at 0.
struct DerivativeStack {
  SpdMatrix base;
  SymMatrix direction;
  std::vector<SymMatrix> scaled_terms;

  int order() const { return static_cast<int>(scaled_terms.size()); }
  // 1-based accessor: s(1) is the first-derivative term.
  const SymMatrix& s(int k) const {
    return scaled_terms.at(static_cast<std::size_t>(k) - 1);
  }

  // Relative residual of the order-1 solve, kept as a quality diagnostic.
  double sylvester_residual = 0.0;
};

// Builds s_1 .. s_n by the quadratic recursion: s_1 solves
// sqrt(A) X + X sqrt(A) = H, and for n >= 2
//   sqrt(A) s_n + s_n sqrt(A) = - sum over p + q = n - 2 of s_{p+1} s_{q+1}.
// The bracketed sum is symmetric only through its p <-> q pairing, so it is
// symmetrised before the solve. All orders reuse one factorisation of A.
// n must lie in [1, kMaxDerivativeOrder].
DerivativeStack derivative_stack(const SpdMatrix& a, const SymMatrix& h,
                                 int n);

// Second derivative evaluated on two directions, recovered from the
// single-direction recursion by polarisation:
//   D2 phi(A) . (h1, h2)
//     = ( D2 phi(A) . (h1+h2)^{x2} - D2 phi(A) . (h1-h2)^{x2} ) / 4.
// Returns the raw (unscaled) bilinear value, so with h1 = h2 = h it equals
// 2 * s_2 from derivative_stack.
SymMatrix frechet_second_bidirectional(const SpdMatrix& a, const SymMatrix& h1,
                                       const SymMatrix& h2);

// Catalan numbers, exact. catalan(n) evaluates the closed form
// binom(2n, n) / (n + 1); catalan_table additionally cross-checks every
// entry against the convolution recursion C_{k+1} = sum_{p+q=k} C_p C_q.
// Arguments beyond kMaxDerivativeOrder throw OrderTooLarge.
std::int64_t catalan(int n);

struct CatalanTable {
  std::vector<std::int64_t> values;  // values[k] = C_k

  std::int64_t at(int k) const {
    return values.at(static_cast<std::size_t>(k));
  }
  int max_index() const { return static_cast<int>(values.size()) - 1; }
};

CatalanTable catalan_table(int max_n);

// A priori operator-norm bound on the (n+1)-st derivative of the square
// root map at any SPD matrix with smallest eigenvalue lambda_min:
//   K^n * (n+1)! * C_n * 2^{-(2n+1)} * lambda_min^{-(n + 1/2)}.
// K is norm_bound_factor(kind, dim): 1 for spectral, sqrt(dim) for
// Frobenius. For 1x1 matrices the bound is attained exactly.
double derivative_norm_bound(int n, double lambda_min, double k_factor);

// The same bound expressed for the scaled term s_k per unit direction:
// ||s_k|| <= scaled_term_bound(k, lambda_min, K) * ||H||^k.
double scaled_term_bound(int k, double lambda_min, double k_factor);

}  // namespace sqrtx
