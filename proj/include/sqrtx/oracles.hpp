#pragma once

#include <vector>

#include "sqrtx/eigen.hpp"
#include "sqrtx/sqrt_frechet.hpp"
#include "sqrtx/sym_matrix.hpp"

namespace sqrtx {

// Tuning knobs for the quadrature-based reference implementations. The
// defaults are chosen so every oracle lands well inside the agreement
// tolerances used by the verification suite; node_count is the per-panel
// Gauss-Legendre order and must stay >= 8.
struct QuadratureSpec {
  int node_count = 8;

  // exp-kernel integral: panels on [0, T] with T = exp_horizon / sqrt
  // of lambda_min(A); panel edges graded geometrically from the shortest
  // decay scale so wide spectra stay resolved.
  int exp_panels = 32;
  double exp_horizon = 40.0;

  // resolvent integrals: panels on [0, U] with U = resolvent_horizon *
  // sqrt of the spectral norm of A, after the substitution that removes
  // the endpoint singularity; the truncated tail is added back in closed
  // form from a short series.
  int resolvent_panels = 64;
  double resolvent_horizon = 50.0;

  // segment integral on [0, 1] for the Taylor remainder.
  int segment_panels = 4;

  void validate() const;  // throws std::invalid_argument on bad values
};

// Gauss-Legendre rule on [-1, 1]. Nodes ascending, weights positive.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int n);

// exp(M) for symmetric M by scaling and squaring of a truncated power
// series. Deliberately avoids the eigensolver so that agreement between
// the quadrature oracles and the spectral routes is meaningful evidence.
SymMatrix expm_sym(const SymMatrix& m);

// First derivative of the square root map as the exponential-kernel
// integral over [0, inf) of exp(-t sqrt(A)) H exp(-t sqrt(A)) dt, the
// solution of the underlying continuous-time equation. Cross-validates
// frechet_first.
SymMatrix lyapunov_quadrature(const SpdMatrix& a, const SymMatrix& h,
                              const QuadratureSpec& q = {});

// Square root via the resolvent integral
//   (2/pi) * integral over u in [0, inf) of A (u^2 I + A)^{-1} du,
// linear solves by Cholesky factorisation. Cross-validates principal_sqrt.
SymMatrix resolvent_sqrt(const SpdMatrix& a, const QuadratureSpec& q = {});

// First derivative via the differentiated resolvent integral
//   (2/pi) * integral of u^2 (u^2 I + A)^{-1} H (u^2 I + A)^{-1} du.
// Cross-validates frechet_first by a route independent of both the
// eigensolver and the exponential kernel.
SymMatrix resolvent_frechet(const SpdMatrix& a, const SymMatrix& h,
                            const QuadratureSpec& q = {});

// Central finite difference of order k (k in 1..4) of the map
// eps -> sqrt(A + eps H) at 0 with step eps; estimates k! * s_k with
// O(eps^2) truncation error. Requires A +/- k*eps*H positive definite and
// throws GateFailed otherwise.
SymMatrix finite_difference(const SpdMatrix& a, const SymMatrix& h, int k,
                            double eps);

// Step size balancing the O(eps^2) truncation of the order-k stencil
// against roundoff amplified by eps^{-k}.
double default_fd_step(const SpdMatrix& a, const SymMatrix& h, int k);

// Integral form of the order-n Taylor remainder of sqrt(A + H):
//   (n+1) * integral over eps in [0,1] of (1-eps)^n s_{n+1}(A+eps H, H).
// Equals sqrt(A+H) - taylor_sum(A, H, n) up to quadrature error. Requires
// the strict gate (the whole segment must be SPD).
SymMatrix remainder_integral(const SpdMatrix& a, const SymMatrix& h, int n,
                             const QuadratureSpec& q = {});

// k-th Taylor coefficient of sqrt(a + h) around h = 0 for scalars:
// binom(1/2, k) * a^{1/2 - k} * h^k. The 1x1 cross-check for all the
// matrix machinery.
double scalar_closed_form(double a, double h, int k);

}  // namespace sqrtx
