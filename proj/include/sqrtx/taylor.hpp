#pragma once

#include <optional>
#include <string>

#include "sqrtx/eigen.hpp"
#include "sqrtx/sqrt_frechet.hpp"
#include "sqrtx/sym_matrix.hpp"

namespace sqrtx {

// Outcome of the perturbation admissibility check for a pair (A, H).
//   strict: both A and A + H pass assert_spd; every point of the segment
//           A + eps*H, eps in [0,1], is then SPD by convexity.
//   weyl:   only the eigenvalue margin ||H||_2 < lambda_min(A) held, which
//           still forces A + H positive; surfaced as a diagnostic verdict.
//   failed: neither condition held.
enum class GateVerdict { strict, weyl, failed };

const char* gate_verdict_name(GateVerdict v);

struct PerturbationGate {
  double lambda_min_a = 0.0;
  double lambda_min_b = 0.0;     // smallest eigenvalue of A + H
  double spectral_norm_h = 0.0;
  GateVerdict verdict = GateVerdict::failed;
};

PerturbationGate gate(const SymMatrix& a, const SymMatrix& h);

// Partial sum sqrt(A) + s_1 + ... + s_n of the expansion of sqrt(A + H).
// n = 0 returns sqrt(A). Throws GateFailed when gate(A, H) is failed.
SymMatrix taylor_sum(const SpdMatrix& a, const SymMatrix& h, int n);

// A priori bound on || sqrt(A+H) - taylor_sum(A, H, n) ||:
//   K^n * (n+1) * C_n * 2^{-2n} * lambda_min(A)^{-(n+1/2)} * ||H||^{n+1},
// with K and ||H|| taken in the requested norm. Throws GateFailed when the
// gate verdict is failed.
double remainder_bound(const SpdMatrix& a, const SymMatrix& h, int n,
                       NormKind kind);

// Lipschitz bound for the square root map:
//   || sqrt(A) - sqrt(B) || <= || A - B || / (sqrt(lambda_min(A)) +
//                                             sqrt(lambda_min(B))).
// Returns the right-hand side.
double ando_hemmen_bound(const SpdMatrix& a, const SpdMatrix& b,
                         NormKind kind);

// One evaluation of the whole pipeline on (A, H): gate, partial sum, exact
// root of A + H, measured error, a priori remainder bound, Lipschitz bound
// and solver residual. When the gate verdict is not strict the approx
// fields stay empty; nothing throws, the verdict carries the failure.
struct TaylorReport {
  std::size_t dim = 0;
  int order = 0;
  NormKind kind = NormKind::spectral;
  GateVerdict gate = GateVerdict::failed;
  double lambda_min_a = 0.0;
  double norm_h = 0.0;

  std::optional<SymMatrix> approx;
  std::optional<SymMatrix> truth;
  std::optional<double> actual_error;
  std::optional<double> remainder;
  std::optional<bool> bound_satisfied;
  std::optional<double> ando_hemmen;
  std::optional<double> sylvester_residual;
};

TaylorReport report(const SymMatrix& a, const SymMatrix& h, int n,
                    NormKind kind);

// Single-line JSON rendering with fixed key order:
// dim, order, norm, lambda_min_A, norm_H, actual_error, remainder_bound,
// bound_satisfied, gate, ando_hemmen_bound, sylvester_residual. Keys whose
// values do not exist (non-strict gate) are omitted.
std::string to_json(const TaylorReport& rep);

}  // namespace sqrtx
