#include "sqrtx/taylor.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "sqrtx/errors.hpp"
#include "sqrtx/json_writer.hpp"

namespace sqrtx {
namespace {

constexpr double kBoundSlack = 1e-8;  // scalar cases attain the bound exactly

void require_gate_not_failed(const SpdMatrix& a, const SymMatrix& h) {
  const PerturbationGate g = gate(a.sym(), h);
  if (g.verdict == GateVerdict::failed) {
    throw GateFailed("perturbation rejected: lambda_min(A+H) = " +
                     std::to_string(g.lambda_min_b) + ", ||H||_2 = " +
                     std::to_string(g.spectral_norm_h) +
                     " >= lambda_min(A) = " + std::to_string(g.lambda_min_a));
  }
}

}  // namespace

const char* gate_verdict_name(GateVerdict v) {
  switch (v) {
    case GateVerdict::strict:
      return "strict";
    case GateVerdict::weyl:
      return "weyl";
    default:
      return "failed";
  }
}

PerturbationGate gate(const SymMatrix& a, const SymMatrix& h) {
  if (a.dim() != h.dim()) {
    throw std::invalid_argument("gate: dimension mismatch");
  }
  PerturbationGate out;
  const EigenDecomposition ea = eig_sym(a);
  const EigenDecomposition eb = eig_sym(a + h);
  out.lambda_min_a = ea.eigenvalues.front();
  out.lambda_min_b = eb.eigenvalues.front();
  out.spectral_norm_h = norm(h, NormKind::spectral);

  const double norm_a = std::max(std::abs(ea.eigenvalues.front()),
                                 std::abs(ea.eigenvalues.back()));
  const double norm_b = std::max(std::abs(eb.eigenvalues.front()),
                                 std::abs(eb.eigenvalues.back()));
  const bool a_spd = out.lambda_min_a > spd_threshold(a.dim(), norm_a);
  const bool b_spd = out.lambda_min_b > spd_threshold(a.dim(), norm_b);

  if (a_spd && b_spd) {
    out.verdict = GateVerdict::strict;
  } else if (out.lambda_min_a > out.spectral_norm_h) {
    out.verdict = GateVerdict::weyl;
  } else {
    out.verdict = GateVerdict::failed;
  }
  return out;
}

SymMatrix taylor_sum(const SpdMatrix& a, const SymMatrix& h, int n) {
  if (n < 0) {
    throw std::invalid_argument("taylor_sum: negative order");
  }
  require_gate_not_failed(a, h);
  SymMatrix sum = principal_sqrt(a).sym();
  if (n == 0) return sum;
  const DerivativeStack stack = derivative_stack(a, h, n);
  for (int k = 1; k <= n; ++k) sum = sum + stack.s(k);
  return sum;
}

double remainder_bound(const SpdMatrix& a, const SymMatrix& h, int n,
                       NormKind kind) {
  if (n < 0) {
    throw std::invalid_argument("remainder_bound: negative order");
  }
  require_gate_not_failed(a, h);
  const double k_factor = norm_bound_factor(kind, a.dim());
  const double norm_h = norm(h, kind);
  const double cn = static_cast<double>(catalan(n));
  return std::pow(k_factor, n) * (n + 1) * cn * std::ldexp(1.0, -2 * n) *
         std::pow(a.lambda_min(), -(n + 0.5)) * std::pow(norm_h, n + 1);
}

double ando_hemmen_bound(const SpdMatrix& a, const SpdMatrix& b,
                         NormKind kind) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("ando_hemmen_bound: dimension mismatch");
  }
  const double denom = std::sqrt(a.lambda_min()) + std::sqrt(b.lambda_min());
  return norm(a.sym() - b.sym(), kind) / denom;
}

TaylorReport report(const SymMatrix& a, const SymMatrix& h, int n,
                    NormKind kind) {
  if (a.dim() != h.dim()) {
    throw std::invalid_argument("report: dimension mismatch");
  }
  if (n < 0) {
    throw std::invalid_argument("report: negative order");
  }
  if (n > kMaxDerivativeOrder) {
    throw OrderTooLarge("report: order " + std::to_string(n) +
                        " exceeds the supported maximum " +
                        std::to_string(kMaxDerivativeOrder));
  }

  TaylorReport rep;
  rep.dim = a.dim();
  rep.order = n;
  rep.kind = kind;

  const PerturbationGate g = gate(a, h);
  rep.gate = g.verdict;
  rep.lambda_min_a = g.lambda_min_a;
  rep.norm_h = norm(h, kind);
  if (g.verdict != GateVerdict::strict) {
    // No certified approximation without the strict hypothesis; the report
    // still documents what was measured.
    return rep;
  }

  const SpdMatrix A = assert_spd(a);
  const SpdMatrix B = assert_spd(a + h);

  // The stack is built once even for n = 0 so the report always carries the
  // first-order solver residual as a quality indicator.
  const DerivativeStack stack = derivative_stack(A, h, std::max(n, 1));
  SymMatrix approx = principal_sqrt(A).sym();
  for (int k = 1; k <= n; ++k) approx = approx + stack.s(k);
  SymMatrix truth = principal_sqrt(B).sym();

  rep.actual_error = norm(truth - approx, kind);
  rep.remainder = remainder_bound(A, h, n, kind);
  rep.bound_satisfied =
      *rep.actual_error <= *rep.remainder * (1.0 + kBoundSlack);
  rep.ando_hemmen = ando_hemmen_bound(A, B, kind);
  rep.sylvester_residual = stack.sylvester_residual;
  rep.approx = std::move(approx);
  rep.truth = std::move(truth);
  return rep;
}

std::string to_json(const TaylorReport& rep) {
  JsonWriter w;
  w.field("dim", static_cast<std::int64_t>(rep.dim));
  w.field("order", static_cast<std::int64_t>(rep.order));
  w.field("norm", std::string(norm_kind_name(rep.kind)));
  w.field("lambda_min_A", rep.lambda_min_a);
  w.field("norm_H", rep.norm_h);
  if (rep.actual_error) w.field("actual_error", *rep.actual_error);
  if (rep.remainder) w.field("remainder_bound", *rep.remainder);
  if (rep.bound_satisfied) w.field("bound_satisfied", *rep.bound_satisfied);
  w.field("gate", std::string(gate_verdict_name(rep.gate)));
  if (rep.ando_hemmen) w.field("ando_hemmen_bound", *rep.ando_hemmen);
  if (rep.sylvester_residual) {
    w.field("sylvester_residual", *rep.sylvester_residual);
  }
  return w.str();
}

}  // namespace sqrtx
