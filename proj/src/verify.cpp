#include "sqrtx/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "sqrtx/json_writer.hpp"
#include "sqrtx/random_gen.hpp"
#include "sqrtx/taylor.hpp"

namespace sqrtx {
namespace {

constexpr double kBoundSlack = 1e-8;
constexpr double kOracleTolerance = 1e-6;
constexpr double kSaturationTolerance = 1e-12;

struct CaseChecker {
  const RunConfig& config;
  VerifySummary& summary;

  void check(bool ok) {
    if (!ok) ++summary.failures;
  }

  void run_case(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> dim_dist(1, config.dim_max);
    const std::size_t dim = dim_dist(rng);
    const SpdMatrix a =
        random_spd(rng, dim, config.lambda_lo, config.lambda_hi);
    const SymMatrix h = random_direction(rng, a, config.rho);

    // rho < 1 keeps both endpoints positive, so anything but a strict
    // verdict is itself a defect worth flagging.
    const PerturbationGate g = gate(a.sym(), h);
    check(g.verdict == GateVerdict::strict);
    if (g.verdict == GateVerdict::failed) return;

    const SpdMatrix b = assert_spd(a.sym() + h);
    const SymMatrix sqrt_a = principal_sqrt(a).sym();
    const SymMatrix sqrt_b = principal_sqrt(b).sym();

    // Scalar instances drive the saturation check one order deeper.
    const int stack_order =
        dim == 1 ? std::max(config.max_order + 1, 7) : config.max_order;
    const DerivativeStack stack =
        derivative_stack(a, h, std::max(stack_order, 1));
    check(stack.sylvester_residual <= 1e-10);

    bound_domination(a, h, sqrt_a, sqrt_b, stack);
    if (dim == 1) scalar_saturation(a, h, stack);
    if (dim <= config.oracle_dim_cap) oracle_agreement(a, h, stack);
    ando_hemmen(a, b, sqrt_a, sqrt_b);
  }

  void bound_domination(const SpdMatrix& a, const SymMatrix& h,
                        const SymMatrix& sqrt_a, const SymMatrix& sqrt_b,
                        const DerivativeStack& stack) {
    SymMatrix approx = sqrt_a;
    for (int n = 0; n <= config.max_order; ++n) {
      if (n >= 1) approx = approx + stack.s(n);
      const SymMatrix err = sqrt_b - approx;
      for (const NormKind kind : {NormKind::spectral, NormKind::frobenius}) {
        const double actual = norm(err, kind);
        const double bound =
            remainder_bound(a, h, n, kind) * config.bound_scale;
        if (bound > 0.0) {
          summary.max_bound_ratio =
              std::max(summary.max_bound_ratio, actual / bound);
        }
        check(actual <= bound * (1.0 + kBoundSlack));
      }
    }
  }

  void scalar_saturation(const SpdMatrix& a, const SymMatrix& h,
                         const DerivativeStack& stack) {
    // For 1x1 instances the derivative bound is attained exactly: |s_{n+1}|
    // equals the bound coefficient times |h|^{n+1}, and both equal the
    // closed-form Taylor coefficient of sqrt(a + h).
    const double a0 = a.sym()(0, 0);
    const double h0 = h(0, 0);
    const int top = std::min(stack.order(), 7);
    for (int k = 1; k <= top; ++k) {
      const double got = stack.s(k)(0, 0);
      const double closed = scalar_closed_form(a0, h0, k);
      check(std::abs(got - closed) <=
            kSaturationTolerance * std::abs(closed));
      const double bound = scaled_term_bound(k, a.lambda_min(), 1.0) *
                           std::pow(std::abs(h0), k);
      check(std::abs(std::abs(got) - bound) <=
            kSaturationTolerance * bound);
    }
  }

  void oracle_agreement(const SpdMatrix& a, const SymMatrix& h,
                        const DerivativeStack& stack) {
    const SymMatrix& via_sylvester = stack.s(1);
    const SymMatrix via_exp = lyapunov_quadrature(a, h, config.quad);
    const SymMatrix via_resolvent = resolvent_frechet(a, h, config.quad);
    const double scale = frobenius_norm(via_sylvester);
    if (scale == 0.0) return;
    const double d1 = frobenius_norm(via_sylvester - via_exp) / scale;
    const double d2 = frobenius_norm(via_sylvester - via_resolvent) / scale;
    const double d3 = frobenius_norm(via_exp - via_resolvent) / scale;
    const double worst = std::max({d1, d2, d3});
    summary.max_oracle_disagreement =
        std::max(summary.max_oracle_disagreement, worst);
    check(worst <= kOracleTolerance);
  }

  void ando_hemmen(const SpdMatrix& a, const SpdMatrix& b,
                   const SymMatrix& sqrt_a, const SymMatrix& sqrt_b) {
    const SymMatrix diff = sqrt_a - sqrt_b;
    for (const NormKind kind : {NormKind::spectral, NormKind::frobenius}) {
      const double actual = norm(diff, kind);
      const double bound = ando_hemmen_bound(a, b, kind);
      check(actual <= bound * (1.0 + kBoundSlack));
    }
  }
};

}  // namespace

VerifySummary run_verify(const RunConfig& config) {
  config.quad.validate();
  if (config.dim_max < 1) {
    throw std::invalid_argument("run_verify: dim_max must be >= 1");
  }
  if (!(config.rho > 0.0) || config.rho >= 1.0) {
    throw std::invalid_argument("run_verify: rho must lie in (0, 1)");
  }
  if (config.max_order < 0 || config.max_order >= kMaxDerivativeOrder) {
    throw std::invalid_argument("run_verify: max_order out of range");
  }
  if (config.cases < 0) {
    throw std::invalid_argument("run_verify: cases must be >= 0");
  }
  VerifySummary summary;
  summary.seed = config.seed;
  if (config.cases <= 0) return summary;

  std::mt19937_64 rng(config.seed);
  CaseChecker checker{config, summary};
  for (std::int64_t i = 0; i < config.cases; ++i) {
    checker.run_case(rng);
    ++summary.cases;
  }
  return summary;
}

std::string to_json(const VerifySummary& summary) {
  JsonWriter w;
  w.field("cases", summary.cases);
  w.field("failures", summary.failures);
  w.field("max_bound_ratio", summary.max_bound_ratio);
  w.field("max_oracle_disagreement", summary.max_oracle_disagreement);
  w.field("seed", static_cast<std::int64_t>(summary.seed));
  return w.str();
}

}  // namespace sqrtx
