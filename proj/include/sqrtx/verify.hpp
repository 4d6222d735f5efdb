#pragma once

#include <cstdint>
#include <string>

#include "sqrtx/oracles.hpp"

namespace sqrtx {

// Configuration of one batch verification run. Defaults match the standard
// suite; every field is overridable from the command line so failures can
// be reproduced in isolation from the recorded seed.
struct RunConfig {
  std::int64_t cases = 200;
  std::size_t dim_max = 10;
  double rho = 0.3;           // ||H||_2 as a fraction of lambda_min(A)
  std::uint64_t seed = 42;
  int max_order = 6;          // bound checks run orders 0..max_order
  double lambda_lo = 0.1;     // spectrum range for generated instances
  double lambda_hi = 10.0;
  std::size_t oracle_dim_cap = 8;  // quadrature oracles run up to this dim
  QuadratureSpec quad;

  // Multiplies every remainder bound before comparison. 1.0 for real runs;
  // smaller values let the test harness confirm that violations are
  // actually counted and reported.
  double bound_scale = 1.0;
};

struct VerifySummary {
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  double max_bound_ratio = 0.0;          // worst actual_error / bound seen
  double max_oracle_disagreement = 0.0;  // worst pairwise oracle mismatch
  std::uint64_t seed = 0;
};

// Runs the randomized invariant suite: remainder-bound domination over all
// orders and both norms, three-way first-derivative oracle agreement,
// exact scalar saturation for 1x1 instances, and the square-root Lipschitz
// bound. Cases are generated and checked sequentially from one seeded
// stream, so equal configs give equal summaries.
VerifySummary run_verify(const RunConfig& config);

// Fixed key order: cases, failures, max_bound_ratio,
// max_oracle_disagreement, seed.
std::string to_json(const VerifySummary& summary);

}  // namespace sqrtx
