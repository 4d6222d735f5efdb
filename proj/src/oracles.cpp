#include "sqrtx/oracles.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sqrtx/errors.hpp"
#include "sqrtx/taylor.hpp"

namespace sqrtx {
namespace {

// Geometrically graded panel edges for [0, hi]: a first panel [0, lo]
// resolving the shortest feature scale, then ratios growing to hi. Uniform
// panels would need thousands of subdivisions to resolve integrands whose
// decay scale is orders of magnitude below the truncation horizon.
std::vector<double> graded_edges(double lo, double hi, int panels) {
  std::vector<double> edges;
  edges.reserve(static_cast<std::size_t>(panels) + 1);
  edges.push_back(0.0);
  if (panels == 1 || lo >= hi) {
    edges.push_back(hi);
    return edges;
  }
  edges.push_back(lo);
  const double ratio = std::pow(hi / lo, 1.0 / (panels - 1));
  double e = lo;
  for (int i = 2; i < panels; ++i) {
    e *= ratio;
    edges.push_back(e);
  }
  edges.push_back(hi);
  return edges;
}

// Accumulates weight * f(node) over all panels in ascending node order, so
// results do not depend on how callers might batch the evaluations.
template <typename F>
Matrix panel_quadrature(const std::vector<double>& edges,
                        const GaussLegendreRule& rule, std::size_t dim,
                        F&& integrand) {
  Matrix acc(dim);
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double mid = 0.5 * (edges[p] + edges[p + 1]);
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = mid + half * rule.nodes[i];
      acc = add_scaled(acc, half * rule.weights[i], integrand(x));
    }
  }
  return acc;
}

// Solves K * X = B for SPD K by Cholesky factorisation. Lives here rather
// than in the matrix layer because only the quadrature oracles need it; the
// primary routes are all spectral.
Matrix cholesky_solve(const Matrix& k, const Matrix& b) {
  const std::size_t n = k.dim();
  Matrix l(n);
  for (std::size_t j = 0; j < n; ++j) {
    double diag = k(j, j);
    for (std::size_t s = 0; s < j; ++s) diag -= l(j, s) * l(j, s);
    if (diag <= 0.0) {
      throw Error("cholesky_solve: matrix is not positive definite");
    }
    l(j, j) = std::sqrt(diag);
    for (std::size_t i = j + 1; i < n; ++i) {
      double v = k(i, j);
      for (std::size_t s = 0; s < j; ++s) v -= l(i, s) * l(j, s);
      l(i, j) = v / l(j, j);
    }
  }
  // Forward then backward substitution, one right-hand-side column at a
  // time: L y = b_col, L^T x = y.
  Matrix x(n);
  std::vector<double> y(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      double v = b(i, c);
      for (std::size_t s = 0; s < i; ++s) v -= l(i, s) * y[s];
      y[i] = v / l(i, i);
    }
    for (std::size_t i = n; i-- > 0;) {
      double v = y[i];
      for (std::size_t s = i + 1; s < n; ++s) v -= l(s, i) * x(s, c);
      x(i, c) = v / l(i, i);
    }
  }
  return x;
}

Matrix shifted(const SpdMatrix& a, double shift) {
  Matrix k = a.mat();
  for (std::size_t i = 0; i < k.dim(); ++i) k(i, i) += shift;
  return k;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (node_count < 8) {
    throw std::invalid_argument("QuadratureSpec: node_count must be >= 8");
  }
  if (exp_panels < 1 || resolvent_panels < 1 || segment_panels < 1) {
    throw std::invalid_argument("QuadratureSpec: panel counts must be >= 1");
  }
  if (exp_horizon <= 0.0 || resolvent_horizon <= 0.0) {
    throw std::invalid_argument("QuadratureSpec: horizons must be positive");
  }
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) {
    throw std::invalid_argument("gauss_legendre: need at least one node");
  }
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration on the Legendre recurrence from the Chebyshev guess.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double step = p1 / pp;
      z -= step;
      if (std::abs(step) < 1e-15) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = -z;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = z;
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

SymMatrix expm_sym(const SymMatrix& m) {
  constexpr int kSeriesTerms = 16;
  const double scale_norm = frobenius_norm(m);
  int squarings = 0;
  double factor = 1.0;
  while (scale_norm * factor > 0.5) {
    factor *= 0.5;
    ++squarings;
  }

  const SymMatrix scaled = factor * m;
  Matrix sum = Matrix::identity(m.dim());
  Matrix term = Matrix::identity(m.dim());
  for (int k = 1; k <= kSeriesTerms; ++k) {
    term = (1.0 / k) * (term * scaled.mat());
    sum = sum + term;
  }
  SymMatrix result = SymMatrix::average(sum);
  for (int s = 0; s < squarings; ++s) {
    result = SymMatrix::average(result.mat() * result.mat());
  }
  return result;
}

SymMatrix lyapunov_quadrature(const SpdMatrix& a, const SymMatrix& h,
                              const QuadratureSpec& q) {
  q.validate();
  if (h.dim() != a.dim()) {
    throw std::invalid_argument("lyapunov_quadrature: dimension mismatch");
  }
  const SpdMatrix root = principal_sqrt(a);
  const double decay = std::sqrt(a.lambda_min());
  const double horizon = q.exp_horizon / decay;
  // Shortest feature scale of exp(-t sqrt(A)): the largest root eigenvalue.
  const double fastest = std::sqrt(a.eigen().eigenvalues.back());
  const double first_edge = std::min(horizon, 1.0 / (8.0 * fastest));

  const GaussLegendreRule rule = gauss_legendre(q.node_count);
  const auto edges = graded_edges(first_edge, horizon, q.exp_panels);
  Matrix acc = panel_quadrature(edges, rule, a.dim(), [&](double t) {
    const SymMatrix e = expm_sym(-t * root.sym());
    return e.mat() * (h.mat() * e.mat());
  });
  return SymMatrix::average(acc);
}

SymMatrix resolvent_sqrt(const SpdMatrix& a, const QuadratureSpec& q) {
  q.validate();
  const double top = a.eigen().eigenvalues.back();
  const double upper = q.resolvent_horizon * std::sqrt(top);
  const double first_edge = std::min(upper, std::sqrt(a.lambda_min()) / 8.0);

  const GaussLegendreRule rule = gauss_legendre(q.node_count);
  const auto edges = graded_edges(first_edge, upper, q.resolvent_panels);
  Matrix acc = panel_quadrature(edges, rule, a.dim(), [&](double u) {
    return cholesky_solve(shifted(a, u * u), a.mat());
  });

  // Tail of the truncated integral in closed form: expanding the resolvent
  // for u > U gives alternating powers A^m / ((2m-1) U^{2m-1}); four terms
  // leave less than machine precision at the default horizon.
  Matrix tail(a.dim());
  Matrix power = a.mat();
  double u_pow = upper;
  for (int m = 1; m <= 4; ++m) {
    const double coeff = (m % 2 == 1 ? 1.0 : -1.0) / ((2 * m - 1) * u_pow);
    tail = add_scaled(tail, coeff, power);
    if (m < 4) {
      power = power * a.mat();
      u_pow *= upper * upper;
    }
  }

  const double two_over_pi = 2.0 / std::numbers::pi;
  return SymMatrix::average(
      add_scaled(two_over_pi * acc, two_over_pi, tail));
}

SymMatrix resolvent_frechet(const SpdMatrix& a, const SymMatrix& h,
                            const QuadratureSpec& q) {
  q.validate();
  if (h.dim() != a.dim()) {
    throw std::invalid_argument("resolvent_frechet: dimension mismatch");
  }
  const std::size_t dim = a.dim();
  const Matrix eye = Matrix::identity(dim);
  const double top = a.eigen().eigenvalues.back();
  const double upper = q.resolvent_horizon * std::sqrt(top);
  const double first_edge = std::min(upper, std::sqrt(a.lambda_min()) / 8.0);

  const GaussLegendreRule rule = gauss_legendre(q.node_count);
  const auto edges = graded_edges(first_edge, upper, q.resolvent_panels);
  Matrix acc = panel_quadrature(edges, rule, dim, [&](double u) {
    const Matrix res = cholesky_solve(shifted(a, u * u), eye);
    return (u * u) * (res * (h.mat() * res));
  });

  // Tail: the expanded integrand sums A^i H A^j over i + j = m with sign
  // (-1)^m and weight 1 / ((2m+1) U^{2m+1}).
  Matrix tail(dim);
  std::vector<Matrix> a_pow;
  a_pow.push_back(eye);
  for (int p = 1; p <= 3; ++p) a_pow.push_back(a_pow.back() * a.mat());
  double u_pow = upper;
  for (int m = 0; m <= 3; ++m) {
    Matrix pm(dim);
    for (int i = 0; i <= m; ++i) {
      pm = pm + a_pow[static_cast<std::size_t>(i)] *
                    (h.mat() * a_pow[static_cast<std::size_t>(m - i)]);
    }
    const double coeff = (m % 2 == 0 ? 1.0 : -1.0) / ((2 * m + 1) * u_pow);
    tail = add_scaled(tail, coeff, pm);
    u_pow *= upper * upper;
  }

  const double two_over_pi = 2.0 / std::numbers::pi;
  return SymMatrix::average(
      add_scaled(two_over_pi * acc, two_over_pi, tail));
}

SymMatrix finite_difference(const SpdMatrix& a, const SymMatrix& h, int k,
                            double eps) {
  if (k < 1 || k > 4) {
    throw std::invalid_argument(
        "finite_difference: stencil order must be in 1..4");
  }
  if (!(eps > 0.0)) {
    throw std::invalid_argument("finite_difference: step must be positive");
  }
  if (h.dim() != a.dim()) {
    throw std::invalid_argument("finite_difference: dimension mismatch");
  }

  const auto probe = [&](double offset) {
    const SymMatrix shifted_a = add_scaled(a.sym(), offset, h);
    try {
      return assert_spd(shifted_a);
    } catch (const NotPositiveDefinite& e) {
      throw GateFailed("finite_difference: step " + std::to_string(eps) +
                       " leaves the positive cone (lambda_min " +
                       std::to_string(e.lambda_min()) + ")");
    }
  };
  // Admissibility probe at +/- k*eps; by convexity this covers every
  // stencil node, all of which lie strictly inside that reach.
  const double reach = k * eps;
  probe(reach);
  probe(-reach);
  const auto sample = [&](double offset) -> SymMatrix {
    return principal_sqrt(probe(offset)).sym();
  };

  switch (k) {
    case 1: {
      const SymMatrix f1p = sample(eps);
      const SymMatrix f1m = sample(-eps);
      return (1.0 / (2.0 * eps)) * (f1p - f1m);
    }
    case 2: {
      const SymMatrix f1p = sample(eps);
      const SymMatrix center = principal_sqrt(a).sym();
      const SymMatrix f1m = sample(-eps);
      return (1.0 / (eps * eps)) * (f1p - 2.0 * center + f1m);
    }
    case 3: {
      const SymMatrix f2p = sample(2.0 * eps);
      const SymMatrix f1p = sample(eps);
      const SymMatrix f1m = sample(-eps);
      const SymMatrix f2m = sample(-2.0 * eps);
      return (1.0 / (2.0 * eps * eps * eps)) *
             (f2p - 2.0 * f1p + 2.0 * f1m - f2m);
    }
    default: {
      const SymMatrix f2p = sample(2.0 * eps);
      const SymMatrix f1p = sample(eps);
      const SymMatrix center = principal_sqrt(a).sym();
      const SymMatrix f1m = sample(-eps);
      const SymMatrix f2m = sample(-2.0 * eps);
      const double e4 = eps * eps * eps * eps;
      return (1.0 / e4) *
             (f2p - 4.0 * f1p + 6.0 * center - 4.0 * f1m + f2m);
    }
  }
}

double default_fd_step(const SpdMatrix& a, const SymMatrix& h, int k) {
  if (k < 1 || k > 4) {
    throw std::invalid_argument("default_fd_step: order must be in 1..4");
  }
  const double eps_mach = std::numeric_limits<double>::epsilon();
  const double h_norm = norm(h, NormKind::spectral);
  // Truncation grows like (eps ||H|| / lambda)^2 while roundoff decays like
  // eps^{-k}, so the balance point scales as lambda / ||H||; for H = 0 the
  // map is constant in eps and any small step works.
  if (h_norm == 0.0) return std::pow(eps_mach, 1.0 / (k + 2));
  return std::pow(eps_mach, 1.0 / (k + 2)) * a.lambda_min() / h_norm;
}

SymMatrix remainder_integral(const SpdMatrix& a, const SymMatrix& h, int n,
                             const QuadratureSpec& q) {
  q.validate();
  if (n < 0) {
    throw std::invalid_argument("remainder_integral: negative order");
  }
  if (h.dim() != a.dim()) {
    throw std::invalid_argument("remainder_integral: dimension mismatch");
  }
  const PerturbationGate g = gate(a.sym(), h);
  if (g.verdict != GateVerdict::strict) {
    throw GateFailed(
        "remainder_integral: segment endpoints must both be positive "
        "definite (gate verdict " +
        std::string(gate_verdict_name(g.verdict)) + ")");
  }

  const GaussLegendreRule rule = gauss_legendre(q.node_count);
  std::vector<double> edges(static_cast<std::size_t>(q.segment_panels) + 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    edges[i] = static_cast<double>(i) / q.segment_panels;
  }
  Matrix acc = panel_quadrature(edges, rule, a.dim(), [&](double eps) {
    const SpdMatrix at = assert_spd(add_scaled(a.sym(), eps, h));
    const SymMatrix s_next = derivative_stack(at, h, n + 1).s(n + 1);
    return std::pow(1.0 - eps, n) * s_next.mat();
  });
  return SymMatrix::average(static_cast<double>(n + 1) * acc);
}

double scalar_closed_form(double a, double h, int k) {
  if (!(a > 0.0)) {
    throw std::invalid_argument("scalar_closed_form: base must be positive");
  }
  if (k < 0) {
    throw std::invalid_argument("scalar_closed_form: negative order");
  }
  // binom(1/2, k) = product over j < k of (1/2 - j) / (j + 1).
  double binom = 1.0;
  for (int j = 0; j < k; ++j) binom *= (0.5 - j) / (j + 1);
  return binom * std::pow(a, 0.5 - k) * std::pow(h, k);
}

}  // namespace sqrtx
