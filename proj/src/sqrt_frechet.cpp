#include "sqrtx/sqrt_frechet.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "sqrtx/errors.hpp"

namespace sqrtx {
namespace {

void require_order_in_range(int n, int lo) {
  if (n < lo) {
    throw std::invalid_argument("derivative order must be at least " +
                                std::to_string(lo) + ", got " +
                                std::to_string(n));
  }
  if (n > kMaxDerivativeOrder) {
    throw OrderTooLarge("derivative order " + std::to_string(n) +
                        " exceeds the supported maximum " +
                        std::to_string(kMaxDerivativeOrder));
  }
}

double factorial_as_double(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

SpdMatrix principal_sqrt(const SpdMatrix& a) {
  const EigenDecomposition& ed = a.eigen();
  const std::size_t n = a.dim();

  std::vector<double> roots(n);
  for (std::size_t i = 0; i < n; ++i) roots[i] = std::sqrt(ed.eigenvalues[i]);

  // U diag(sqrt(d)) U^T, assembled as (U diag) * U^T.
  Matrix scaled = ed.basis;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) scaled(i, k) *= roots[k];
  }
  SymMatrix root = SymMatrix::average(scaled * transpose(ed.basis));

  // The root shares the eigenbasis of A with square-rooted eigenvalues, so
  // hand the factorisation over instead of recomputing it. Positivity of
  // the cached values is a theorem here, not a measurement.
  EigenDecomposition root_eig{ed.basis, std::move(roots)};
  return SpdMatrix::from_eigen(std::move(root), std::move(root_eig));
}

SylvesterSolver::SylvesterSolver(const SpdMatrix& s)
    : s_(s), basis_t_(transpose(s.eigen().basis)) {}

SymMatrix SylvesterSolver::solve(const SymMatrix& h) const {
  if (h.dim() != s_.dim()) {
    throw std::invalid_argument("SylvesterSolver: dimension mismatch");
  }
  const std::size_t n = s_.dim();
  const Matrix& u = s_.eigen().basis;
  const std::vector<double>& d = s_.eigen().eigenvalues;

  // G = U^T H U, then divide entrywise by d_i + d_j, then map back.
  Matrix g = basis_t_ * (h.mat() * u);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) /= d[i] + d[j];
  }
  return SymMatrix::average(u * (g * basis_t_));
}

double SylvesterSolver::relative_residual(const SymMatrix& h,
                                          const SymMatrix& x) const {
  const double scale = frobenius_norm(h);
  if (scale == 0.0) return 0.0;
  const Matrix sx = s_.mat() * x.mat();
  const Matrix residual = add_scaled(sx + transpose(sx), -1.0, h.mat());
  return frobenius_norm(residual) / scale;
}

SymMatrix sylvester_sqrt_solve(const SpdMatrix& s, const SymMatrix& h) {
  return SylvesterSolver(s).solve(h);
}

SymMatrix frechet_first(const SpdMatrix& a, const SymMatrix& h) {
  return sylvester_sqrt_solve(principal_sqrt(a), h);
}

DerivativeStack derivative_stack(const SpdMatrix& a, const SymMatrix& h,
                                 int n) {
  require_order_in_range(n, 1);
  if (h.dim() != a.dim()) {
    throw std::invalid_argument("derivative_stack: dimension mismatch");
  }

  const SpdMatrix root = principal_sqrt(a);
  const SylvesterSolver solver(root);

  DerivativeStack stack;
  stack.base = a;
  stack.direction = h;
  stack.scaled_terms.reserve(static_cast<std::size_t>(n));

  stack.scaled_terms.push_back(solver.solve(h));
  stack.sylvester_residual =
      solver.relative_residual(h, stack.scaled_terms.front());

  for (int order = 2; order <= n; ++order) {
    // sum over p + q = order - 2 of s_{p+1} s_{q+1}; symmetric through the
    // p <-> q pairing only, so average before solving.
    Matrix bracket(a.dim());
    for (int p = 0; p + 2 <= order; ++p) {
      const int q = order - 2 - p;
      bracket = bracket + stack.s(p + 1).mat() * stack.s(q + 1).mat();
    }
    stack.scaled_terms.push_back(
        solver.solve(-1.0 * SymMatrix::average(bracket)));
  }
  return stack;
}

SymMatrix frechet_second_bidirectional(const SpdMatrix& a, const SymMatrix& h1,
                                       const SymMatrix& h2) {
  if (h1.dim() != h2.dim() || h1.dim() != a.dim()) {
    throw std::invalid_argument(
        "frechet_second_bidirectional: dimension mismatch");
  }
  // Polarisation: the quadratic map g -> D2 phi(A).(g,g) = 2 s_2(g)
  // evaluated at h1 +/- h2 recovers the bilinear value. The two stacks
  // share nothing except the factorisation of a, which is cached on it.
  const SymMatrix plus = derivative_stack(a, h1 + h2, 2).s(2);
  const SymMatrix minus = derivative_stack(a, h1 - h2, 2).s(2);
  return add_scaled(0.5 * plus, -0.5, minus);
}

std::int64_t catalan(int n) {
  if (n < 0) {
    throw std::invalid_argument("catalan: negative index");
  }
  if (n > kMaxDerivativeOrder) {
    throw OrderTooLarge("catalan index " + std::to_string(n) +
                        " exceeds the exact-integer range (max " +
                        std::to_string(kMaxDerivativeOrder) + ")");
  }
  // binom(2n, n) / (n + 1), built as the product of (n + k) / k for
  // k = 1..n. Every prefix is itself a binomial coefficient, so the
  // division is exact at each step; the largest intermediate is
  // binom(60, 30) * 60, which fits in a signed 64-bit integer.
  std::int64_t b = 1;
  for (std::int64_t k = 1; k <= n; ++k) {
    b = b * (n + k) / k;
  }
  return b / (n + 1);
}

CatalanTable catalan_table(int max_n) {
  if (max_n < 0) {
    throw std::invalid_argument("catalan_table: negative index");
  }
  if (max_n > kMaxDerivativeOrder) {
    throw OrderTooLarge("catalan table size " + std::to_string(max_n) +
                        " exceeds the exact-integer range (max " +
                        std::to_string(kMaxDerivativeOrder) + ")");
  }
  CatalanTable table;
  table.values.resize(static_cast<std::size_t>(max_n) + 1);
  table.values[0] = 1;
  for (int k = 0; k < max_n; ++k) {
    // Convolution recursion, cross-checked against the closed form below.
    std::int64_t sum = 0;
    for (int p = 0; p <= k; ++p) sum += table.values[p] * table.values[k - p];
    table.values[static_cast<std::size_t>(k) + 1] = sum;
  }
  for (int k = 0; k <= max_n; ++k) {
    if (table.values[static_cast<std::size_t>(k)] != catalan(k)) {
      throw Error("catalan_table: recursion and closed form disagree at " +
                  std::to_string(k));
    }
  }
  return table;
}

double derivative_norm_bound(int n, double lambda_min, double k_factor) {
  if (n < 0) {
    throw std::invalid_argument("derivative_norm_bound: negative order");
  }
  if (!(lambda_min > 0.0)) {
    throw std::invalid_argument(
        "derivative_norm_bound: lambda_min must be positive");
  }
  const double cn = static_cast<double>(catalan(n));
  return std::pow(k_factor, n) * factorial_as_double(n + 1) * cn *
         std::ldexp(1.0, -(2 * n + 1)) *
         std::pow(lambda_min, -(n + 0.5));
}

double scaled_term_bound(int k, double lambda_min, double k_factor) {
  require_order_in_range(k, 1);
  return derivative_norm_bound(k - 1, lambda_min, k_factor) /
         factorial_as_double(k);
}

}  // namespace sqrtx
