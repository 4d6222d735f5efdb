#include "sqrtx/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "sqrtx/errors.hpp"
#include "sqrtx/kernels.hpp"

namespace sqrtx {
namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) sum += a(i, j) * a(i, j);
  }
  return std::sqrt(2.0 * sum);
}

}  // namespace

EigenDecomposition eig_sym(const SymMatrix& input) {
  const std::size_t n = input.dim();
  Matrix a = input.mat();
  // w accumulates the transposed eigenvector matrix: row k of w is the k-th
  // eigenvector. Keeping rows contiguous lets the rotation kernel work on
  // whole cache lines instead of strided columns.
  Matrix w = Matrix::identity(n);
  const auto& kern = kernels::active_kernels();

  const double tol =
      static_cast<double>(n) * std::numeric_limits<double>::epsilon() *
      frobenius_norm(input);

  double off = off_diagonal_norm(a);
  int sweep = 0;
  for (; sweep < kMaxSweeps && off > tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        // After a few sweeps, rotations whose target is already negligible
        // against both diagonal entries are skipped outright.
        const double tiny = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(a(p, p)) + tiny == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + tiny == std::abs(a(q, q))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        if (apq == 0.0) continue;

        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = a(i, p);
          const double aiq = a(i, q);
          a(i, p) = aip - s * (aiq + tau * aip);
          a(p, i) = a(i, p);
          a(i, q) = aiq + s * (aip - tau * aiq);
          a(q, i) = a(i, q);
        }
        kern.rot2(w.row(p).data(), w.row(q).data(), n, c, s);
      }
    }
    off = off_diagonal_norm(a);
  }
  if (off > tol) {
    throw EigenFailure(off, "eigensolver did not converge in " +
                                std::to_string(kMaxSweeps) +
                                " sweeps; off-diagonal mass " +
                                std::to_string(off));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&a](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.basis = Matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.basis(i, k) = w(order[k], i);
  }
  return out;
}

double lambda_min(const SymMatrix& a) {
  return eig_sym(a).eigenvalues.front();
}

double norm(const SymMatrix& a, NormKind kind) {
  if (kind == NormKind::frobenius) return frobenius_norm(a);
  if (a.dim() == 0) return 0.0;
  const EigenDecomposition ed = eig_sym(a);
  return std::max(std::abs(ed.eigenvalues.front()),
                  std::abs(ed.eigenvalues.back()));
}

double spd_threshold(std::size_t dim, double spectral_norm) {
  return static_cast<double>(dim) * std::numeric_limits<double>::epsilon() *
         spectral_norm;
}

SpdMatrix SpdMatrix::from_eigen(SymMatrix base, EigenDecomposition eig) {
  SpdMatrix out;
  out.lambda_min_ = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
  out.base_ = std::move(base);
  out.eig_ = std::move(eig);
  return out;
}

SpdMatrix assert_spd(const SymMatrix& a) {
  EigenDecomposition ed = eig_sym(a);
  const double lo = ed.eigenvalues.empty() ? 0.0 : ed.eigenvalues.front();
  const double hi_abs =
      ed.eigenvalues.empty()
          ? 0.0
          : std::max(std::abs(ed.eigenvalues.front()),
                     std::abs(ed.eigenvalues.back()));
  if (a.dim() == 0 || lo <= spd_threshold(a.dim(), hi_abs)) {
    throw NotPositiveDefinite(
        lo, "matrix is not positive definite: smallest eigenvalue " +
                std::to_string(lo));
  }
  return SpdMatrix::from_eigen(a, std::move(ed));
}

}  // namespace sqrtx
