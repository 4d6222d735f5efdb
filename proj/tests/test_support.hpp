#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "sqrtx/matrix.hpp"
#include "sqrtx/sym_matrix.hpp"

namespace test_support {

inline double max_abs_diff(const sqrtx::Matrix& a, const sqrtx::Matrix& b) {
  return sqrtx::max_abs(a - b);
}

inline double max_abs_diff(const sqrtx::SymMatrix& a,
                           const sqrtx::SymMatrix& b) {
  return sqrtx::max_abs(a - b);
}

inline double rel_diff_fro(const sqrtx::SymMatrix& a,
                           const sqrtx::SymMatrix& b) {
  const double scale = sqrtx::frobenius_norm(a);
  const double diff = sqrtx::frobenius_norm(a - b);
  return scale == 0.0 ? diff : diff / scale;
}

inline sqrtx::Matrix matrix_from(std::size_t dim,
                                 std::initializer_list<double> entries) {
  return sqrtx::Matrix(dim, std::vector<double>(entries));
}

inline sqrtx::SymMatrix sym_from(std::size_t dim,
                                 std::initializer_list<double> entries) {
  return sqrtx::symmetrize(matrix_from(dim, entries));
}

inline sqrtx::SymMatrix scalar_sym(double value) {
  return sym_from(1, {value});
}

// Least-squares slope of log(err) against log(eps); the convergence-order
// estimator used by the finite-difference tests.
inline double log_log_slope(const std::vector<double>& eps,
                            const std::vector<double>& err) {
  const std::size_t n = eps.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(eps[i]);
    const double y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  return (n * sxy - sx * sy) / denom;
}

}  // namespace test_support
