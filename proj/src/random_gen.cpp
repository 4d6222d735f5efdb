#include "sqrtx/random_gen.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace sqrtx {

Matrix random_gaussian(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = normal(rng);
  }
  return g;
}

Matrix random_orthogonal(std::mt19937_64& rng, std::size_t dim) {
  // Householder QR of a Gaussian matrix; Q is assembled by applying the
  // reflectors to the identity. Fixing diag(R) > 0 makes the distribution
  // basis-invariant.
  Matrix a = random_gaussian(rng, dim);

  Matrix q = Matrix::identity(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    // Build the reflector v annihilating column k below the diagonal.
    double norm_sq = 0.0;
    for (std::size_t i = k; i < dim; ++i) norm_sq += a(i, k) * a(i, k);
    const double alpha = std::sqrt(norm_sq);
    if (alpha == 0.0) continue;
    const double pivot = a(k, k);
    const double beta = pivot >= 0.0 ? -alpha : alpha;

    std::vector<double> v(dim, 0.0);
    v[k] = pivot - beta;
    for (std::size_t i = k + 1; i < dim; ++i) v[i] = a(i, k);
    double v_sq = 0.0;
    for (std::size_t i = k; i < dim; ++i) v_sq += v[i] * v[i];
    if (v_sq == 0.0) continue;

    const auto apply = [&](Matrix& m) {
      // m <- (I - 2 v v^T / v^T v) m, touching rows k..dim-1 only.
      for (std::size_t j = 0; j < dim; ++j) {
        double dot = 0.0;
        for (std::size_t i = k; i < dim; ++i) dot += v[i] * m(i, j);
        const double scale = 2.0 * dot / v_sq;
        for (std::size_t i = k; i < dim; ++i) m(i, j) -= scale * v[i];
      }
    };
    apply(a);
    apply(q);
  }
  // Now q is the accumulated product of reflectors and q * original = R.
  // The orthogonal factor is q^T; flipping the columns where R's diagonal
  // came out negative fixes the sign convention.
  Matrix u(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double sign = a(i, i) < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < dim; ++j) u(j, i) = sign * q(i, j);
  }
  return u;
}

SpdMatrix random_spd(std::mt19937_64& rng, std::size_t dim, double lambda_lo,
                     double lambda_hi) {
  if (!(lambda_lo > 0.0) || lambda_hi < lambda_lo) {
    throw std::invalid_argument("random_spd: need 0 < lambda_lo <= lambda_hi");
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> eigs(dim);
  const double log_lo = std::log(lambda_lo);
  const double log_hi = std::log(lambda_hi);
  for (std::size_t i = 0; i < dim; ++i) {
    eigs[i] = std::exp(log_lo + (log_hi - log_lo) * unit(rng));
  }
  const Matrix u = random_orthogonal(rng, dim);
  Matrix scaled = u;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) scaled(i, k) *= eigs[k];
  }
  const SymMatrix a = SymMatrix::average(scaled * transpose(u));
  // Measured construction: reconstruction roundoff shifts the spectrum a
  // hair off the sampled values, so the checked path supplies the cache.
  return assert_spd(a);
}

SymMatrix random_direction(std::mt19937_64& rng, const SpdMatrix& a,
                           double rho) {
  if (!(rho > 0.0)) {
    throw std::invalid_argument("random_direction: rho must be positive");
  }
  const SymMatrix g = random_sym(rng, a.dim());
  const double scale = norm(g, NormKind::spectral);
  if (scale == 0.0) {
    throw std::invalid_argument("random_direction: degenerate draw");
  }
  return (rho * a.lambda_min() / scale) * g;
}

SymMatrix random_sym(std::mt19937_64& rng, std::size_t dim) {
  return SymMatrix::average(random_gaussian(rng, dim));
}

}  // namespace sqrtx
