#pragma once

#include <cstdint>
#include <random>

#include "sqrtx/eigen.hpp"
#include "sqrtx/matrix.hpp"
#include "sqrtx/sym_matrix.hpp"

namespace sqrtx {

// Deterministic test-instance generation. Everything is a pure function of
// the generator state, so a fixed seed reproduces a run exactly.

// Square matrix of independent standard normal entries.
Matrix random_gaussian(std::mt19937_64& rng, std::size_t dim);

// Haar-ish orthogonal matrix from the QR factorisation (Householder) of a
// Gaussian draw, with the sign convention that makes R's diagonal positive.
Matrix random_orthogonal(std::mt19937_64& rng, std::size_t dim);

// SPD matrix with eigenvalues drawn log-uniformly from [lambda_lo,
// lambda_hi] in a random orthogonal basis. The spectrum is what the bounds
// under test depend on, so it is the controlled quantity.
SpdMatrix random_spd(std::mt19937_64& rng, std::size_t dim, double lambda_lo,
                     double lambda_hi);

// Symmetrised Gaussian direction rescaled to spectral norm exactly
// rho * lambda_min(a); rho < 1 keeps A + H inside the positive cone.
SymMatrix random_direction(std::mt19937_64& rng, const SpdMatrix& a,
                           double rho);

// Plain symmetrised Gaussian, no scaling.
SymMatrix random_sym(std::mt19937_64& rng, std::size_t dim);

}  // namespace sqrtx
