#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "sqrtx/errors.hpp"
#include "sqrtx/oracles.hpp"
#include "sqrtx/random_gen.hpp"
#include "sqrtx/sqrt_frechet.hpp"
#include "test_support.hpp"

using namespace sqrtx;
using test_support::rel_diff_fro;
using test_support::scalar_sym;
using test_support::sym_from;

namespace {

SpdMatrix spd_from_diag(std::initializer_list<double> d) {
  return assert_spd(SymMatrix::diagonal(std::vector<double>(d)));
}

}  // namespace

TEST_SUITE("sqrt-frechet") {
  TEST_CASE("principal_sqrt of a diagonal matrix") {
    const SpdMatrix s = principal_sqrt(spd_from_diag({4.0, 9.0}));
    CHECK(s.sym()(0, 0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(s.sym()(1, 1) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(std::abs(s.sym()(0, 1)) <= 1e-15);
  }

  TEST_CASE("principal_sqrt of the identity is the identity") {
    const SpdMatrix s = principal_sqrt(assert_spd(SymMatrix::identity(5)));
    CHECK(test_support::max_abs_diff(s.sym(), SymMatrix::identity(5)) <=
          1e-15);
  }

  TEST_CASE("principal_sqrt squares back to its input") {
    const SpdMatrix a = assert_spd(sym_from(2, {2.0, 1.0, 1.0, 2.0}));
    const SpdMatrix s = principal_sqrt(a);
    const Matrix back = s.mat() * s.mat();
    CHECK(frobenius_norm(back - a.mat()) <= 1e-12 * frobenius_norm(a.mat()));
  }

  TEST_CASE("principal_sqrt residual across random instances") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + static_cast<std::size_t>(trial % 12);
      const SpdMatrix a = random_spd(rng, r, 0.1, 10.0);
      const SpdMatrix s = principal_sqrt(a);
      const double resid = frobenius_norm(s.mat() * s.mat() - a.mat());
      CHECK(resid <= 1e-10 * frobenius_norm(a.mat()));
      // The cached smallest eigenvalue is the root of the input's.
      CHECK(s.lambda_min() ==
            doctest::Approx(std::sqrt(a.lambda_min())).epsilon(1e-12));
    }
  }

  TEST_CASE("sylvester solve with scaled-identity coefficient") {
    // S = 2I makes the equation 4X = H entrywise.
    const SpdMatrix s = spd_from_diag({2.0, 2.0});
    const SymMatrix h = sym_from(2, {1.0, 3.0, 3.0, -2.0});
    const SymMatrix x = sylvester_sqrt_solve(s, h);
    CHECK(rel_diff_fro(x, 0.25 * h) <= 1e-15);
  }

  TEST_CASE("sylvester solve uses the eigenvalue-sum divisor") {
    const SpdMatrix s = spd_from_diag({1.0, 2.0});
    const SymMatrix h = sym_from(2, {0.0, 1.0, 1.0, 0.0});
    const SymMatrix x = sylvester_sqrt_solve(s, h);
    CHECK(x(0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(x(0, 0) == doctest::Approx(0.0));
    CHECK(x(1, 1) == doctest::Approx(0.0));
  }

  TEST_CASE("sylvester residual stays tiny on random instances") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + static_cast<std::size_t>(trial % 20);
      const SpdMatrix a = random_spd(rng, r, 0.1, 10.0);
      const SpdMatrix s = principal_sqrt(a);
      const SymMatrix h = random_sym(rng, r);
      const SylvesterSolver solver(s);
      const SymMatrix x = solver.solve(h);
      CHECK(solver.relative_residual(h, x) <= 1e-10);
    }
  }

  TEST_CASE("frechet_first fixed points") {
    const SymMatrix h = sym_from(2, {1.0, 2.0, 2.0, 5.0});
    SUBCASE("identity base gives H/2") {
      const SpdMatrix a = assert_spd(SymMatrix::identity(2));
      CHECK(rel_diff_fro(frechet_first(a, h), 0.5 * h) <= 1e-14);
    }
    SUBCASE("4I base gives H/4") {
      const SpdMatrix a = spd_from_diag({4.0, 4.0});
      CHECK(rel_diff_fro(frechet_first(a, h), 0.25 * h) <= 1e-14);
    }
    SUBCASE("scalar base differentiates sqrt") {
      const SpdMatrix a = assert_spd(scalar_sym(9.0));
      const SymMatrix d = frechet_first(a, scalar_sym(1.0));
      CHECK(d(0, 0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    }
  }

  TEST_CASE("derivative stack matches the scalar closed form termwise") {
    const double a0 = 1.7;
    const double h0 = 0.6;
    const SpdMatrix a = assert_spd(scalar_sym(a0));
    const DerivativeStack stack = derivative_stack(a, scalar_sym(h0), 8);
    for (int k = 1; k <= 8; ++k) {
      const double expected = scalar_closed_form(a0, h0, k);
      CHECK(stack.s(k)(0, 0) ==
            doctest::Approx(expected).epsilon(1e-12));
    }
    SUBCASE("spot values at a = 1, h = 1") {
      const DerivativeStack unit =
          derivative_stack(assert_spd(scalar_sym(1.0)), scalar_sym(1.0), 3);
      CHECK(unit.s(1)(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
      CHECK(unit.s(2)(0, 0) == doctest::Approx(-0.125).epsilon(1e-14));
      CHECK(unit.s(3)(0, 0) == doctest::Approx(0.0625).epsilon(1e-13));
    }
  }

  TEST_CASE("identity-direction stack reduces to binomial coefficients") {
    // A = I, H = I commute, so every term is binom(1/2, k) I.
    const SpdMatrix a = assert_spd(SymMatrix::identity(3));
    const DerivativeStack stack =
        derivative_stack(a, SymMatrix::identity(3), 5);
    for (int k = 1; k <= 5; ++k) {
      const double coeff = scalar_closed_form(1.0, 1.0, k);
      CHECK(rel_diff_fro(stack.s(k),
                         coeff * SymMatrix::identity(3)) <= 1e-12);
    }
  }

  TEST_CASE("commuting diagonal case is the scalar formula entrywise") {
    const SpdMatrix a = spd_from_diag({4.0, 4.0});
    const SymMatrix h = SymMatrix::diagonal(std::vector<double>{1.0, -1.0});
    const DerivativeStack stack = derivative_stack(a, h, 4);
    for (int k = 1; k <= 4; ++k) {
      CHECK(stack.s(k)(0, 0) ==
            doctest::Approx(scalar_closed_form(4.0, 1.0, k)).epsilon(1e-13));
      CHECK(stack.s(k)(1, 1) ==
            doctest::Approx(scalar_closed_form(4.0, -1.0, k)).epsilon(1e-13));
      CHECK(std::abs(stack.s(k)(0, 1)) <= 1e-14);
    }
  }

  TEST_CASE("second derivative agrees with its product formula") {
    // The order-2 term can be written without the recursion: the second
    // derivative applied twice to H equals -2 L(L(H)^2) with L the first
    // derivative map. Both routes must coincide.
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t r = 2 + static_cast<std::size_t>(trial % 6);
      const SpdMatrix a = random_spd(rng, r, 0.5, 5.0);
      const SymMatrix h = random_sym(rng, r);
      const DerivativeStack stack = derivative_stack(a, h, 2);

      const SymMatrix x1 = frechet_first(a, h);
      const SymMatrix x1_sq = SymMatrix::average(x1.mat() * x1.mat());
      const SymMatrix direct = -2.0 * frechet_first(a, x1_sq);
      CHECK(rel_diff_fro(2.0 * stack.s(2), direct) <= 1e-12);
    }
  }

  TEST_CASE("stack orders are validated") {
    const SpdMatrix a = assert_spd(SymMatrix::identity(2));
    const SymMatrix h = SymMatrix::identity(2);
    CHECK_THROWS_AS(derivative_stack(a, h, 0), std::invalid_argument);
    CHECK_THROWS_AS(derivative_stack(a, h, 31), OrderTooLarge);
    CHECK_NOTHROW(derivative_stack(a, h, 30));
  }

  TEST_CASE("scaled terms obey the a priori norm bound") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t r = 1 + static_cast<std::size_t>(trial % 8);
      const SpdMatrix a = random_spd(rng, r, 0.1, 10.0);
      const SymMatrix h = random_direction(rng, a, 0.4);
      const DerivativeStack stack = derivative_stack(a, h, 6);
      for (int k = 1; k <= 6; ++k) {
        for (const NormKind kind :
             {NormKind::spectral, NormKind::frobenius}) {
          const double k_factor = norm_bound_factor(kind, r);
          const double bound = scaled_term_bound(k, a.lambda_min(), k_factor) *
                               std::pow(norm(h, kind), k);
          CHECK(norm(stack.s(k), kind) <= bound * (1.0 + 1e-8));
        }
      }
    }
  }

  TEST_CASE("scalar saturation attains the bound exactly") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> unif(0.2, 5.0);
    for (int trial = 0; trial < 25; ++trial) {
      const double a0 = unif(rng);
      const double h0 = 0.5 * a0 * (trial % 2 == 0 ? 1.0 : -1.0);
      const SpdMatrix a = assert_spd(scalar_sym(a0));
      const DerivativeStack stack = derivative_stack(a, scalar_sym(h0), 7);
      for (int k = 1; k <= 7; ++k) {
        const double bound =
            scaled_term_bound(k, a0, 1.0) * std::pow(std::abs(h0), k);
        CHECK(std::abs(stack.s(k)(0, 0)) ==
              doctest::Approx(bound).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("polarized second derivative") {
    std::mt19937_64 rng(53);
    const SpdMatrix a = random_spd(rng, 5, 0.5, 5.0);
    const SymMatrix h1 = random_sym(rng, 5);
    const SymMatrix h2 = random_sym(rng, 5);

    SUBCASE("diagonal evaluation matches the stack") {
      const SymMatrix bi = frechet_second_bidirectional(a, h1, h1);
      const DerivativeStack stack = derivative_stack(a, h1, 2);
      CHECK(rel_diff_fro(bi, 2.0 * stack.s(2)) <= 1e-12);
    }

    SUBCASE("zero direction annihilates") {
      const SymMatrix z = SymMatrix::zero(5);
      const SymMatrix bi = frechet_second_bidirectional(a, h1, z);
      CHECK(frobenius_norm(bi) <= 1e-12 * frobenius_norm(h1));
    }

    SUBCASE("symmetric in its arguments") {
      const SymMatrix b12 = frechet_second_bidirectional(a, h1, h2);
      const SymMatrix b21 = frechet_second_bidirectional(a, h2, h1);
      CHECK(rel_diff_fro(b12, b21) <= 1e-12);
    }

    SUBCASE("bilinear in each argument") {
      const SymMatrix lhs =
          frechet_second_bidirectional(a, h1, add_scaled(h2, 2.5, h1));
      const SymMatrix rhs =
          frechet_second_bidirectional(a, h1, h2) +
          2.5 * frechet_second_bidirectional(a, h1, h1);
      CHECK(rel_diff_fro(lhs, rhs) <= 1e-10);
    }
  }

  TEST_CASE("catalan numbers by closed form and recursion") {
    const std::vector<std::int64_t> expected = {1,   1,    2,    5,    14,
                                                42,  132,  429,  1430, 4862,
                                                16796};
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(catalan(static_cast<int>(i)) == expected[i]);
    }
    const CatalanTable table = catalan_table(30);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(table.at(static_cast<int>(i)) == expected[i]);
    }
    // The convolution at index 5: sum of C_p C_q over p + q = 4.
    std::int64_t conv = 0;
    for (int p = 0; p <= 4; ++p) conv += catalan(p) * catalan(4 - p);
    CHECK(conv == 42);
    // Largest exact entry.
    CHECK(table.at(30) == 3814986502092304LL);
    CHECK_THROWS_AS(catalan(31), OrderTooLarge);
    CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
  }

  TEST_CASE("derivative norm bound closed-form values") {
    CHECK(derivative_norm_bound(0, 1.0, 1.0) == doctest::Approx(0.5));
    CHECK(derivative_norm_bound(1, 1.0, 1.0) == doctest::Approx(0.25));
    CHECK(derivative_norm_bound(2, 1.0, 1.0) == doctest::Approx(0.375));
    // Scalar derivatives of sqrt at a: the (n+1)-st derivative magnitude.
    // |d^2/da^2 sqrt(a)| = 1/4 at a = 1, |d^3| = 3/8.
    CHECK(derivative_norm_bound(1, 4.0, 1.0) ==
          doctest::Approx(0.25 * std::pow(4.0, -1.5)));
    // Frobenius factor enters as K^n.
    CHECK(derivative_norm_bound(2, 1.0, 2.0) == doctest::Approx(4 * 0.375));
  }

  TEST_CASE("finite differences converge at second order to the stack") {
    // The error model is c_trunc eps^2 + c_round eps^{-k}; the window must
    // sit where truncation dominates, which for IEEE doubles depends on k.
    // Grids start at the standard balance point and scale up from there.
    std::mt19937_64 rng(59);
    const SpdMatrix a = random_spd(rng, 4, 0.5, 5.0);
    const SymMatrix h = random_direction(rng, a, 0.5);
    const DerivativeStack stack = derivative_stack(a, h, 3);

    for (int k = 1; k <= 3; ++k) {
      double factorial = 1.0;
      for (int j = 2; j <= k; ++j) factorial *= j;
      const SymMatrix target = factorial * stack.s(k);

      const double base = default_fd_step(a, h, k);
      std::vector<double> steps;
      std::vector<double> errors;
      for (const double mult : {16.0, 32.0, 64.0, 128.0, 256.0}) {
        const double eps = base * mult;
        const SymMatrix est = finite_difference(a, h, k, eps);
        steps.push_back(eps);
        errors.push_back(frobenius_norm(est - target));
      }
      const double slope = test_support::log_log_slope(steps, errors);
      CHECK(slope >= 1.7);
      CHECK(slope <= 2.3);
    }
  }
}
