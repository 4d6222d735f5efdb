#pragma once

#include <stdexcept>
#include <string>

namespace sqrtx {

// Base class for everything this library throws on purpose. Callers that
// only want "did it work" can catch this one type; the CLI maps the
// subclasses below onto distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input file or option could not be interpreted.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A matrix that must be symmetric deviates from its transpose by more than
// the documented tolerance. Carries the worst entry-wise deviation.
class NotSymmetric : public Error {
 public:
  NotSymmetric(double deviation, const std::string& what)
      : Error(what), deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

// Symmetric matrix failed the positive-definiteness check. Carries the
// offending smallest eigenvalue so callers can report it.
class NotPositiveDefinite : public Error {
 public:
  NotPositiveDefinite(double lambda_min, const std::string& what)
      : Error(what), lambda_min_(lambda_min) {}
  double lambda_min() const { return lambda_min_; }

 private:
  double lambda_min_;
};

// The perturbation check that guards Taylor evaluation rejected the pair
// (A, H): neither endpoint positivity nor the eigenvalue margin held.
class GateFailed : public Error {
 public:
  using Error::Error;
};

// Derivative order beyond the supported range (the combinatorial
// coefficients are tabulated exactly only up to a fixed cap).
class OrderTooLarge : public Error {
 public:
  using Error::Error;
};

// The iterative eigensolver did not reach its convergence threshold within
// the sweep budget. Carries the remaining off-diagonal mass.
class EigenFailure : public Error {
 public:
  EigenFailure(double off_diagonal, const std::string& what)
      : Error(what), off_diagonal_(off_diagonal) {}
  double off_diagonal() const { return off_diagonal_; }

 private:
  double off_diagonal_;
};

}  // namespace sqrtx
