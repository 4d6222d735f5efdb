#include "sqrtx/kernels.hpp"

// Reference kernels. Plain loops, no fused multiply-add (this translation
// unit is built with contraction disabled), accumulation order chosen so the
// wide variants can reproduce it exactly: mat_mul walks k in the middle loop
// and accumulates into the output row, which makes every c[i][j] a sum in
// ascending k order regardless of vector width.

namespace sqrtx::kernels {
namespace {

void mat_mul_scalar(const double* a, const double* b, double* c,
                    std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a[i * n + k];
      const double* bk = b + k * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += aik * bk[j];
    }
  }
}

void axpby_scalar(double alpha, const double* x, double beta, const double* y,
                  double* z, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) z[i] = alpha * x[i] + beta * y[i];
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

void rot2_scalar(double* x, double* y, std::size_t n, double c, double s) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

constexpr KernelTable kScalarTable = {
    "scalar",
    mat_mul_scalar,
    axpby_scalar,
    dot_scalar,
    rot2_scalar,
};

}  // namespace

const KernelTable& scalar_kernels() { return kScalarTable; }

}  // namespace sqrtx::kernels
