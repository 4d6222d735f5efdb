#include "sqrtx/kernels.hpp"

// AVX2 kernels. Built with -mavx2 -ffp-contract=off when the compiler
// supports it; on other targets this file compiles to the nullptr stub at
// the bottom. The elementwise kernels and mat_mul mirror the scalar
// operation order exactly (separate multiply and add, ascending k), so they
// produce bit-identical results. dot keeps four independent lane
// accumulators and is therefore only numerically close, not identical.

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace sqrtx::kernels {

#if defined(__AVX2__)

namespace {

void mat_mul_avx2(const double* a, const double* b, double* c, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n; ++i) {
    double* ci = c + i * n;
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) _mm256_storeu_pd(ci + j, zero);
    for (; j < n; ++j) ci[j] = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a[i * n + k];
      const __m256d va = _mm256_set1_pd(aik);
      const double* bk = b + k * n;
      j = 0;
      for (; j + 4 <= n; j += 4) {
        __m256d acc = _mm256_loadu_pd(ci + j);
        const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(bk + j));
        _mm256_storeu_pd(ci + j, _mm256_add_pd(acc, prod));
      }
      for (; j < n; ++j) ci[j] += aik * bk[j];
    }
  }
}

void axpby_avx2(double alpha, const double* x, double beta, const double* y,
                double* z, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  const __m256d vb = _mm256_set1_pd(beta);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d tx = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
    const __m256d ty = _mm256_mul_pd(vb, _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(z + i, _mm256_add_pd(tx, ty));
  }
  for (; i < n; ++i) z[i] = alpha * x[i] + beta * y[i];
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d prod =
        _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    acc = _mm256_add_pd(acc, prod);
  }
  double lane[4];
  _mm256_storeu_pd(lane, acc);
  double sum = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

void rot2_avx2(double* x, double* y, std::size_t n, double c, double s) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xi = _mm256_loadu_pd(x + i);
    const __m256d yi = _mm256_loadu_pd(y + i);
    const __m256d nx =
        _mm256_sub_pd(_mm256_mul_pd(vc, xi), _mm256_mul_pd(vs, yi));
    const __m256d ny =
        _mm256_add_pd(_mm256_mul_pd(vs, xi), _mm256_mul_pd(vc, yi));
    _mm256_storeu_pd(x + i, nx);
    _mm256_storeu_pd(y + i, ny);
  }
  for (; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

constexpr KernelTable kAvx2Table = {
    "avx2",
    mat_mul_avx2,
    axpby_avx2,
    dot_avx2,
    rot2_avx2,
};

}  // namespace

const KernelTable* avx2_kernels() {
  return __builtin_cpu_supports("avx2") ? &kAvx2Table : nullptr;
}

#else  // !defined(__AVX2__)

const KernelTable* avx2_kernels() { return nullptr; }

#endif

}  // namespace sqrtx::kernels
