#pragma once

#include <cstddef>

namespace sqrtx::kernels {

// Dense double-precision inner loops shared by the matrix layer. Each entry
// point has a scalar reference implementation, plus optional wide variants
// selected once per process. The contract for wide variants is strict:
// mat_mul, axpby and rot2 must be bit-identical to the scalar kernels
// (same operation order per output element, no fused multiply-add), while
// dot may reassociate its reduction and is only held to a small relative
// tolerance. The equivalence tests enforce exactly this split.
struct KernelTable {
  const char* name;

  // c = a * b for row-major n x n matrices; c must not alias a or b.
  void (*mat_mul)(const double* a, const double* b, double* c, std::size_t n);

  // z[i] = alpha * x[i] + beta * y[i]; z may alias x or y.
  void (*axpby)(double alpha, const double* x, double beta, const double* y,
                double* z, std::size_t n);

  // Sum of x[i] * y[i].
  double (*dot)(const double* x, const double* y, std::size_t n);

  // Plane rotation applied to two rows in place:
  //   x[i] <- c * x[i] - s * y[i]
  //   y[i] <- s * x[i] + c * y[i]
  void (*rot2)(double* x, double* y, std::size_t n, double c, double s);
};

// Reference implementation; always available.
const KernelTable& scalar_kernels();

// AVX2 implementation, or nullptr when the build or the running CPU lacks
// the instruction set.
const KernelTable* avx2_kernels();

// The table every caller should use. Resolved on first use: honours the
// SQRTX_KERNELS environment variable ("scalar", "avx2" or "auto"), and
// otherwise picks the widest table the CPU supports. Requesting "avx2" on
// hardware without it throws.
const KernelTable& active_kernels();

}  // namespace sqrtx::kernels
