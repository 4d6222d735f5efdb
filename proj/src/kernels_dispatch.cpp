#include <cstdlib>
#include <string>

#include "sqrtx/errors.hpp"
#include "sqrtx/kernels.hpp"

namespace sqrtx::kernels {
namespace {

const KernelTable& resolve() {
  const char* env = std::getenv("SQRTX_KERNELS");
  const std::string mode = env ? env : "auto";
  if (mode == "scalar") return scalar_kernels();
  if (mode == "avx2") {
    const KernelTable* wide = avx2_kernels();
    if (wide == nullptr) {
      throw Error("SQRTX_KERNELS=avx2 but AVX2 kernels are unavailable");
    }
    return *wide;
  }
  if (mode != "auto") {
    throw Error("unrecognised SQRTX_KERNELS value '" + mode +
                "' (expected scalar, avx2 or auto)");
  }
  const KernelTable* wide = avx2_kernels();
  return wide ? *wide : scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() {
  // Resolved once; all threads see the same table afterwards.
  static const KernelTable& table = resolve();
  return table;
}

}  // namespace sqrtx::kernels
