#include <cstdlib>
#include <string_view>

#include "qpr/simd/kernels.hpp"

namespace qpr::simd {

#if defined(QPR_HAVE_AVX2)
namespace avx2 {
extern const KernelTable kTable;
}
#endif
#if defined(QPR_HAVE_NEON)
namespace neon {
extern const KernelTable kTable;
}
#endif

const KernelTable* avx2_kernels() noexcept {
#if defined(QPR_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2::kTable : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_kernels() noexcept {
#if defined(QPR_HAVE_NEON)
  return &neon::kTable;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() noexcept {
  static const KernelTable& chosen = []() -> const KernelTable& {
    const char* env = std::getenv("QPR_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
    if (const KernelTable* k = avx2_kernels()) return *k;
    if (const KernelTable* k = neon_kernels()) return *k;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace qpr::simd
