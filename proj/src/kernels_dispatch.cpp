#include <cstdlib>
#include <string_view>

#include "randcert/kernels.hpp"

namespace randcert::kernels {

#if RANDCERT_HAVE_AVX2_TU
namespace detail {
const KernelSet& avx2_impl();
}
#endif

const KernelSet* avx2_kernels() {
#if RANDCERT_HAVE_AVX2_TU
  if (__builtin_cpu_supports("avx2")) return &detail::avx2_impl();
#endif
  return nullptr;
}

const KernelSet& active_kernels() {
  static const KernelSet& chosen = []() -> const KernelSet& {
    const char* env = std::getenv("RANDCERT_KERNELS");
    std::string_view want = env ? env : "";
    if (want == "scalar") return scalar_kernels();
    const KernelSet* avx2 = avx2_kernels();
    if (avx2 && (want.empty() || want == "avx2")) return *avx2;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace randcert::kernels
