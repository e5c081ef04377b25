#include <cstdlib>
#include <string>

#include "oscopt/errors.hpp"
#include "oscopt/kernels.hpp"

namespace oscopt::kernels {

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Kernels& active_kernels() {
  static const Kernels& selected = []() -> const Kernels& {
    if (const char* env = std::getenv("OSCOPT_KERNEL")) {
      const std::string choice(env);
      if (choice == "scalar") return scalar_kernels();
#if defined(__x86_64__) || defined(_M_X64)
      if (choice == "avx2") {
        if (!avx2_available()) {
          throw ValidationError("OSCOPT_KERNEL=avx2 requested but CPU lacks AVX2/FMA");
        }
        return avx2_kernels();
      }
#endif
      throw ValidationError("unknown OSCOPT_KERNEL value: " + choice);
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_available()) return avx2_kernels();
#endif
    return scalar_kernels();
  }();
  return selected;
}

}  // namespace oscopt::kernels
