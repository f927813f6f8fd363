#include "nsf/core/kernels.hpp"

#include <cstdlib>

#include "nsf/core/types.hpp"

namespace nsf::kernels {
namespace {

const Backend* g_active = nullptr;

const Backend* select_from(const std::string& name) {
  if (name == "scalar") return &scalar_backend();
#if defined(__x86_64__)
  if (name == "avx2") {
    require(avx2_supported(), "NSF_SIMD=avx2 requested but CPU lacks AVX2");
    return &avx2_backend();
  }
  if (name == "auto" || name.empty())
    return avx2_supported() ? &avx2_backend() : &scalar_backend();
#else
  if (name == "auto" || name.empty()) return &scalar_backend();
#endif
  throw Error("unknown NSF_SIMD backend '" + name + "' (scalar|avx2|auto)");
}

}  // namespace

const Backend& active() {
  if (!g_active) {
    const char* env = std::getenv("NSF_SIMD");
    g_active = select_from(env ? env : "auto");
  }
  return *g_active;
}

void force_backend(const std::string& name) { g_active = select_from(name); }

}  // namespace nsf::kernels
