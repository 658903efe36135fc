#include "cfst/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace cfst::kernels {

std::size_t first_mismatch_scalar(const Letter* a, const Letter* b, std::size_t n) {
    std::size_t i = 0;
    while (i < n && a[i] == b[i]) ++i;
    return i;
}

std::size_t last_mismatch_scalar(const Letter* a, const Letter* b, std::size_t n) {
    std::size_t i = n;
    while (i > 0) {
        --i;
        if (a[i] != b[i]) return i;
    }
    return npos;
}

namespace {

bool pick_simd() {
#if defined(CFST_HAVE_AVX2_TU)
    if (const char* env = std::getenv("CFST_SIMD"); env && std::strcmp(env, "off") == 0)
        return false;
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const bool g_use_simd = pick_simd();

}  // namespace

bool simd_active() { return g_use_simd; }

std::size_t first_mismatch(const Letter* a, const Letter* b, std::size_t n) {
#if defined(CFST_HAVE_AVX2_TU)
    if (g_use_simd) return first_mismatch_avx2(a, b, n);
#endif
    return first_mismatch_scalar(a, b, n);
}

std::size_t last_mismatch(const Letter* a, const Letter* b, std::size_t n) {
#if defined(CFST_HAVE_AVX2_TU)
    if (g_use_simd) return last_mismatch_avx2(a, b, n);
#endif
    return last_mismatch_scalar(a, b, n);
}

}  // namespace cfst::kernels
