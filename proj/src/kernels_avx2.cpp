// AVX2 variants of the compare kernels. This TU is compiled with -mavx2 and
// only reached after a cpuid check, so unaligned 256-bit loads are safe here.

#include "cfst/kernels.hpp"

#include <bit>
#include <immintrin.h>

namespace cfst::kernels {

namespace {
// 8-bit lane mask, bit set where the int32 lanes are equal.
inline unsigned eq_mask8(const Letter* a, const Letter* b, std::size_t i) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i eq = _mm256_cmpeq_epi32(va, vb);
    return static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)));
}
}  // namespace

std::size_t first_mismatch_avx2(const Letter* a, const Letter* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const unsigned mask = eq_mask8(a, b, i);
        if (mask != 0xffu) return i + std::countr_one(mask);
    }
    while (i < n && a[i] == b[i]) ++i;
    return i;
}

std::size_t last_mismatch_avx2(const Letter* a, const Letter* b, std::size_t n) {
    std::size_t i = n;
    while (i % 8 != 0) {
        --i;
        if (a[i] != b[i]) return i;
    }
    while (i >= 8) {
        i -= 8;
        const unsigned ne = ~eq_mask8(a, b, i) & 0xffu;
        if (ne != 0) return i + (31u - std::countl_zero(ne));
    }
    return npos;
}

}  // namespace cfst::kernels
