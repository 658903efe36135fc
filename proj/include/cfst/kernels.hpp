#pragma once

// Element-compare kernels behind all word scanning (shifted-prefix matching,
// period checks, Z-array extension). Scalar versions are the reference; an
// AVX2 variant is selected at runtime on x86-64 and is equivalence-tested
// against the scalar path. Set CFST_SIMD=off to force scalar.

#include <cstddef>
#include <cstdint>
#include <limits>

namespace cfst {

using Letter = std::int32_t;

namespace kernels {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Count of leading equal elements: smallest i with a[i] != b[i], or n.
std::size_t first_mismatch(const Letter* a, const Letter* b, std::size_t n);
std::size_t first_mismatch_scalar(const Letter* a, const Letter* b, std::size_t n);

// Largest i with a[i] != b[i], or npos when the ranges agree.
std::size_t last_mismatch(const Letter* a, const Letter* b, std::size_t n);
std::size_t last_mismatch_scalar(const Letter* a, const Letter* b, std::size_t n);

#if defined(CFST_HAVE_AVX2_TU)
std::size_t first_mismatch_avx2(const Letter* a, const Letter* b, std::size_t n);
std::size_t last_mismatch_avx2(const Letter* a, const Letter* b, std::size_t n);
#endif

// True when the dispatched kernels run the AVX2 variant.
bool simd_active();

}  // namespace kernels
}  // namespace cfst
