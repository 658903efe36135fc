#pragma once

// Test-only brute-force oracles. Everything here is written directly from
// the definitions (triple loops, set enumeration) and stays independent of
// the scan kernels and suffix structures it checks.

#include "cfst/repetition.hpp"
#include "cfst/words.hpp"

#include <optional>
#include <set>
#include <span>
#include <vector>

namespace oracle {

using cfst::BigInt;
using cfst::BigRat;
using cfst::Letter;
using cfst::PeriodicityEvidence;
using cfst::RepetitionWitness;

inline std::size_t shifted_lcp(std::span<const Letter> w, std::size_t r, std::size_t s) {
    std::size_t m = 0;
    while (r + s + m < w.size() && w[r + m] == w[r + s + m]) ++m;
    return m;
}

inline bool exponent_reaches(std::size_t s, std::size_t m, const BigRat& w) {
    return BigInt(s + m) * cfst::denominator(w) >= cfst::numerator(w) * BigInt(s);
}

inline std::vector<RepetitionWitness> detect_star(std::span<const Letter> word, const BigRat& w) {
    std::vector<RepetitionWitness> out;
    const std::size_t N = word.size();
    for (std::size_t s = 1; s < N; ++s) {
        const std::size_t m = shifted_lcp(word, 0, s);
        if (m >= 1 && exponent_reaches(s, m, w)) out.push_back({0, s, m, m == N - s});
    }
    return out;
}

inline std::vector<RepetitionWitness> detect_star_star(std::span<const Letter> word,
                                                       const BigRat& w, const BigRat& wprime) {
    std::vector<RepetitionWitness> out;
    const std::size_t N = word.size();
    for (std::size_t s = 1; s < N; ++s) {
        for (std::size_t r = 0; r + s < N; ++r) {
            if (BigInt(r) * cfst::denominator(wprime) > cfst::numerator(wprime) * BigInt(s)) break;
            const std::size_t m = shifted_lcp(word, r, s);
            if (m >= 1 && exponent_reaches(s, m, w)) {
                out.push_back({r, s, m, m == N - r - s});
                break;  // smallest offset per root length
            }
        }
    }
    return out;
}

inline std::optional<PeriodicityEvidence> detect_eventual_period(std::span<const Letter> word) {
    const std::size_t N = word.size();
    for (std::size_t q = 0; 2 * q <= N; ++q) {
        for (std::size_t p = 1; q + 4 * p <= N; ++p) {
            bool ok = true;
            for (std::size_t i = q; i + p < N; ++i)
                if (word[i] != word[i + p]) {
                    ok = false;
                    break;
                }
            if (ok) return PeriodicityEvidence{q, p, N};
        }
    }
    return std::nullopt;
}

inline std::size_t complexity(std::span<const Letter> word, std::size_t n) {
    std::set<std::vector<Letter>> factors;
    for (std::size_t i = 0; i + n <= word.size(); ++i)
        factors.insert(std::vector<Letter>(word.begin() + i, word.begin() + i + n));
    return factors.size();
}

inline bool same_witnesses(const std::vector<RepetitionWitness>& a,
                           const std::vector<RepetitionWitness>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].r != b[i].r || a[i].s != b[i].s || a[i].m != b[i].m ||
            a[i].truncated != b[i].truncated)
            return false;
    return true;
}

}  // namespace oracle
