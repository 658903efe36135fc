#pragma once

// Stammering-structure detection over a finite prefix of an infinite word:
// prefix repetitions U V^x (witnesses for the star conditions), the
// last-letter normalization, and eventual-periodicity evidence.
//
// Scans are finite, so every positive result is evidence, never proof; the
// callers label verdicts accordingly.

#include "cfst/kernels.hpp"
#include "cfst/numeric.hpp"
#include "cfst/words.hpp"

#include <optional>
#include <span>
#include <vector>

namespace cfst {

// Certifies that the word's prefix of length r+s+m equals U V^{(s+m)/s}
// with |U| = r and |V| = s.
struct RepetitionWitness {
    std::size_t r = 0;
    std::size_t s = 1;
    std::size_t m = 0;
    bool truncated = false;  // the match ran into the scan bound

    BigRat exponent() const { return BigRat(BigInt(s + m), BigInt(s)); }
    BigRat ratio() const { return BigRat(BigInt(r), BigInt(s)); }
};

// a_{l+p} = a_l for all preperiod < l <= checked_len - period.
struct PeriodicityEvidence {
    std::size_t preperiod = 0;
    std::size_t period = 1;
    std::size_t checked_len = 0;
};

// Largest m <= N-r-s such that a[r+1 .. r+s+m] has period s, i.e.
// a[r+i] = a[r+s+i] for 1 <= i <= m (1-indexed letters; N = prefix length).
std::size_t shifted_lcp(std::span<const Letter> prefix, std::size_t r, std::size_t s,
                        bool* truncated = nullptr);
std::size_t shifted_lcp(const InfiniteWord& a, std::size_t r, std::size_t s, std::size_t N,
                        bool* truncated = nullptr);

// z[i] = length of the longest common prefix of w and w[i..]; z[0] = |w|.
std::vector<std::size_t> z_array(std::span<const Letter> w);

// Direct re-verification of a witness by substring comparison (independent
// of the scan kernels).
bool verify_witness(std::span<const Letter> prefix, const RepetitionWitness& wit);

struct StarDetection {
    std::vector<RepetitionWitness> witnesses;  // r = 0, s strictly increasing
    std::optional<PeriodicityEvidence> periodicity;
    bool evidenced = false;  // >= min_witnesses and no periodicity found
};

// Prefix powers V^x with x >= w > 1, one witness per root length.
StarDetection detect_star(std::span<const Letter> prefix, const BigRat& w,
                          std::size_t min_witnesses = 3);
StarDetection detect_star(const InfiniteWord& a, const BigRat& w, std::size_t N,
                          std::size_t min_witnesses = 3);

// Shifted powers U V^x with x >= w > 1 and |U|/|V| <= wprime. For each root
// length the smallest qualifying offset is reported; s strictly increasing.
std::vector<RepetitionWitness> detect_star_star(std::span<const Letter> prefix, const BigRat& w,
                                                const BigRat& wprime);
std::vector<RepetitionWitness> detect_star_star(const InfiniteWord& a, const BigRat& w,
                                                const BigRat& wprime, std::size_t N);

// Shift U a (V a)^x -> U (a V)^x until the last letters of U and V differ or
// U is empty. Never decreases the exponent or increases r/s.
RepetitionWitness normalize_witness(std::span<const Letter> prefix, const RepetitionWitness& wit);
RepetitionWitness normalize_witness(const InfiniteWord& a, const RepetitionWitness& wit,
                                    std::size_t N);

// Smallest (preperiod, period) in lexicographic order with at least two full
// periods inside the prefix and the periodic tail covering at least half of
// it; nullopt when no such pair exists.
std::optional<PeriodicityEvidence> detect_eventual_period(std::span<const Letter> prefix);
std::optional<PeriodicityEvidence> detect_eventual_period(const InfiniteWord& a, std::size_t N);

}  // namespace cfst
