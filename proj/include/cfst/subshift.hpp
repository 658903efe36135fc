#pragma once

// Subword-complexity and recurrence analytics on a finite prefix: the
// complexity function p(n), the Morse-Hedlund periodicity gate, the p(n)-n
// trend probe, worst return gaps with the linear-recurrence constant
// estimate, and the two morphic witness pipelines (prefix-power witnesses
// from linear recurrence, and from recurrent morphisms via the iterate
// length constant).

#include "cfst/numeric.hpp"
#include "cfst/repetition.hpp"
#include "cfst/words.hpp"

#include <optional>
#include <span>
#include <vector>

namespace cfst {

struct ComplexityProfile {
    std::size_t N = 0;      // prefix length the counts are exact for
    std::size_t n_max = 0;  // largest factor length counted
    std::vector<std::size_t> p;      // p[n] for 1 <= n <= n_max; p[0] unused
    std::vector<bool> near_horizon;  // 2n > N: may undercount the infinite word
};

// Exact distinct-factor counts of the length-N prefix (suffix-array based;
// equality is exact, nothing is hashed). Requires n_max <= N/2.
ComplexityProfile complexity(std::span<const Letter> prefix, std::size_t n_max);
ComplexityProfile complexity(const InfiniteWord& a, std::size_t n_max, std::size_t N);

// Smallest n with p(n) <= n, the Morse-Hedlund periodicity trigger.
std::optional<std::size_t> morse_hedlund_gate(const ComplexityProfile& profile);

enum class GapTrend {
    hits_gate,      // p(n) - n <= 0 somewhere
    constant_tail,  // p(n) - n = a on the sampled tail
    increasing,     // nondecreasing and strictly grew over the range
    irregular,
};

struct GapProbe {
    GapTrend trend = GapTrend::irregular;
    std::optional<long long> constant_a;
    std::vector<long long> p_minus_n;  // for n = 1..n_max
};

GapProbe complexity_gap_probe(const ComplexityProfile& profile);
GapProbe complexity_gap_probe(const InfiniteWord& a, std::size_t n_max, std::size_t N);

struct RecurrenceStats {
    std::size_t N = 0;
    std::size_t n_max = 0;
    std::vector<std::size_t> worst_gap;     // G(n); 0 when no length-n factor recurs
    std::vector<bool> has_nonrecurrent;     // some length-n factor occurs only once
    BigRat c_hat;                           // max G(n)/n over observed recurrences
    bool lower_bound_only = false;          // some factor never recurred in view
};

// Worst gaps between consecutive occurrences per factor length; requires
// n_max <= N/4 so gaps have room to show.
RecurrenceStats recurrence_stats(std::span<const Letter> prefix, std::size_t n_max);
RecurrenceStats recurrence_stats(const InfiniteWord& a, std::size_t n_max, std::size_t N);

// Linear-recurrence prefix power: the length-n prefix U recurs within the
// following k*n letters, giving the prefix U A U = (U A)^x with
// x >= 1 + 1/k. Throws when U does not recur in that window.
RepetitionWitness theorem5_witness(const InfiniteWord& a, std::size_t k, std::size_t n);

struct Lemma2Constant {
    BigRat c;        // s^{-n0}
    std::size_t s;   // max image length over letters occurring in the fixed point
    std::size_t n0;  // max over letters b of the least n with b in sigma^n(a)
};

// Constant with |sigma^n(a)| >= c |sigma^n(b)| for every occurring letter b;
// the inequality is re-verified by direct length iteration for n <= 12.
Lemma2Constant lemma2_constant(const Morphism& sigma, Letter a);

// Witnesses from a recurrent morphism: with aWa the shortest such prefix of
// the fixed point, the coded iterate phi(sigma^n(aW)) is a repeated prefix
// of the coded word. Witness match lengths are measured on the coded word
// itself (never extrapolated). Throws unless sigma is prolongable at a and
// recurrent.
std::vector<RepetitionWitness> theorem3_witnesses(const Morphism& sigma, const Coding& phi,
                                                  Letter a, std::size_t n_max);

}  // namespace cfst
