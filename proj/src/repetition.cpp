#include "cfst/repetition.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfst {

namespace {

// (s + m) / s >= w, exactly.
bool exponent_reaches(std::size_t s, std::size_t m, const BigRat& w) {
    return BigInt(s + m) * denominator(w) >= numerator(w) * BigInt(s);
}

void require_scan_args(std::size_t N, std::size_t r, std::size_t s) {
    if (s < 1) throw std::invalid_argument("shift must be >= 1");
    if (r + s >= N) throw std::invalid_argument("scan needs r + s < N");
}

}  // namespace

std::size_t shifted_lcp(std::span<const Letter> prefix, std::size_t r, std::size_t s,
                        bool* truncated) {
    require_scan_args(prefix.size(), r, s);
    const std::size_t bound = prefix.size() - r - s;
    const std::size_t m = kernels::first_mismatch(prefix.data() + r, prefix.data() + r + s, bound);
    if (truncated) *truncated = (m == bound);
    return m;
}

std::size_t shifted_lcp(const InfiniteWord& a, std::size_t r, std::size_t s, std::size_t N,
                        bool* truncated) {
    const FiniteWord p = a.prefix(N);
    return shifted_lcp(std::span<const Letter>(p), r, s, truncated);
}

std::vector<std::size_t> z_array(std::span<const Letter> w) {
    const std::size_t n = w.size();
    std::vector<std::size_t> z(n, 0);
    if (n == 0) return z;
    z[0] = n;
    std::size_t l = 0, r = 0;  // rightmost match window [l, l + z[l])
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t zi = (i < r) ? std::min(r - i, z[i - l]) : 0;
        zi += kernels::first_mismatch(w.data() + zi, w.data() + i + zi, n - i - zi);
        z[i] = zi;
        if (i + zi > r) {
            l = i;
            r = i + zi;
        }
    }
    return z;
}

bool verify_witness(std::span<const Letter> prefix, const RepetitionWitness& wit) {
    if (wit.s < 1 || wit.r + wit.s + wit.m > prefix.size()) return false;
    for (std::size_t i = 0; i < wit.m; ++i)
        if (prefix[wit.r + i] != prefix[wit.r + wit.s + i]) return false;
    return true;
}

StarDetection detect_star(std::span<const Letter> prefix, const BigRat& w,
                          std::size_t min_witnesses) {
    if (w <= 1) throw std::invalid_argument("star condition needs w > 1");
    if (prefix.size() < 2) throw std::invalid_argument("scan bound too small (N >= 2)");
    StarDetection out;
    const auto z = z_array(prefix);
    const std::size_t N = prefix.size();
    for (std::size_t s = 1; s < N; ++s) {
        const std::size_t m = std::min(z[s], N - s);
        if (m == 0 || !exponent_reaches(s, m, w)) continue;
        out.witnesses.push_back({0, s, m, m == N - s});
    }
    out.periodicity = detect_eventual_period(prefix);
    out.evidenced = out.witnesses.size() >= min_witnesses && !out.periodicity.has_value();
    return out;
}

StarDetection detect_star(const InfiniteWord& a, const BigRat& w, std::size_t N,
                          std::size_t min_witnesses) {
    const FiniteWord p = a.prefix(N);
    return detect_star(std::span<const Letter>(p), w, min_witnesses);
}

std::vector<RepetitionWitness> detect_star_star(std::span<const Letter> prefix, const BigRat& w,
                                                const BigRat& wprime) {
    if (w <= 1) throw std::invalid_argument("star-star condition needs w > 1");
    if (wprime < 0) throw std::invalid_argument("star-star condition needs wprime >= 0");
    if (prefix.size() < 2) throw std::invalid_argument("scan bound too small (N >= 2)");

    const std::size_t N = prefix.size();
    // r <= wprime * s and the repetition needs ceil(w s) letters after U, so
    // offsets beyond wprime*N/(w+wprime) cannot qualify.
    BigInt r_cap = rat_floor(wprime * BigInt(N) / (w + wprime));
    if (r_cap > BigInt(N)) r_cap = N;
    std::size_t r_max = r_cap.convert_to<std::size_t>();
    if (r_max >= N - 1) r_max = N - 2;

    struct Claim {
        std::size_t r, m;
        bool truncated;
    };
    std::vector<std::optional<Claim>> per_s(N);

    for (std::size_t r = 0; r <= r_max; ++r) {
        const auto sub = prefix.subspan(r);
        const auto z = z_array(sub);
        for (std::size_t s = 1; s + r < N; ++s) {
            if (per_s[s]) continue;                                     // smaller r already claimed it
            if (BigInt(r) * denominator(wprime) > numerator(wprime) * BigInt(s)) continue;
            const std::size_t bound = N - r - s;
            const std::size_t m = std::min(z[s], bound);
            if (m == 0 || !exponent_reaches(s, m, w)) continue;
            per_s[s] = Claim{r, m, m == bound};
        }
    }

    std::vector<RepetitionWitness> out;
    for (std::size_t s = 1; s < N; ++s)
        if (per_s[s]) out.push_back({per_s[s]->r, s, per_s[s]->m, per_s[s]->truncated});
    return out;
}

std::vector<RepetitionWitness> detect_star_star(const InfiniteWord& a, const BigRat& w,
                                                const BigRat& wprime, std::size_t N) {
    const FiniteWord p = a.prefix(N);
    return detect_star_star(std::span<const Letter>(p), w, wprime);
}

RepetitionWitness normalize_witness(std::span<const Letter> prefix, const RepetitionWitness& wit) {
    std::size_t r = wit.r;
    const std::size_t s = wit.s;
    // a begins with U a (V a)^x  =>  a begins with U (a V)^x.
    while (r >= 1 && prefix[r - 1] == prefix[r + s - 1]) --r;
    bool truncated = false;
    const std::size_t m = shifted_lcp(prefix, r, s, &truncated);
    return {r, s, m, truncated};
}

RepetitionWitness normalize_witness(const InfiniteWord& a, const RepetitionWitness& wit,
                                    std::size_t N) {
    const FiniteWord p = a.prefix(N);
    return normalize_witness(std::span<const Letter>(p), wit);
}

std::optional<PeriodicityEvidence> detect_eventual_period(std::span<const Letter> prefix) {
    const std::size_t N = prefix.size();
    if (N < 2) throw std::invalid_argument("scan bound too small (N >= 2)");

    std::optional<PeriodicityEvidence> best;
    for (std::size_t p = 1; 4 * p <= N; ++p) {
        // Smallest admissible preperiod for period p: one past the last
        // mismatch between the word and its p-shift.
        const std::size_t overlap = N - p;
        const std::size_t mm = kernels::last_mismatch(prefix.data(), prefix.data() + p, overlap);
        const std::size_t q = (mm == kernels::npos) ? 0 : mm + 1;
        // Sturmian-style words look exactly periodic for almost two periods
        // (Fibonacci: the prefix of length F_{k+2}-2 has period F_k), so two
        // visible periods is not evidence. Demand four, plus a periodic tail
        // covering at least half the prefix.
        if (q + 4 * p > N) continue;
        if (2 * q > N) continue;
        if (!best || q < best->preperiod || (q == best->preperiod && p < best->period))
            best = PeriodicityEvidence{q, p, N};
        if (q == 0) break;  // (0, p) with the smallest p is the lexicographic minimum
    }
    return best;
}

std::optional<PeriodicityEvidence> detect_eventual_period(const InfiniteWord& a, std::size_t N) {
    const FiniteWord p = a.prefix(N);
    return detect_eventual_period(std::span<const Letter>(p));
}

}  // namespace cfst
