#include "cfst/subshift.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cfst {

namespace {

// Prefix-doubling suffix array, O(N log^2 N); N stays desk-scale here.
std::vector<std::size_t> suffix_array(std::span<const Letter> w) {
    const std::size_t n = w.size();
    std::vector<std::size_t> sa(n);
    std::iota(sa.begin(), sa.end(), std::size_t{0});
    if (n == 0) return sa;

    std::vector<long long> rank(n), next_rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[i] = w[i];
    for (std::size_t k = 1;; k *= 2) {
        auto key = [&](std::size_t i) {
            return std::pair<long long, long long>(rank[i],
                                                   i + k < n ? rank[i + k] + 1 : 0);
        };
        std::sort(sa.begin(), sa.end(),
                  [&](std::size_t x, std::size_t y) { return key(x) < key(y); });
        next_rank[sa[0]] = 0;
        for (std::size_t i = 1; i < n; ++i)
            next_rank[sa[i]] = next_rank[sa[i - 1]] + (key(sa[i - 1]) < key(sa[i]) ? 1 : 0);
        rank.swap(next_rank);
        if (rank[sa[n - 1]] == static_cast<long long>(n - 1)) break;
    }
    return sa;
}

// Kasai: lcp[i] = lcp(suffix sa[i-1], suffix sa[i]); lcp[0] = 0.
std::vector<std::size_t> lcp_array(std::span<const Letter> w, const std::vector<std::size_t>& sa) {
    const std::size_t n = w.size();
    std::vector<std::size_t> inv(n), lcp(n, 0);
    for (std::size_t i = 0; i < n; ++i) inv[sa[i]] = i;
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (inv[i] == 0) {
            h = 0;
            continue;
        }
        const std::size_t j = sa[inv[i] - 1];
        while (i + h < n && j + h < n && w[i + h] == w[j + h]) ++h;
        lcp[inv[i]] = h;
        if (h > 0) --h;
    }
    return lcp;
}

}  // namespace

ComplexityProfile complexity(std::span<const Letter> prefix, std::size_t n_max) {
    const std::size_t N = prefix.size();
    if (n_max < 1) throw std::invalid_argument("complexity needs n_max >= 1");
    if (2 * n_max > N)
        throw std::invalid_argument("complexity needs n_max <= N/2 to keep counts meaningful");

    const auto sa = suffix_array(prefix);
    const auto lcp = lcp_array(prefix, sa);

    // Distinct length-n factors = (N - n + 1) minus adjacent sorted-suffix
    // pairs sharing at least n letters.
    std::vector<std::size_t> shared_ge(n_max + 2, 0);
    for (std::size_t i = 1; i < N; ++i) {
        const std::size_t capped = std::min(lcp[i], n_max);
        if (capped > 0) ++shared_ge[capped];
    }
    for (std::size_t n = n_max; n >= 1; --n) shared_ge[n] += shared_ge[n + 1];

    ComplexityProfile out;
    out.N = N;
    out.n_max = n_max;
    out.p.assign(n_max + 1, 0);
    out.near_horizon.assign(n_max + 1, false);
    for (std::size_t n = 1; n <= n_max; ++n) {
        out.p[n] = (N - n + 1) - shared_ge[n];
        out.near_horizon[n] = 2 * n > N;
    }
    return out;
}

ComplexityProfile complexity(const InfiniteWord& a, std::size_t n_max, std::size_t N) {
    const FiniteWord p = a.prefix(N);
    return complexity(std::span<const Letter>(p), n_max);
}

std::optional<std::size_t> morse_hedlund_gate(const ComplexityProfile& profile) {
    for (std::size_t n = 1; n <= profile.n_max; ++n)
        if (profile.p[n] <= n) return n;
    return std::nullopt;
}

GapProbe complexity_gap_probe(const ComplexityProfile& profile) {
    GapProbe out;
    const std::size_t n_max = profile.n_max;
    out.p_minus_n.reserve(n_max);
    bool nonpositive = false;
    for (std::size_t n = 1; n <= n_max; ++n) {
        out.p_minus_n.push_back(static_cast<long long>(profile.p[n]) - static_cast<long long>(n));
        if (out.p_minus_n.back() <= 0) nonpositive = true;
    }
    if (nonpositive) {
        out.trend = GapTrend::hits_gate;
        return out;
    }
    const std::size_t tail_from = n_max / 2;  // sampled tail: upper half
    bool tail_constant = true;
    for (std::size_t n = tail_from + 1; n <= n_max; ++n)
        if (out.p_minus_n[n - 1] != out.p_minus_n[tail_from]) tail_constant = false;
    if (tail_constant && tail_from < n_max) {
        out.trend = GapTrend::constant_tail;
        out.constant_a = out.p_minus_n[tail_from];
        return out;
    }
    bool nondecreasing = true;
    for (std::size_t i = 1; i < out.p_minus_n.size(); ++i)
        if (out.p_minus_n[i] < out.p_minus_n[i - 1]) nondecreasing = false;
    if (nondecreasing && out.p_minus_n.back() > out.p_minus_n.front()) {
        out.trend = GapTrend::increasing;
        return out;
    }
    out.trend = GapTrend::irregular;
    return out;
}

GapProbe complexity_gap_probe(const InfiniteWord& a, std::size_t n_max, std::size_t N) {
    return complexity_gap_probe(complexity(a, n_max, N));
}

RecurrenceStats recurrence_stats(std::span<const Letter> prefix, std::size_t n_max) {
    const std::size_t N = prefix.size();
    if (n_max < 1) throw std::invalid_argument("recurrence stats need n_max >= 1");
    if (4 * n_max > N)
        throw std::invalid_argument("recurrence stats need n_max <= N/4 so gaps have room");

    const auto sa = suffix_array(prefix);
    const auto lcp = lcp_array(prefix, sa);

    RecurrenceStats out;
    out.N = N;
    out.n_max = n_max;
    out.worst_gap.assign(n_max + 1, 0);
    out.has_nonrecurrent.assign(n_max + 1, false);
    out.c_hat = BigRat(0);

    std::vector<std::size_t> positions;
    for (std::size_t n = 1; n <= n_max; ++n) {
        // Occurrences of one distinct factor = a maximal run of sorted
        // suffixes pairwise sharing >= n letters (suffixes shorter than n
        // break runs automatically: their lcp with any neighbor is < n).
        std::size_t gap_max = 0;
        bool nonrecurrent = false;
        std::size_t i = 0;
        while (i < N) {
            positions.clear();
            if (sa[i] + n <= N) positions.push_back(sa[i]);
            std::size_t j = i + 1;
            while (j < N && lcp[j] >= n) {
                if (sa[j] + n <= N) positions.push_back(sa[j]);
                ++j;
            }
            if (positions.size() == 1) nonrecurrent = true;
            if (positions.size() >= 2) {
                std::sort(positions.begin(), positions.end());
                for (std::size_t t = 1; t < positions.size(); ++t)
                    gap_max = std::max(gap_max, positions[t] - positions[t - 1]);
            }
            i = j;
        }
        out.worst_gap[n] = gap_max;
        out.has_nonrecurrent[n] = nonrecurrent;
        if (gap_max > 0) out.c_hat = std::max(out.c_hat, BigRat(BigInt(gap_max), BigInt(n)));
        if (nonrecurrent) out.lower_bound_only = true;
    }
    return out;
}

RecurrenceStats recurrence_stats(const InfiniteWord& a, std::size_t n_max, std::size_t N) {
    const FiniteWord p = a.prefix(N);
    return recurrence_stats(std::span<const Letter>(p), n_max);
}

RepetitionWitness theorem5_witness(const InfiniteWord& a, std::size_t k, std::size_t n) {
    if (k < 1 || n < 1) throw std::invalid_argument("theorem5 witness needs k >= 1 and n >= 1");
    const FiniteWord p = a.prefix((k + 1) * n);
    const std::span<const Letter> sp(p);
    const auto z = z_array(sp);

    // First occurrence of the prefix U (length n) inside the window of
    // length k*n that follows it.
    for (std::size_t t = n; t + n <= (k + 1) * n; ++t) {
        if (z[t] < n) continue;
        const RepetitionWitness wit{0, t, n, false};
        if (!verify_witness(sp, wit))
            throw std::logic_error("theorem5 witness failed re-verification");
        return wit;
    }
    throw std::runtime_error("recurrence hypothesis violated at n=" + std::to_string(n) +
                             ": the length-n prefix does not recur within the next " +
                             std::to_string(k * n) + " letters");
}

Lemma2Constant lemma2_constant(const Morphism& sigma, Letter a) {
    if (!is_prolongable(sigma, a))
        throw std::invalid_argument("lemma2 constant needs a prolongable morphism");

    // Letters of sigma^k(a) grow monotonically with k (sigma^k(a) is a
    // prefix of sigma^{k+1}(a)), so iterating letter sets to a fixpoint
    // finds every letter occurring in the fixed point together with the
    // first round it shows up in.
    std::map<Letter, std::size_t> first_seen;
    std::set<Letter> current = {a};
    first_seen[a] = 0;
    for (std::size_t round = 1;; ++round) {
        std::set<Letter> next;
        for (Letter b : current)
            for (Letter x : sigma.image(b)) next.insert(x);
        next.insert(current.begin(), current.end());
        bool grew = false;
        for (Letter x : next)
            if (!first_seen.count(x)) {
                first_seen[x] = round;
                grew = true;
            }
        current = std::move(next);
        if (!grew) break;
    }

    Lemma2Constant out;
    out.s = 0;
    out.n0 = 0;
    for (const auto& [letter, round] : first_seen) {
        out.s = std::max(out.s, sigma.image(letter).size());
        out.n0 = std::max(out.n0, round);
    }
    out.c = BigRat(BigInt(1), pow_int(BigInt(out.s), static_cast<unsigned>(out.n0)));

    // Direct re-verification of |sigma^n(a)| >= c |sigma^n(b)| for n <= 12,
    // via exact length vectors.
    std::map<Letter, BigInt> len;
    for (const auto& [letter, round] : first_seen) len[letter] = 1;
    const BigInt scale = pow_int(BigInt(out.s), static_cast<unsigned>(out.n0));
    for (unsigned n = 0; n <= 12; ++n) {
        const BigInt len_a = len.at(a);
        for (const auto& [letter, length] : len)
            if (scale * len_a < length)
                throw std::logic_error("lemma2 inequality failed: the constant is wrong");
        std::map<Letter, BigInt> next;
        for (const auto& [letter, length] : len) {
            BigInt total = 0;
            for (Letter x : sigma.image(letter)) total += len.at(x);
            next[letter] = total;
        }
        len = std::move(next);
    }
    return out;
}

std::vector<RepetitionWitness> theorem3_witnesses(const Morphism& sigma, const Coding& phi,
                                                  Letter a, std::size_t n_max) {
    if (!is_prolongable(sigma, a))
        throw std::invalid_argument("theorem3 needs a prolongable morphism");
    if (!is_recurrent_generator(sigma, a))
        throw std::invalid_argument("theorem3 needs a recurrent generator: the first letter "
                                    "occurs only once in the fixed point");

    const InfiniteWord fp = fixed_point(sigma, a);

    // Shortest W with aWa a prefix of the fixed point: locate the second
    // occurrence of the first letter (recurrence guarantees one).
    FiniteWord head;
    std::size_t second = 0;
    for (std::size_t len = 8; second == 0; len *= 2) {
        if (len > (std::size_t{1} << 24))
            throw std::logic_error("second occurrence of the initial letter not found");
        head = fp.prefix(len);
        for (std::size_t i = 1; i < head.size(); ++i)
            if (head[i] == a) {
                second = i;
                break;
            }
    }
    FiniteWord aW(head.begin(), head.begin() + static_cast<std::ptrdiff_t>(second));

    const InfiniteWord coded = coded_word(fp, phi);
    std::vector<RepetitionWitness> out;
    FiniteWord iter_aW = aW;
    FiniteWord iter_a = {a};
    for (std::size_t n = 1; n <= n_max; ++n) {
        iter_aW = sigma.apply(iter_aW);
        iter_a = sigma.apply(iter_a);
        const std::size_t s = iter_aW.size();
        // sigma^n(aW) = sigma^n(a) sigma^n(W) starts over at offset s, so the
        // match reaches at least |sigma^n(a)|; measure the true length on
        // the coded word (bounded scan, no extrapolation).
        const FiniteWord scan = coded.prefix(3 * s);
        bool truncated = false;
        const std::size_t m = shifted_lcp(std::span<const Letter>(scan), 0, s, &truncated);
        RepetitionWitness wit{0, s, m, truncated};
        if (m < iter_a.size() || !verify_witness(std::span<const Letter>(scan), wit))
            throw std::logic_error("theorem3 witness failed re-verification");
        out.push_back(wit);
    }
    return out;
}

}  // namespace cfst
