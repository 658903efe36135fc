#include "cfst/cf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

namespace cfst {

std::vector<Convergent> convergents(std::span<const Letter> digits) {
    std::vector<Convergent> out;
    out.reserve(digits.size() + 1);
    BigInt p_prev = 1, q_prev = 0;  // index -1
    BigInt p = 0, q = 1;            // index 0
    out.push_back({0, p, q});
    for (std::size_t l = 1; l <= digits.size(); ++l) {
        const Letter a = digits[l - 1];
        if (a < 1)
            throw std::domain_error("partial quotient a_" + std::to_string(l) +
                                    " = " + std::to_string(a) + " is < 1");
        BigInt pn = BigInt(a) * p + p_prev;
        BigInt qn = BigInt(a) * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(pn);
        q = std::move(qn);
        out.push_back({l, p, q});
    }
    return out;
}

std::vector<Convergent> convergents(const InfiniteWord& a, std::size_t N) {
    const FiniteWord d = a.prefix(N);
    return convergents(std::span<const Letter>(d));
}

Enclosure alpha_enclosure(const std::vector<Convergent>& conv, std::size_t L) {
    if (L < 1 || L + 1 >= conv.size())
        throw std::invalid_argument("enclosure needs 1 <= L and L+1 computed convergents");
    BigRat at_L(conv[L].p, conv[L].q);
    BigRat at_L1(conv[L + 1].p, conv[L + 1].q);
    // Even-indexed convergents of [0; ...] sit below alpha, odd above.
    if (L % 2 == 0) return {at_L, at_L1};
    return {at_L1, at_L};
}

Enclosure alpha_enclosure(const InfiniteWord& a, std::size_t L) {
    return alpha_enclosure(convergents(a, L + 1), L);
}

GrowthStats growth_stats(std::span<const Letter> digits) {
    const std::size_t N = digits.size();
    if (N < 16) throw std::invalid_argument("growth stats need N >= 16");
    const auto conv = convergents(digits);

    std::vector<double> root_growth(N + 1, 0.0);  // q_l^{1/l}
    for (std::size_t l = 1; l <= N; ++l)
        root_growth[l] = std::exp(log_big(conv[l].q) / static_cast<double>(l));

    GrowthStats out;
    out.N = N;
    out.window_lo = N / 2;
    out.window_hi = N;
    out.M_hat = 0;
    out.m_hat = root_growth[out.window_lo];
    for (std::size_t l = out.window_lo; l <= out.window_hi; ++l) {
        out.M_hat = std::max(out.M_hat, root_growth[l]);
        out.m_hat = std::min(out.m_hat, root_growth[l]);
    }
    out.bounded_evidence = true;
    for (std::size_t l = 4; l <= N; ++l)
        if (root_growth[l] >= 2.0 * out.M_hat) out.bounded_evidence = false;
    return out;
}

GrowthStats growth_stats(const InfiniteWord& a, std::size_t N) {
    const FiniteWord d = a.prefix(N);
    return growth_stats(std::span<const Letter>(d));
}

// --- quadratic surds ---------------------------------------------------------

QuadraticSurd make_surd(BigInt P, BigInt Q, BigInt D) {
    if (Q == 0) throw std::domain_error("surd with zero denominator");
    if (D <= 0) throw std::domain_error("surd needs a positive radicand");
    if (is_perfect_square(D)) throw std::domain_error("surd radicand is a perfect square");
    if ((D - P * P) % Q != 0) {
        const BigInt f = abs(Q);
        P *= f;
        D *= f * f;
        Q *= f;
    }
    return {std::move(P), std::move(Q), std::move(D)};
}

int surd_cmp_rational(const QuadraticSurd& x, const BigRat& r) {
    // sign of (P + sqrt(D))/Q - u/v  =  sign(v sqrt(D) - (uQ - vP)) * sign(Q)
    const BigInt u = numerator(r), v = denominator(r);  // v > 0
    const BigInt t = u * x.Q - v * x.P;
    int sign_num;
    if (t <= 0) {
        sign_num = 1;
    } else {
        const BigInt lhs = v * v * x.D, rhs = t * t;
        sign_num = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
    }
    return x.Q > 0 ? sign_num : -sign_num;
}

bool surd_equal(const QuadraticSurd& x, const QuadraticSurd& y) {
    if ((x.Q > 0) != (y.Q > 0)) return false;
    if (x.P * y.Q != y.P * x.Q) return false;
    return x.D * y.Q * y.Q == y.D * x.Q * x.Q;
}

bool surd_is_root(const QuadraticSurd& x, const QuadraticPoly& poly) {
    // A(P^2 + D) + B P Q + C Q^2 + (2AP + BQ) sqrt(D) == 0 needs both parts zero.
    const BigInt rational_part =
        poly.A * (x.P * x.P + x.D) + poly.B * x.P * x.Q + poly.C * x.Q * x.Q;
    const BigInt surd_part = 2 * poly.A * x.P + poly.B * x.Q;
    return rational_part == 0 && surd_part == 0;
}

double surd_to_double(const QuadraticSurd& x) {
    return (x.P.convert_to<double>() + std::sqrt(x.D.convert_to<double>())) /
           x.Q.convert_to<double>();
}

namespace {

BigInt floor_surd(const BigInt& P, const BigInt& Q, const BigInt& sqrtD) {
    // floor((P + sqrt(D))/Q) for irrational sqrt(D) with floor(sqrt(D)) given.
    if (Q > 0) return floor_div(P + sqrtD, Q);
    return floor_div(-P - sqrtD - 1, -Q);
}

}  // namespace

SurdCf surd_cf_expansion(const QuadraticSurd& x, std::size_t max_steps) {
    if ((x.D - x.P * x.P) % x.Q != 0)
        throw std::domain_error("surd expansion needs the canonical divisibility Q | D - P^2");
    if (is_perfect_square(x.D)) throw std::domain_error("surd expansion needs a non-square D");
    if (surd_cmp_rational(x, BigRat(0)) <= 0)
        throw std::domain_error("surd expansion defined for positive values only");

    const BigInt sqrtD = isqrt(x.D);
    BigInt P = x.P, Q = x.Q;

    FiniteWord digits;
    std::map<std::pair<BigInt, BigInt>, std::size_t> seen;  // state -> digit index

    // Drop the integer part 0 of a value in (0,1): step to 1/x silently.
    {
        const BigInt a0 = floor_surd(P, Q, sqrtD);
        if (a0 == 0) {
            const BigInt Pn = -P;
            const BigInt Qn = (x.D - Pn * Pn) / Q;
            P = Pn;
            Q = Qn;
        }
    }

    for (std::size_t step = 0; step < max_steps; ++step) {
        auto [it, inserted] = seen.emplace(std::make_pair(P, Q), digits.size());
        if (!inserted) {
            const std::size_t cut = it->second;
            return {FiniteWord(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(cut)),
                    FiniteWord(digits.begin() + static_cast<std::ptrdiff_t>(cut), digits.end())};
        }
        const BigInt a = floor_surd(P, Q, sqrtD);
        if (a < 1 || a > std::numeric_limits<Letter>::max())
            throw std::domain_error("surd expansion produced an out-of-range digit");
        digits.push_back(a.convert_to<Letter>());
        const BigInt Pn = a * Q - P;
        const BigInt Qn = (x.D - Pn * Pn) / Q;
        P = Pn;
        Q = Qn;
    }
    throw std::runtime_error("surd expansion did not cycle within the step cap");
}

// --- approximants -------------------------------------------------------------

namespace {

Approximant finish_pure(QuadraticPoly poly) {
    Approximant out{std::move(poly), std::nullopt, ApproximantStatus::ok};
    if (out.poly.A == 0) {
        out.status = ApproximantStatus::degenerate_linear;
        return out;
    }
    const BigInt D = out.poly.discriminant();
    if (D <= 0 || is_perfect_square(D)) {
        out.status = ApproximantStatus::degenerate_rational;
        return out;
    }
    // Roots are (-B +- sqrt(D))/(2A); the constant term is negative, so the
    // one in (0,1) is the larger root.
    out.root = make_surd(-out.poly.B, 2 * out.poly.A, D);
    return out;
}

}  // namespace

Approximant build_Pn_pure(std::span<const Letter> digits, std::size_t s) {
    if (s < 1) throw std::invalid_argument("pure approximant needs s >= 1");
    if (digits.size() < s) throw std::invalid_argument("prefix shorter than the period");
    const auto conv = convergents(digits.first(s));
    QuadraticPoly poly{conv[s - 1].q, conv[s].q - conv[s - 1].p, -conv[s].p};
    return finish_pure(std::move(poly));
}

Approximant build_Pn_pure(const InfiniteWord& a, std::size_t s) {
    const FiniteWord d = a.prefix(s);
    return build_Pn_pure(std::span<const Letter>(d), s);
}

Approximant build_Pn_preperiodic(std::span<const Letter> digits, std::size_t r, std::size_t s) {
    if (r < 1) throw std::invalid_argument("preperiodic approximant needs r >= 1 (use the pure builder)");
    if (s < 1) throw std::invalid_argument("preperiodic approximant needs s >= 1");
    if (digits.size() < r + s) throw std::invalid_argument("prefix shorter than preperiod + period");

    const auto conv = convergents(digits.first(r + s));
    const BigInt& pr1 = conv[r - 1].p;
    const BigInt& qr1 = conv[r - 1].q;
    const BigInt& pr = conv[r].p;
    const BigInt& qr = conv[r].q;
    const BigInt& ps = conv[r + s].p;
    const BigInt& qs = conv[r + s].q;
    const BigInt& ps1 = conv[r + s - 1].p;
    const BigInt& qs1 = conv[r + s - 1].q;

    QuadraticPoly poly{qr1 * qs - qr * qs1,
                       -(qr1 * ps - qr * ps1 + pr1 * qs - pr * qs1),
                       pr1 * ps - pr * ps1};
    Approximant out{poly, std::nullopt, ApproximantStatus::ok};
    if (poly.A == 0) {
        out.status = ApproximantStatus::degenerate_linear;
        return out;
    }
    const BigInt D = poly.discriminant();
    if (D <= 0 || is_perfect_square(D)) {
        out.status = ApproximantStatus::degenerate_rational;
        return out;
    }

    // Both roots are quadratic surds over the same D; pick the one the
    // eventually periodic word actually converges to by shrinking a rational
    // enclosure of alpha_n until it separates them.
    const QuadraticSurd plus = make_surd(-poly.B, 2 * poly.A, D);
    const QuadraticSurd minus = make_surd(poly.B, -2 * poly.A, D);

    const FiniteWord pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(r));
    const FiniteWord cyc(digits.begin() + static_cast<std::ptrdiff_t>(r),
                         digits.begin() + static_cast<std::ptrdiff_t>(r + s));
    const InfiniteWord alpha_n = eventually_periodic_word(pre, cyc);

    for (std::size_t L = r + s + 2; L <= 64 * (r + s) + 512; L *= 2) {
        const Enclosure e = alpha_enclosure(alpha_n, L);
        const bool plus_in = surd_cmp_rational(plus, e.lo) >= 0 && surd_cmp_rational(plus, e.hi) <= 0;
        const bool minus_in =
            surd_cmp_rational(minus, e.lo) >= 0 && surd_cmp_rational(minus, e.hi) <= 0;
        if (plus_in && !minus_in) {
            out.root = plus;
            return out;
        }
        if (minus_in && !plus_in) {
            out.root = minus;
            return out;
        }
        if (!plus_in && !minus_in) break;  // neither root: defect upstream
    }
    throw std::logic_error("could not separate the roots of the approximant polynomial");
}

Approximant build_Pn_preperiodic(const InfiniteWord& a, std::size_t r, std::size_t s) {
    const FiniteWord d = a.prefix(r + s);
    return build_Pn_preperiodic(std::span<const Letter>(d), r, s);
}

Enclosure evaluate_poly_enclosure(const QuadraticPoly& P, const Enclosure& e) {
    if (e.lo > e.hi) throw std::invalid_argument("malformed enclosure");
    BigRat lo = P.eval(e.lo), hi = P.eval(e.hi);
    if (lo > hi) std::swap(lo, hi);
    if (P.A != 0) {
        const BigRat vertex = make_rat(-P.B, 2 * P.A);
        if (e.lo < vertex && vertex < e.hi) {
            const BigRat v = P.eval(vertex);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    return {lo, hi};
}

ContinuantDiagnostics continuant_checks(std::span<const Letter> digits) {
    const std::size_t N = digits.size();
    if (N < 4) throw std::invalid_argument("continuant checks need N >= 4");
    const auto conv = convergents(digits);

    ContinuantDiagnostics out;
    out.doubling_ok = true;
    for (std::size_t l = 0; l + 2 <= N; ++l)
        if (conv[l + 2].q < 2 * conv[l].q) out.doubling_ok = false;

    out.superadditive_ok = true;
    for (std::size_t m = 1; m <= N / 2; ++m)
        if (conv[N].q < conv[m].q * conv[N - m].q) out.superadditive_ok = false;

    out.max_exponent_tail = 0;
    for (std::size_t l = 2; l + 1 <= N; ++l) {
        if (conv[l].q < 2) continue;
        const double e = log_big(conv[l + 1].q) / log_big(conv[l].q);
        out.growth_exponents.emplace_back(l, e);
        if (l >= 20) out.max_exponent_tail = std::max(out.max_exponent_tail, e);
    }
    return out;
}

ContinuantDiagnostics continuant_checks(const InfiniteWord& a, std::size_t N) {
    const FiniteWord d = a.prefix(N);
    return continuant_checks(std::span<const Letter>(d));
}

}  // namespace cfst
