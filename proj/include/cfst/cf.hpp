#pragma once

// Exact continued-fraction arithmetic for alpha = [0; a_1, a_2, ...]:
// convergents, rigorous rational enclosures, denominator growth statistics,
// the two quadratic approximant polynomials obtained by completing a prefix
// by periodicity, and exact quadratic-surd arithmetic with CF expansion.

#include "cfst/numeric.hpp"
#include "cfst/words.hpp"

#include <optional>
#include <span>
#include <vector>

namespace cfst {

struct Convergent {
    std::size_t index = 0;
    BigInt p;
    BigInt q;
};

// Indices 0..digits.size() with seeds p_0 = 0, q_0 = 1. Throws on a partial
// quotient < 1.
std::vector<Convergent> convergents(std::span<const Letter> digits);
std::vector<Convergent> convergents(const InfiniteWord& a, std::size_t N);

struct Enclosure {
    BigRat lo, hi;

    BigRat width() const { return hi - lo; }
    BigRat midpoint() const { return (lo + hi) / 2; }
    bool contains(const BigRat& x) const { return lo <= x && x <= hi; }
};

// [p_L/q_L, p_{L+1}/q_{L+1}] ordered by parity; width 1/(q_L q_{L+1}) < q_L^-2.
Enclosure alpha_enclosure(const std::vector<Convergent>& conv, std::size_t L);
Enclosure alpha_enclosure(const InfiniteWord& a, std::size_t L);

struct GrowthStats {
    std::size_t N = 0;
    double M_hat = 0;  // max of q_l^{1/l} over the tail window
    double m_hat = 0;  // min over the same window
    std::size_t window_lo = 0, window_hi = 0;
    bool bounded_evidence = false;  // q_l^{1/l} < 2*M_hat over [4, N]
};

// Tail-window estimates of limsup/liminf q_l^{1/l}; logs of the exact
// integers are taken at high precision, so overflow never enters.
GrowthStats growth_stats(const InfiniteWord& a, std::size_t N);
GrowthStats growth_stats(std::span<const Letter> digits);

struct QuadraticPoly {
    BigInt A, B, C;  // A X^2 + B X + C

    BigInt discriminant() const { return B * B - 4 * A * C; }
    BigRat eval(const BigRat& x) const { return (BigRat(A) * x + B) * x + C; }
};

// (P + sqrt(D)) / Q with D > 0 non-square, Q != 0 and Q | (D - P^2).
// Triples are not reduced; compare values with surd_equal.
struct QuadraticSurd {
    BigInt P, Q, D;
};

// Canonicalizes (multiplying through by |Q| when needed) and validates.
QuadraticSurd make_surd(BigInt P, BigInt Q, BigInt D);

int surd_cmp_rational(const QuadraticSurd& x, const BigRat& r);  // -1 / 0 / +1
bool surd_equal(const QuadraticSurd& x, const QuadraticSurd& y);
bool surd_is_root(const QuadraticSurd& x, const QuadraticPoly& poly);  // exact
double surd_to_double(const QuadraticSurd& x);

enum class ApproximantStatus {
    ok,
    degenerate_linear,    // leading coefficient vanished
    degenerate_rational,  // square discriminant: rational root
};

struct Approximant {
    QuadraticPoly poly;
    std::optional<QuadraticSurd> root;  // present iff status == ok
    ApproximantStatus status = ApproximantStatus::ok;
};

// Purely periodic approximant: alpha_n = [0; (a_1..a_s)^periodic], root of
// q_{s-1} X^2 + (q_s - p_{s-1}) X - p_s.
Approximant build_Pn_pure(std::span<const Letter> digits, std::size_t s);
Approximant build_Pn_pure(const InfiniteWord& a, std::size_t s);

// Preperiodic approximant: alpha_n = [0; a_1..a_r, (a_{r+1}..a_{r+s})^periodic]
// with r >= 1; coefficients are the 2x2 minors of consecutive convergents at
// r and r+s.
Approximant build_Pn_preperiodic(std::span<const Letter> digits, std::size_t r, std::size_t s);
Approximant build_Pn_preperiodic(const InfiniteWord& a, std::size_t r, std::size_t s);

// Rigorous range enclosure of P over e (exact rational endpoints; splits at
// the vertex when it falls inside).
Enclosure evaluate_poly_enclosure(const QuadraticPoly& P, const Enclosure& e);

struct SurdCf {
    FiniteWord preperiod;
    FiniteWord period;
};

// Exact eventually periodic expansion; the leading 0 of a value in (0,1) is
// dropped, so the digits line up with the word layer's a_1 a_2 ...
// Cycle detected on repeated (P, Q) states; throws if max_steps is hit.
SurdCf surd_cf_expansion(const QuadraticSurd& x, std::size_t max_steps = 4096);

struct ContinuantDiagnostics {
    bool doubling_ok = false;       // q_{l+2} >= 2 q_l everywhere checked
    bool superadditive_ok = false;  // q_{m+n} >= q_m q_n on the sampled splits
    // Monitored only: log q_{l+1} / log q_l for l with q_l >= 2.
    std::vector<std::pair<std::size_t, double>> growth_exponents;
    double max_exponent_tail = 0;  // max over l >= 20
};

ContinuantDiagnostics continuant_checks(const InfiniteWord& a, std::size_t N);
ContinuantDiagnostics continuant_checks(std::span<const Letter> digits);

}  // namespace cfst
