#pragma once

// Finite-evidence certificates. A scan of N letters can exhibit witnesses
// and growth estimates but can never decide the hypotheses outright, so
// verdicts are labelled evidence, with every threshold recorded in the
// report for the reader to judge.

#include "cfst/cf.hpp"
#include "cfst/numeric.hpp"
#include "cfst/repetition.hpp"
#include "cfst/words.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cfst {

enum class TheoremId { T1a, T1b, T2, C1 };
enum class Verdict { evidence_transcendental, evidence_quadratic_or_rational, inconclusive };

std::string to_string(TheoremId id);
std::string to_string(Verdict v);

struct InequalityCheck {
    bool holds = false;
    double threshold = 0;  // (2 wprime + 1) log M / log m - wprime
    double margin = 0;     // w - threshold
};

// Throws std::domain_error naming the growth gate when m_hat <= 1.
InequalityCheck check_inequality_1(const BigRat& w, const BigRat& wprime, double M_hat,
                                   double m_hat);

// Per-witness approximant diagnostics mirroring the proof quantities: the
// rigorous enclosure of P_n(alpha), the exact |q_s alpha - p_s| <= 1/q_s
// check, and the monitored ratio against q_r q_{r+s} q_{r+s+m}^{-2} (the
// witness exponent plays the role of w, so r + [w s] = r + s + m).
struct WitnessDiagnostics {
    RepetitionWitness witness;
    QuadraticPoly poly;
    std::optional<QuadraticSurd> root;
    ApproximantStatus status = ApproximantStatus::ok;
    Enclosure pn_alpha{BigRat(0), BigRat(0)};  // signed enclosure of P_n(alpha)
    BigRat pn_abs_hi;                          // sup of |P_n(alpha)| over it
    bool q_s_inequality_ok = false;            // (4): |q_s alpha - p_s| <= 1/q_s
    std::optional<bool> pure_bound_ok;         // r = 0 only: sup < q_s^{-2}
    BigInt q_r, q_rs, q_agree;                 // q_r, q_{r+s}, q_{r+s+m}
    double bound_ratio = 0;                    // monitored, never asserted
};

WitnessDiagnostics approximant_gap_report(std::span<const Letter> digits,
                                          const RepetitionWitness& wit);
WitnessDiagnostics approximant_gap_report(const InfiniteWord& a, const RepetitionWitness& wit,
                                          std::size_t N);

struct CriterionReport {
    TheoremId theorem = TheoremId::T1a;
    BigRat w, wprime;
    std::size_t N = 0;
    std::size_t min_witnesses = 3;
    double required_margin = 0;  // safety factor on inequality (1)
    std::vector<RepetitionWitness> witnesses;
    std::optional<GrowthStats> growth;
    std::optional<PeriodicityEvidence> periodicity;
    std::optional<InequalityCheck> inequality;
    Verdict verdict = Verdict::inconclusive;
    std::vector<WitnessDiagnostics> diagnostics;
};

enum class Theorem1Mode { w_at_least_2, w_above_1 };

// Clause 1 (w >= 2, no growth hypothesis) or clause 2 (best exhibited
// exponent w > 1 plus bounded-growth evidence).
CriterionReport certify_theorem1(const InfiniteWord& a, std::size_t N, Theorem1Mode mode,
                                 std::size_t min_witnesses = 3);

// Condition (**)_{w,w'} witnesses (last-letter normalized) gated by
// inequality (1) evaluated on the measured growth window.
CriterionReport certify_theorem2(const InfiniteWord& a, std::size_t N, const BigRat& w,
                                 const BigRat& wprime, std::size_t min_witnesses = 3,
                                 double required_margin = 0.05);

}  // namespace cfst
