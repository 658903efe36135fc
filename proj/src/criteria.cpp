#include "cfst/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cfst {

std::string to_string(TheoremId id) {
    switch (id) {
        case TheoremId::T1a: return "T1a";
        case TheoremId::T1b: return "T1b";
        case TheoremId::T2: return "T2";
        case TheoremId::C1: return "C1";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::evidence_transcendental: return "evidence_transcendental";
        case Verdict::evidence_quadratic_or_rational: return "evidence_quadratic_or_rational";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

InequalityCheck check_inequality_1(const BigRat& w, const BigRat& wprime, double M_hat,
                                   double m_hat) {
    if (!(M_hat >= m_hat)) throw std::domain_error("growth gate: M_hat < m_hat");
    if (m_hat <= 1.0)
        throw std::domain_error("growth gate: m_hat <= 1, log m vanishes and inequality (1) "
                                "is undefined");
    const double wp = rat_to_double(wprime);
    const double log_ratio = std::log(M_hat) / std::log(m_hat);
    InequalityCheck out;
    out.threshold = (2.0 * wp + 1.0) * log_ratio - wp;
    out.margin = rat_to_double(w) - out.threshold;
    out.holds = out.margin > 0;
    return out;
}

namespace {

constexpr std::size_t kMaxDiagnostics = 12;

BigRat abs_hi(const Enclosure& e) {
    const BigRat a = abs(e.lo), b = abs(e.hi);
    return std::max(a, b);
}

}  // namespace

WitnessDiagnostics approximant_gap_report(std::span<const Letter> digits,
                                          const RepetitionWitness& wit) {
    if (!verify_witness(digits, wit))
        throw std::invalid_argument("witness does not verify against the given prefix");
    const std::size_t agree = wit.r + wit.s + wit.m;  // shared partial quotients
    const std::size_t L_cap = std::min(digits.size(), 4 * agree + 64);
    const auto conv = convergents(digits.first(L_cap));

    WitnessDiagnostics out;
    out.witness = wit;
    Approximant ap = (wit.r == 0) ? build_Pn_pure(digits, wit.s)
                                  : build_Pn_preperiodic(digits, wit.r, wit.s);
    out.poly = ap.poly;
    out.root = ap.root;
    out.status = ap.status;

    out.q_r = conv[wit.r].q;
    out.q_rs = conv[wit.r + wit.s].q;
    out.q_agree = conv[agree].q;

    // Enclosure of P_n(alpha), refined until the pure-witness target
    // q_s^{-2} is resolved or the digits run out.
    const BigRat target = BigRat(BigInt(1), conv[wit.s].q * conv[wit.s].q);
    std::size_t L = std::min(agree + 2, L_cap - 1);
    for (;;) {
        const Enclosure e = alpha_enclosure(conv, L);
        out.pn_alpha = evaluate_poly_enclosure(ap.poly, e);
        out.pn_abs_hi = abs_hi(out.pn_alpha);
        if (wit.r != 0 || out.pn_abs_hi < target) break;
        const std::size_t next = std::min(2 * L, L_cap - 1);
        if (next == L) break;
        L = next;
    }
    if (wit.r == 0) out.pure_bound_ok = out.pn_abs_hi < target;

    // (4): |q_s alpha - p_s| <= 1/q_s, exact at truncation s+1.
    {
        const Enclosure e = alpha_enclosure(conv, wit.s + 1);
        const BigRat lo = BigRat(conv[wit.s].q) * e.lo - conv[wit.s].p;
        const BigRat hi = BigRat(conv[wit.s].q) * e.hi - conv[wit.s].p;
        const BigRat worst = std::max(abs(lo), abs(hi));
        out.q_s_inequality_ok = worst <= BigRat(BigInt(1), conv[wit.s].q);
    }

    // Monitored comparison against q_r q_{r+s} q_{r+s+m}^{-2}; the implied
    // constant is unknown, so this is reported, never asserted.
    const BigRat denom(out.q_r * out.q_rs, out.q_agree * out.q_agree);
    out.bound_ratio = rat_to_double(out.pn_abs_hi / denom);
    return out;
}

WitnessDiagnostics approximant_gap_report(const InfiniteWord& a, const RepetitionWitness& wit,
                                          std::size_t N) {
    const std::size_t want = std::max(N, 4 * (wit.r + wit.s + wit.m) + 64);
    FiniteWord d;
    try {
        d = a.prefix(want);
    } catch (const std::out_of_range&) {
        d = a.prefix(N);  // explicit prefixes: use what the scan had
    }
    return approximant_gap_report(std::span<const Letter>(d), wit);
}

namespace {

void attach_diagnostics(CriterionReport& report, const InfiniteWord& a, std::size_t N) {
    const std::size_t count = std::min(report.witnesses.size(), kMaxDiagnostics);
    for (std::size_t i = 0; i < count; ++i) {
        try {
            report.diagnostics.push_back(approximant_gap_report(a, report.witnesses[i], N));
        } catch (const std::invalid_argument&) {
            // Witness spans the whole available prefix of a non-extensible
            // source; the enclosure has no digits to work with. Skip it.
        }
    }
}

}  // namespace

CriterionReport certify_theorem1(const InfiniteWord& a, std::size_t N, Theorem1Mode mode,
                                 std::size_t min_witnesses) {
    min_witnesses = std::max<std::size_t>(1, min_witnesses);
    const FiniteWord digits = a.prefix(N);
    const std::span<const Letter> sp(digits);
    (void)convergents(sp);  // validates letters >= 1 up front

    CriterionReport report;
    report.theorem = (mode == Theorem1Mode::w_at_least_2) ? TheoremId::T1a : TheoremId::T1b;
    report.N = N;
    report.min_witnesses = min_witnesses;
    report.wprime = BigRat(0);

    if (mode == Theorem1Mode::w_at_least_2) {
        report.w = BigRat(2);
        StarDetection star = detect_star(sp, report.w, min_witnesses);
        report.witnesses = std::move(star.witnesses);
        report.periodicity = star.periodicity;
    } else {
        // The theorem quantifies w > 1 existentially: collect every prefix
        // repetition (exponent > 1) and report the best exponent that still
        // has min_witnesses witnesses below it.
        StarDetection star = detect_star(sp, BigRat(BigInt(N + 1), BigInt(N)), min_witnesses);
        report.periodicity = star.periodicity;
        if (star.witnesses.size() >= min_witnesses) {
            std::vector<BigRat> exps;
            exps.reserve(star.witnesses.size());
            for (const auto& wit : star.witnesses) exps.push_back(wit.exponent());
            std::sort(exps.begin(), exps.end(), std::greater<>());
            report.w = exps[min_witnesses - 1];
            for (const auto& wit : star.witnesses)
                if (wit.exponent() >= report.w) report.witnesses.push_back(wit);
        } else {
            report.w = BigRat(1);  // no exhibited exponent clears 1
            report.witnesses = std::move(star.witnesses);
        }
        report.growth = growth_stats(sp);
    }

    const bool enough = report.witnesses.size() >= min_witnesses;
    const bool growth_ok =
        (mode == Theorem1Mode::w_at_least_2) || (report.growth && report.growth->bounded_evidence);
    if (report.periodicity)
        report.verdict = Verdict::evidence_quadratic_or_rational;
    else if (enough && report.w > 1 && growth_ok)
        report.verdict = Verdict::evidence_transcendental;
    else
        report.verdict = Verdict::inconclusive;

    attach_diagnostics(report, a, N);
    return report;
}

CriterionReport certify_theorem2(const InfiniteWord& a, std::size_t N, const BigRat& w,
                                 const BigRat& wprime, std::size_t min_witnesses,
                                 double required_margin) {
    min_witnesses = std::max<std::size_t>(1, min_witnesses);
    const FiniteWord digits = a.prefix(N);
    const std::span<const Letter> sp(digits);

    CriterionReport report;
    report.theorem = TheoremId::T2;
    report.N = N;
    report.min_witnesses = min_witnesses;
    report.w = w;
    report.wprime = wprime;
    report.required_margin = required_margin;

    report.growth = growth_stats(sp);
    report.inequality = check_inequality_1(w, wprime, report.growth->M_hat, report.growth->m_hat);
    report.periodicity = detect_eventual_period(sp);

    for (const auto& wit : detect_star_star(sp, w, wprime))
        report.witnesses.push_back(normalize_witness(sp, wit));

    const bool enough = report.witnesses.size() >= min_witnesses;
    const bool gate = report.inequality->holds && report.inequality->margin >= required_margin;
    if (report.periodicity)
        report.verdict = Verdict::evidence_quadratic_or_rational;
    else if (enough && gate && report.growth->bounded_evidence)
        report.verdict = Verdict::evidence_transcendental;
    else
        report.verdict = Verdict::inconclusive;

    attach_diagnostics(report, a, N);
    return report;
}

}  // namespace cfst
