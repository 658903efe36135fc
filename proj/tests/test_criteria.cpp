#include "cfst/criteria.hpp"

#include "cfst/json_io.hpp"
#include "cfst/words.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace cfst;

namespace {

InfiniteWord fib_cf() {
    return coded_word(fixed_point(parse_morphism("0->01;1->0"), 0), parse_coding("0=>1;1=>2"));
}

// The Fibonacci CF word with one extra partial quotient up front.
InfiniteWord shifted_fib_cf() {
    class Shifted final : public WordSource {
      public:
        explicit Shifted(InfiniteWord inner) : inner_(std::move(inner)) {}
        WordKind kind() const override { return inner_.kind(); }
        FiniteWord prefix(std::size_t n) const override {
            if (n == 0) return {};
            FiniteWord out = {3};
            const FiniteWord rest = inner_.prefix(n - 1);
            out.insert(out.end(), rest.begin(), rest.end());
            return out;
        }

      private:
        InfiniteWord inner_;
    };
    return InfiniteWord(std::make_shared<Shifted>(fib_cf()));
}

FiniteWord counting_digits(std::size_t n) {
    FiniteWord w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<Letter>(i + 1);
    return w;
}

}  // namespace

TEST_CASE("inequality (1) gate") {
    SUBCASE("M = m reduces to w > w' + 1") {
        for (double v : {1.3, 1.618, 2.4142, 10.0}) {
            const auto c = check_inequality_1(BigRat(2), BigRat(1, 2), v, v);
            CHECK(std::abs(c.threshold - 1.5) < 1e-12);
            CHECK(c.holds);
        }
        const auto c0 = check_inequality_1(BigRat(3, 2), BigRat(0), 1.7, 1.7);
        CHECK(std::abs(c0.threshold - 1.0) < 1e-12);
    }
    SUBCASE("worked example: log ratio 1.2") {
        const double m = std::exp(1.0), M = std::exp(1.2);
        const auto c = check_inequality_1(BigRat(2), BigRat(1), M, m);
        CHECK(std::abs(c.threshold - 2.6) < 1e-9);
        CHECK_FALSE(c.holds);
        CHECK(c.margin < 0);
    }
    SUBCASE("degenerate growth throws, naming the gate") {
        CHECK_THROWS_WITH_AS(check_inequality_1(BigRat(2), BigRat(0), 1.5, 1.0),
                             doctest::Contains("growth gate"), std::domain_error);
    }
    SUBCASE("margin is monotone in w at fixed threshold") {
        const auto lo = check_inequality_1(BigRat(2), BigRat(1), 1.9, 1.7);
        const auto hi = check_inequality_1(BigRat(3), BigRat(1), 1.9, 1.7);
        CHECK(hi.threshold == lo.threshold);
        CHECK(hi.margin > lo.margin);
    }
}

TEST_CASE("theorem 1 certificates") {
    SUBCASE("Fibonacci CF word: transcendence evidence with w >= 2") {
        const auto report = certify_theorem1(fib_cf(), 2000, Theorem1Mode::w_at_least_2);
        CHECK(report.theorem == TheoremId::T1a);
        CHECK(report.verdict == Verdict::evidence_transcendental);
        CHECK(report.witnesses.size() >= 5);
        CHECK_FALSE(report.growth.has_value());  // absent for the w >= 2 clause
        CHECK_FALSE(report.periodicity.has_value());
        REQUIRE(!report.diagnostics.empty());
        for (const auto& d : report.diagnostics) {
            CHECK(d.status == ApproximantStatus::ok);
            CHECK(d.q_s_inequality_ok);
            REQUIRE(d.pure_bound_ok.has_value());
            CHECK(*d.pure_bound_ok);
        }
    }
    SUBCASE("periodic CF word: quadratic evidence") {
        const auto report = certify_theorem1(periodic_word({1, 2}), 1000, Theorem1Mode::w_at_least_2);
        CHECK(report.verdict == Verdict::evidence_quadratic_or_rational);
        REQUIRE(report.periodicity.has_value());
        CHECK(report.periodicity->preperiod == 0);
        CHECK(report.periodicity->period == 2);
    }
    SUBCASE("strictly increasing digits: inconclusive") {
        const auto report = certify_theorem1(explicit_prefix_word(counting_digits(1000)), 1000,
                                             Theorem1Mode::w_at_least_2);
        CHECK(report.verdict == Verdict::inconclusive);
        CHECK(report.witnesses.empty());
        CHECK_FALSE(report.periodicity.has_value());
    }
    SUBCASE("mode w > 1 reports the best exhibited exponent") {
        const auto report = certify_theorem1(fib_cf(), 2000, Theorem1Mode::w_above_1);
        CHECK(report.theorem == TheoremId::T1b);
        CHECK(report.verdict == Verdict::evidence_transcendental);
        CHECK(report.w > 1);
        REQUIRE(report.growth.has_value());
        CHECK(report.growth->bounded_evidence);
        CHECK(report.witnesses.size() >= 3);
        for (const auto& wit : report.witnesses) CHECK(wit.exponent() >= report.w);
    }
}

TEST_CASE("theorem 2 certificates") {
    SUBCASE("shifted Fibonacci CF: witnesses with positive offset, gate evaluated") {
        const auto report = certify_theorem2(shifted_fib_cf(), 2000, BigRat(2), BigRat(1));
        CHECK(report.theorem == TheoremId::T2);
        REQUIRE(report.inequality.has_value());
        bool has_offset = false;
        for (const auto& wit : report.witnesses)
            if (wit.r >= 1) has_offset = true;
        CHECK(has_offset);
        // every reported witness is normalized: last letters differ or r = 0
        const FiniteWord p = shifted_fib_cf().prefix(2000);
        for (const auto& wit : report.witnesses) {
            CHECK((wit.r == 0 || p[wit.r - 1] != p[wit.r + wit.s - 1]));
            CHECK(verify_witness(std::span<const Letter>(p), wit));
        }
    }
    SUBCASE("small wprime turns the gate on and yields transcendence evidence") {
        const auto report = certify_theorem2(shifted_fib_cf(), 2000, BigRat(2), BigRat(1, 2));
        REQUIRE(report.inequality.has_value());
        CHECK(report.inequality->holds);
        CHECK(report.verdict == Verdict::evidence_transcendental);
        CHECK(report.witnesses.size() >= 3);
    }
    SUBCASE("periodic input is quadratic evidence regardless of parameters") {
        const auto report = certify_theorem2(periodic_word({1, 2}), 1000, BigRat(3), BigRat(2));
        CHECK(report.verdict == Verdict::evidence_quadratic_or_rational);
        REQUIRE(report.periodicity.has_value());
    }
    SUBCASE("wprime = 0 searches prefix powers only") {
        const auto report = certify_theorem2(fib_cf(), 1000, BigRat(2), BigRat(0));
        const auto star = detect_star(fib_cf(), BigRat(2), 1000, 3);
        REQUIRE(report.witnesses.size() == star.witnesses.size());
        for (std::size_t i = 0; i < report.witnesses.size(); ++i) {
            CHECK(report.witnesses[i].r == 0);
            CHECK(report.witnesses[i].s == star.witnesses[i].s);
        }
    }
}

TEST_CASE("verdict soundness invariant") {
    std::vector<InfiniteWord> words = {fib_cf(), periodic_word({1, 2}), periodic_word({3}),
                                       eventually_periodic_word({5, 1}, {1, 2, 2}),
                                       explicit_prefix_word(counting_digits(600))};
    for (const auto& w : words) {
        const auto r1 = certify_theorem1(w, 600, Theorem1Mode::w_at_least_2);
        const auto r2 = certify_theorem2(w, 600, BigRat(2), BigRat(1));
        for (const auto& rep : {r1, r2}) {
            if (rep.verdict == Verdict::evidence_transcendental)
                CHECK_FALSE(rep.periodicity.has_value());
            CHECK((rep.verdict == Verdict::evidence_quadratic_or_rational) ==
                  rep.periodicity.has_value());
        }
    }
}

TEST_CASE("approximant gap report") {
    SUBCASE("(4) holds on random CFs") {
        std::mt19937 rng(626);
        std::uniform_int_distribution<Letter> digit(1, 6);
        for (int t = 0; t < 100; ++t) {
            FiniteWord d(80);
            for (auto& x : d) x = digit(rng);
            const std::span<const Letter> sp(d);
            std::uniform_int_distribution<std::size_t> sd(1, 20);
            const std::size_t s = sd(rng);
            bool trunc = false;
            const std::size_t m = shifted_lcp(sp, 0, s, &trunc);
            if (m == 0) continue;
            const auto diag = approximant_gap_report(sp, RepetitionWitness{0, s, m, trunc});
            CHECK(diag.q_s_inequality_ok);
        }
    }
    SUBCASE("periodic word, witness = full period: P_n(alpha) straddles zero") {
        const FiniteWord p = periodic_word({2, 1}).prefix(400);
        const std::span<const Letter> sp(p);
        bool trunc = false;
        const std::size_t m = shifted_lcp(sp, 0, 2, &trunc);
        const auto diag = approximant_gap_report(sp, RepetitionWitness{0, 2, m, trunc});
        CHECK(diag.pn_alpha.lo <= 0);
        CHECK(diag.pn_alpha.hi >= 0);
    }
    SUBCASE("witness must verify") {
        const FiniteWord p = fib_cf().prefix(100);
        CHECK_THROWS_AS(approximant_gap_report(std::span<const Letter>(p),
                                               RepetitionWitness{0, 4, 4, false}),
                        std::invalid_argument);
    }
}

TEST_CASE("reported approximants expand back to their defining digits") {
    const auto report = certify_theorem1(fib_cf(), 500, Theorem1Mode::w_at_least_2);
    const FiniteWord p = fib_cf().prefix(500);
    for (const auto& d : report.diagnostics) {
        REQUIRE(d.root.has_value());
        const SurdCf cf = surd_cf_expansion(*d.root);
        CHECK(cf.preperiod.empty());
        CHECK(cf.period == FiniteWord(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(d.witness.s)));
    }
}

TEST_CASE("criterion report serializes with the documented fields") {
    const auto report = certify_theorem2(shifted_fib_cf(), 400, BigRat(2), BigRat(1, 2));
    const auto j = io::to_json(report);
    for (const char* key :
         {"theorem", "params", "N", "witnesses", "growth", "periodicity", "verdict", "diagnostics"})
        CHECK(j.contains(key));
    CHECK(j["params"].contains("w"));
    CHECK(j["params"].contains("wprime"));
    CHECK(j["growth"]["approx"] == true);
    if (!j["witnesses"].empty()) {
        const auto& w = j["witnesses"][0];
        for (const char* key : {"r", "s", "m", "exponent", "truncated"}) CHECK(w.contains(key));
        CHECK(w["exponent"].is_string());
    }
}
