#include "cfst/cf.hpp"

#include "cfst/words.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace cfst;

namespace {

InfiniteWord fib_cf() {
    return coded_word(fixed_point(parse_morphism("0->01;1->0"), 0), parse_coding("0=>1;1=>2"));
}

FiniteWord random_digits(std::mt19937& rng, std::size_t len, Letter hi) {
    std::uniform_int_distribution<Letter> dist(1, hi);
    FiniteWord w(len);
    for (auto& x : w) x = dist(rng);
    return w;
}

}  // namespace

TEST_CASE("convergents for the classical inputs") {
    const auto golden = convergents(periodic_word({1}), 6);
    const std::vector<long> fib_q = {1, 1, 2, 3, 5, 8};
    for (std::size_t l = 0; l < 6; ++l) CHECK(golden[l].q == fib_q[l]);
    CHECK(golden[5].p == 5);  // p_l = q_{l-1} for all-ones

    const auto silver = convergents(periodic_word({2}), 5);
    const std::vector<long> pell_q = {2, 5, 12, 29};
    for (std::size_t l = 1; l <= 4; ++l) CHECK(silver[l].q == pell_q[l - 1]);
}

TEST_CASE("unimodularity on random continued fractions") {
    std::mt19937 rng(2024);
    for (int t = 0; t < 100; ++t) {
        const FiniteWord d = random_digits(rng, 60, 9);
        const auto conv = convergents(std::span<const Letter>(d));
        for (std::size_t l = 1; l < conv.size(); ++l) {
            const BigInt det = conv[l].p * conv[l - 1].q - conv[l - 1].p * conv[l].q;
            CHECK((det == 1 || det == -1));
        }
    }
}

TEST_CASE("convergents reject non-positive digits") {
    const FiniteWord bad = {1, 0, 2};
    CHECK_THROWS_AS(convergents(std::span<const Letter>(bad)), std::domain_error);
}

TEST_CASE("alpha_enclosure brackets the value") {
    SUBCASE("golden ratio conjugate") {
        const Enclosure e = alpha_enclosure(periodic_word({1}), 4);
        CHECK(e.lo == BigRat(3, 5));
        CHECK(e.hi == BigRat(5, 8));
        const QuadraticSurd golden = make_surd(-1, 2, 5);  // (sqrt5 - 1)/2
        CHECK(surd_cmp_rational(golden, e.lo) >= 0);
        CHECK(surd_cmp_rational(golden, e.hi) <= 0);
    }
    SUBCASE("sqrt2 - 1") {
        const Enclosure e = alpha_enclosure(periodic_word({2}), 3);
        const QuadraticSurd s = make_surd(-1, 1, 2);
        CHECK(surd_cmp_rational(s, e.lo) >= 0);
        CHECK(surd_cmp_rational(s, e.hi) <= 0);
    }
    SUBCASE("width bound 1/q_L^2 on random CFs") {
        std::mt19937 rng(5);
        for (int t = 0; t < 50; ++t) {
            const FiniteWord d = random_digits(rng, 52, 6);
            const auto conv = convergents(std::span<const Letter>(d));
            std::uniform_int_distribution<std::size_t> ld(1, 50);
            const std::size_t L = ld(rng);
            const Enclosure e = alpha_enclosure(conv, L);
            CHECK(e.width() <= BigRat(BigInt(1), conv[L].q * conv[L].q));
        }
    }
}

TEST_CASE("growth stats hit the classical limits") {
    const GrowthStats g1 = growth_stats(periodic_word({1}), 64);
    CHECK(std::abs(g1.M_hat - 1.6180) < 1e-2);
    CHECK(g1.m_hat <= g1.M_hat);
    CHECK(g1.m_hat >= 1.6 - 0.05);
    CHECK(g1.bounded_evidence);

    const GrowthStats g2 = growth_stats(periodic_word({2}), 64);
    CHECK(std::abs(g2.M_hat - 2.4142) < 1e-2);

    SUBCASE("stability under doubling N") {
        for (const InfiniteWord& w : {periodic_word({1, 2}), fib_cf()}) {
            const GrowthStats a = growth_stats(w, 64);
            const GrowthStats b = growth_stats(w, 128);
            CHECK(std::abs(a.M_hat - b.M_hat) / b.M_hat < 0.05);
            CHECK(std::abs(a.m_hat - b.m_hat) / b.m_hat < 0.05);
        }
    }
}

TEST_CASE("pure periodic approximant polynomial") {
    SUBCASE("s=1, a1=1: golden") {
        const auto ap = build_Pn_pure(periodic_word({1}), 1);
        REQUIRE(ap.status == ApproximantStatus::ok);
        CHECK(ap.poly.A == 1);
        CHECK(ap.poly.B == 1);
        CHECK(ap.poly.C == -1);
        CHECK(surd_equal(*ap.root, make_surd(-1, 2, 5)));
    }
    SUBCASE("s=1, a1=2: sqrt2 - 1") {
        const auto ap = build_Pn_pure(periodic_word({2}), 1);
        REQUIRE(ap.status == ApproximantStatus::ok);
        CHECK(ap.poly.A == 1);
        CHECK(ap.poly.B == 2);
        CHECK(ap.poly.C == -1);
        CHECK(surd_equal(*ap.root, make_surd(-1, 1, 2)));
    }
    SUBCASE("P(alpha_n) = 0 exactly, several periods of the Fibonacci CF") {
        for (std::size_t s : {1u, 2u, 3u, 5u, 8u, 13u}) {
            const auto ap = build_Pn_pure(fib_cf(), s);
            REQUIRE(ap.status == ApproximantStatus::ok);
            CHECK(surd_is_root(*ap.root, ap.poly));
            // root lies in (0,1)
            CHECK(surd_cmp_rational(*ap.root, BigRat(0)) > 0);
            CHECK(surd_cmp_rational(*ap.root, BigRat(1)) < 0);
        }
    }
}

TEST_CASE("preperiodic approximant polynomial") {
    SUBCASE("r=1, s=1 on 1,2,2,2,...") {
        const auto ap = build_Pn_preperiodic(eventually_periodic_word({1}, {2}), 1, 1);
        REQUIRE(ap.status == ApproximantStatus::ok);
        CHECK(ap.poly.A == 2);
        CHECK(ap.poly.B == 0);
        CHECK(ap.poly.C == -1);
        CHECK(surd_equal(*ap.root, make_surd(0, 2, 2)));  // 1/sqrt2
    }
    SUBCASE("r=0 is rejected") {
        CHECK_THROWS_AS(build_Pn_preperiodic(periodic_word({2}), 0, 1), std::invalid_argument);
    }
    SUBCASE("random minimal words round-trip through the surd expansion") {
        std::mt19937 rng(31415);
        std::uniform_int_distribution<std::size_t> rd(1, 5), sd(1, 5);
        std::uniform_int_distribution<Letter> digit(1, 4);
        int done = 0;
        while (done < 100) {
            const std::size_t r = rd(rng), s = sd(rng);
            FiniteWord pre(r), cyc(s);
            for (auto& x : pre) x = digit(rng);
            for (auto& x : cyc) x = digit(rng);
            // keep (r, s) the minimal representation: primitive period and
            // differing last letters of preperiod and period
            bool primitive = true;
            for (std::size_t d = 1; d < s; ++d) {
                if (s % d != 0) continue;
                bool pow = true;
                for (std::size_t i = 0; i < s; ++i)
                    if (cyc[i] != cyc[i % d]) pow = false;
                if (pow) primitive = false;
            }
            if (!primitive || pre[r - 1] == cyc[s - 1]) continue;
            ++done;

            const auto ap = build_Pn_preperiodic(eventually_periodic_word(pre, cyc), r, s);
            REQUIRE(ap.status == ApproximantStatus::ok);
            CHECK(surd_is_root(*ap.root, ap.poly));
            const SurdCf cf = surd_cf_expansion(*ap.root);
            CHECK(cf.preperiod == pre);
            CHECK(cf.period == cyc);
        }
    }
}

TEST_CASE("surd expansion of classical values") {
    SUBCASE("sqrt2") {
        const SurdCf cf = surd_cf_expansion(make_surd(0, 1, 2));
        CHECK(cf.preperiod == FiniteWord{1});
        CHECK(cf.period == FiniteWord{2});
    }
    SUBCASE("golden ratio conjugate") {
        const SurdCf cf = surd_cf_expansion(make_surd(-1, 2, 5));
        CHECK(cf.preperiod.empty());
        CHECK(cf.period == FiniteWord{1});
    }
    SUBCASE("root of 2x^2 - 1") {
        const SurdCf cf = surd_cf_expansion(make_surd(0, 2, 2));
        CHECK(cf.preperiod == FiniteWord{1});
        CHECK(cf.period == FiniteWord{2});
    }
    SUBCASE("negative and rational inputs are rejected") {
        CHECK_THROWS_AS(surd_cf_expansion(make_surd(-10, 1, 2)), std::domain_error);
        CHECK_THROWS_AS(make_surd(0, 1, 9), std::domain_error);  // perfect square
        CHECK_THROWS_AS(make_surd(0, 0, 2), std::domain_error);  // zero denominator
    }
}

TEST_CASE("make_surd canonicalizes the divisibility invariant") {
    const QuadraticSurd s = make_surd(1, 3, 2);  // 3 does not divide 2 - 1
    CHECK((s.D - s.P * s.P) % s.Q == 0);
    CHECK(surd_equal(s, QuadraticSurd{1, 3, 2}));
}

TEST_CASE("poly enclosure evaluation") {
    const QuadraticPoly P{1, 1, -1};  // x^2 + x - 1
    SUBCASE("golden enclosure straddles zero and is tight") {
        const Enclosure e = alpha_enclosure(periodic_word({1}), 20);
        const Enclosure out = evaluate_poly_enclosure(P, e);
        CHECK(out.lo <= 0);
        CHECK(out.hi >= 0);
        CHECK(out.width() < BigRat(1, 1000000));
    }
    SUBCASE("degenerate interval") {
        const Enclosure point{BigRat(1, 2), BigRat(1, 2)};
        const Enclosure out = evaluate_poly_enclosure(P, point);
        CHECK(out.lo == out.hi);
        CHECK(out.lo == P.eval(BigRat(1, 2)));
    }
    SUBCASE("midpoint containment, randomized, with vertex inside") {
        std::mt19937 rng(8);
        std::uniform_int_distribution<int> coeff(-5, 5);
        for (int t = 0; t < 200; ++t) {
            QuadraticPoly Q{coeff(rng), coeff(rng), coeff(rng)};
            if (Q.A == 0) Q.A = 1;
            const BigRat lo(coeff(rng), 7), width(std::abs(coeff(rng)) + 1, 5);
            const Enclosure e{lo, lo + width};
            const Enclosure out = evaluate_poly_enclosure(Q, e);
            const BigRat mid = e.midpoint();
            CHECK(out.lo <= Q.eval(mid));
            CHECK(Q.eval(mid) <= out.hi);
            CHECK(out.lo <= Q.eval(e.lo));
            CHECK(out.lo <= Q.eval(e.hi));
        }
    }
}

TEST_CASE("enclosure soundness: approximant roots sit inside their enclosures") {
    for (std::size_t s : {1u, 2u, 3u, 5u, 8u}) {
        const auto ap = build_Pn_pure(fib_cf(), s);
        REQUIRE(ap.root.has_value());
        const FiniteWord cyc = fib_cf().prefix(s);
        const InfiniteWord alpha_n = periodic_word(cyc);
        const Enclosure e = alpha_enclosure(alpha_n, 2 * s + 4);
        CHECK(surd_cmp_rational(*ap.root, e.lo) >= 0);
        CHECK(surd_cmp_rational(*ap.root, e.hi) <= 0);
    }
}

TEST_CASE("continuant diagnostics") {
    const auto diag = continuant_checks(fib_cf(), 120);
    CHECK(diag.doubling_ok);
    CHECK(diag.superadditive_ok);
    CHECK(diag.max_exponent_tail < 1.1);

    const auto diag1 = continuant_checks(periodic_word({1}), 64);
    CHECK(diag1.doubling_ok);      // Fibonacci: q_{l+2} = q_{l+1} + q_l >= 2 q_l
    CHECK(diag1.superadditive_ok); // F_{m+n+1} >= F_{m+1} F_{n+1}
}
