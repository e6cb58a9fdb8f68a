#include <catch2/catch_amalgamated.hpp>

#include "eqlines/bounds.hpp"

using namespace eqlines;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("gerzon bound") {
    CHECK(gerzon(2) == 3);
    CHECK(gerzon(7) == 28);
    CHECK(gerzon(23) == 276);
    CHECK(gerzon(43) == 946);
    CHECK_THROWS_AS(gerzon(1), std::invalid_argument);
}

TEST_CASE("relative bound at fixed angle") {
    const auto rb = [](int n, long q) { return relative_bound(n, Rational(1, q)); };
    CHECK(rb(22, 5).value() == Rational(176));
    CHECK(rb(23, 5).value() == Rational(276));
    CHECK(rb(24, 5).value() == Rational(576));
    CHECK(rb(42, 7).value() == Rational(288));
    CHECK(rb(43, 7).value() == Rational(344));
    CHECK(rb(47, 7).value() == Rational(1128));
    CHECK_FALSE(rb(25, 5).has_value());  // denominator vanishes at n = 25
    CHECK_FALSE(rb(26, 5).has_value());  // and is negative past it
    CHECK_FALSE(rb(30, 5).has_value());
}

TEST_CASE("angle-1/3 cap in dimension 16 and up") {
    CHECK(lemmens_seidel_third(16) == 30);
    CHECK(lemmens_seidel_third(23) == 44);
    CHECK(lemmens_seidel_third(100) == 198);
    CHECK_THROWS_AS(lemmens_seidel_third(15), std::invalid_argument);
}

TEST_CASE("candidate angles come in ascending k") {
    const auto angles15 = candidate_angles(15);
    REQUIRE(angles15.size() == 2);
    CHECK(angles15[0].k == 2);
    CHECK(angles15[0].a == Rational(1, 3));
    CHECK(angles15[1].k == 3);
    CHECK(angles15[1].a == Rational(1, 5));

    const auto angles40 = candidate_angles(40);
    REQUIRE(angles40.size() == 3);
    CHECK(angles40.back().k == 4);
    CHECK(angles40.back().a == Rational(1, 7));

    const auto angles139 = candidate_angles(139);
    REQUIRE(angles139.size() == 7);
    CHECK(angles139.front().a == Rational(1, 3));
    CHECK(angles139.back().k == 8);
    CHECK(angles139.back().a == Rational(1, 15));

    CHECK_THROWS_AS(candidate_angles(14), std::invalid_argument);
}

TEST_CASE("delsarte LP bound with a valid certificate") {
    // (t^2 - 1/9)^2 vanishes on +-1/3 and has nonnegative expansion in n = 23
    const UniPoly q = UniPoly::monomial(Rational(1), 2) - UniPoly::constant(Rational(1, 9));
    const UniPoly f = q * q;
    CHECK(lp_delsarte(23, {Rational(1, 3), Rational(-1, 3)}, f) == 100);
}

TEST_CASE("delsarte LP rejects bad certificates by name") {
    SECTION("mean term not positive") {
        const UniPoly f = UniPoly::monomial(Rational(1), 1);  // odd, f_0 = 0
        CHECK_THROWS_MATCHES(lp_delsarte(23, {}, f), LpHypothesisError,
                             Catch::Matchers::MessageMatches(ContainsSubstring("f_0")));
    }
    SECTION("negative expansion coefficient") {
        const UniPoly f = UniPoly::constant(Rational(1)) - UniPoly::monomial(Rational(1), 2);
        CHECK_THROWS_MATCHES(
            lp_delsarte(23, {}, f), LpHypothesisError,
            Catch::Matchers::MessageMatches(ContainsSubstring("f_2") &&
                                            ContainsSubstring("negative")));
    }
    SECTION("positive value on an allowed inner product") {
        const UniPoly q =
            UniPoly::monomial(Rational(1), 2) - UniPoly::constant(Rational(1, 9));
        CHECK_THROWS_MATCHES(
            lp_delsarte(23, {Rational(1, 2)}, q * q), LpHypothesisError,
            Catch::Matchers::MessageMatches(ContainsSubstring("f(1/2)") &&
                                            ContainsSubstring("positive")));
    }
}

TEST_CASE("quartic certificate family hits the closed form") {
    const int expected_n[] = {0, 0, 23, 71, 143, 239};
    const long expected_bound[] = {0, 0, 100, 876, 3480, 9640};
    for (int k = 2; k <= 5; ++k) {
        const HarmonicIndex4Bound hb = harmonic_index4_bound(k);
        CHECK(hb.n == expected_n[k]);
        CHECK(hb.a == Rational(1, 2 * k - 1));
        CHECK(hb.bound == Rational(expected_bound[k]));
    }
    CHECK_THROWS_AS(harmonic_index4_bound(1), std::invalid_argument);
}

TEST_CASE("quartic certificate expansion: exact mean term, empty low harmonics") {
    for (int k = 2; k <= 12; ++k) {
        const HarmonicIndex4Bound hb = harmonic_index4_bound(k);
        const GegenbauerExpansion ex = gegenbauer_expand(hb.n, hb.f);
        const Rational odd(2 * static_cast<long>(k) - 1);
        const Rational f0 = Rational(8) * Rational(k) * Rational(k - 1) /
                            (odd.pow(4) * (Rational(12) * Rational(k) * Rational(k) -
                                           Rational(12) * Rational(k) + Rational(1)));
        CHECK(ex.coeff(0) == f0);
        CHECK(ex.coeff(1) == Rational(0));
        CHECK(ex.coeff(2) == Rational(0));
        CHECK(ex.coeff(3) == Rational(0));
        CHECK(ex.coeff(4) > Rational(0));
    }
}

TEST_CASE("degree-4 Gegenbauer value matches the certificate bound exactly") {
    for (int k = 2; k <= 8; ++k) {
        const long odd = 2 * static_cast<long>(k) - 1;
        const int n = static_cast<int>(3 * odd * odd - 4);
        const Rational g4 = gegenbauer_eval(n, 4, Rational(1, odd));
        REQUIRE(g4 < Rational(0));
        CHECK(g4.abs().reciprocal() + Rational(1) ==
              Rational(n + 1) * Rational(n + 2) / Rational(6));
    }
}

TEST_CASE("single-polynomial bound picks the best even degree") {
    const GBound b71 = g_bound(71, Rational(1, 5), 100);
    CHECK(b71.bound == Rational(876));
    CHECK(b71.argmin_k == 4);

    const GBound b23 = g_bound(23, Rational(1, 3));
    CHECK(b23.bound == Rational(100));
    CHECK(b23.argmin_k == 4);
}

TEST_CASE("single-polynomial bound validation and empty scans") {
    CHECK_THROWS_AS(g_bound(71, Rational(1, 5), 2), NoQualifyingDegreeError);
    CHECK_THROWS_AS(g_bound(1, Rational(1, 5)), std::invalid_argument);
    CHECK_THROWS_AS(g_bound(71, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(g_bound(71, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(g_bound(71, Rational(1, 5), 3), std::invalid_argument);
    CHECK_THROWS_AS(g_bound(71, Rational(1, 5), 0), std::invalid_argument);
}

TEST_CASE("bound method names are stable") {
    CHECK(to_string(BoundMethod::gerzon) == "gerzon");
    CHECK(to_string(BoundMethod::ls_third) == "ls_third");
    CHECK(to_string(BoundMethod::sdp) == "sdp");
}
