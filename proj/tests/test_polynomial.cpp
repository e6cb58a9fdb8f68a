#include <catch2/catch_amalgamated.hpp>

#include "eqlines/polynomial.hpp"

using eqlines::Rational;
using eqlines::UniPoly;

TEST_CASE("polynomial degree and trimming") {
    CHECK(UniPoly::zero().degree() == eqlines::kZeroPolyDegree);
    CHECK(UniPoly::constant(Rational(3)).degree() == 0);
    CHECK(UniPoly({Rational(1), Rational(0), Rational(0)}).degree() == 0);
    CHECK(UniPoly::monomial(Rational(2), 4).degree() == 4);
    CHECK(UniPoly::monomial(Rational(0), 4).degree() == eqlines::kZeroPolyDegree);
}

TEST_CASE("polynomial arithmetic") {
    const UniPoly t = UniPoly::monomial(Rational(1), 1);
    const UniPoly p = t * t - UniPoly::constant(Rational(1, 9));
    CHECK(p.coeff(0) == Rational(-1, 9));
    CHECK(p.coeff(1) == Rational(0));
    CHECK(p.coeff(2) == Rational(1));
    const UniPoly q = p * p;
    CHECK(q.degree() == 4);
    CHECK(q.coeff(0) == Rational(1, 81));
    CHECK(q.coeff(2) == Rational(-2, 9));
    CHECK(q.coeff(4) == Rational(1));
    CHECK(p + (UniPoly::zero() - p) == UniPoly::zero());
    CHECK(p * Rational(3) == UniPoly({Rational(-1, 3), Rational(0), Rational(3)}));
}

TEST_CASE("polynomial evaluation is exact") {
    const UniPoly t2 = UniPoly::monomial(Rational(1), 2);
    const UniPoly f = (t2 - UniPoly::constant(Rational(1, 25))) * t2;
    CHECK(f.eval(Rational(1, 5)) == Rational(0));
    CHECK(f.eval(Rational(1)) == Rational(24, 25));
    CHECK(f.eval(Rational(-1, 5)) == Rational(0));
    CHECK(f.eval_double(0.5) == Catch::Approx((0.25 - 0.04) * 0.25).epsilon(1e-15));
}

TEST_CASE("leading zero cancellation in sums keeps representation canonical") {
    const UniPoly a({Rational(1), Rational(2)});
    const UniPoly b({Rational(1), Rational(-2)});
    CHECK((a + b).degree() == 0);
    CHECK((a + b).coeff(0) == Rational(2));
}
