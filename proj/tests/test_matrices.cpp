#include <catch2/catch_amalgamated.hpp>

#include "eqlines/matrices.hpp"

using namespace eqlines;

TEST_CASE("symmetric exact matrix writes both triangles") {
    SymMatrixExact m(3);
    m.set(0, 2, Rational(5, 7));
    CHECK(m(2, 0) == Rational(5, 7));
    CHECK(m(0, 2) == Rational(5, 7));
    CHECK(m(1, 1) == Rational(0));
}

TEST_CASE("from_matrix validates symmetry") {
    RationalMatrix m(2);
    m(0, 1) = Rational(1);
    CHECK_THROWS_AS(SymMatrixExact::from_matrix(m), std::invalid_argument);
    m(1, 0) = Rational(1);
    CHECK(SymMatrixExact::from_matrix(m)(0, 1) == Rational(1));
}

TEST_CASE("psd check accepts PSD and flags indefinite") {
    SymMatrixFloat id(2);
    id.set(0, 0, 1.0);
    id.set(1, 1, 1.0);
    CHECK(psd_check(id, 0.0).is_psd);

    SymMatrixFloat ind(2);
    ind.set(0, 0, 1.0);
    ind.set(1, 1, 1.0);
    ind.set(0, 1, 2.0);
    const PsdReport rep = psd_check(ind, 1e-9);
    CHECK_FALSE(rep.is_psd);
    CHECK(rep.min_eigenvalue == Catch::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("psd check tolerance covers rounding-level negatives") {
    SymMatrixFloat m(2);
    m.set(0, 0, 1.0);
    m.set(1, 1, 1.0);
    m.set(0, 1, 1.0 + 1e-14);
    CHECK(psd_check(m, 1e-12).is_psd);
    CHECK_FALSE(psd_check(m, 0.0).is_psd);
    CHECK_THROWS_AS(psd_check(m, -1.0), std::invalid_argument);
}

TEST_CASE("exact to float conversion preserves entries") {
    SymMatrixExact e(2);
    e.set(0, 1, Rational(1, 3));
    e.set(0, 0, Rational(2));
    const SymMatrixFloat f = e.to_float();
    CHECK(f(0, 1) == Catch::Approx(1.0 / 3.0).epsilon(1e-16));
    CHECK(f(1, 0) == f(0, 1));
    CHECK(f(0, 0) == 2.0);
}
