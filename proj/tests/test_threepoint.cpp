#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "eqlines/threepoint.hpp"

using namespace eqlines;

TEST_CASE("frozen kernel entries") {
    const RationalMatrix y1 = y_matrix(10, 5, 1, TriplePoint(Rational(1, 2), Rational(1, 2),
                                                             Rational(1, 2)));
    CHECK(y1(0, 0) == Rational(1, 4));
    const RationalMatrix y2 = y_matrix(24, 5, 2, TriplePoint(Rational(1), Rational(1, 2),
                                                             Rational(1, 3)));
    CHECK(y2(0, 0) == Rational(23, 792));
}

TEST_CASE("kernel dimensions follow p - k + 1") {
    const TriplePoint w(Rational(1, 3), Rational(1, 5), Rational(1, 7));
    CHECK(y_matrix(5, 5, 0, w).dim() == 6);
    CHECK(y_matrix(5, 5, 5, w).dim() == 1);
    CHECK(s_matrix(5, 3, 1, w).m.dim() == 3);
}

TEST_CASE("polynomial form agrees with the radical form away from poles") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> num(-7, 7);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational u(num(rng), 9), v(num(rng), 9), t(num(rng), 9);
        const int n = 3 + trial % 6;
        const int k = trial % 5;
        const int p = 5;
        const RationalMatrix y = y_matrix(n, p, k, TriplePoint(u, v, t));
        for (int i = 0; i <= p - k; i += 2)
            for (int j = 0; j <= p - k; j += 3) {
                const double expect = y_entry_radical(n, k, i, j, u.to_double(), v.to_double(),
                                                      t.to_double());
                CHECK(y(i, j).to_double() == Catch::Approx(expect).margin(1e-12));
            }
    }
}

TEST_CASE("polynomial form stays finite where the radical form divides by zero") {
    const RationalMatrix y = y_matrix(6, 4, 2, TriplePoint(Rational(1), Rational(1, 3),
                                                           Rational(1, 3)));
    CHECK(y(0, 0) == Rational(0));  // (1 - u^2) factor kills every k >= 1 term
}

TEST_CASE("swapping u and v transposes the kernel") {
    const Rational u(1, 3), v(2, 5), t(1, 7);
    const RationalMatrix a = y_matrix(7, 4, 2, TriplePoint(u, v, t));
    const RationalMatrix b = y_matrix(7, 4, 2, TriplePoint(v, u, t));
    CHECK(a == b.transposed());
}

TEST_CASE("symmetrized kernel is invariant under argument permutations") {
    const Rational u(1, 3), v(2, 5), t(1, 7);
    const SMatrix s = s_matrix(7, 4, 2, TriplePoint(u, v, t));
    for (const TriplePoint& w : {TriplePoint(v, u, t), TriplePoint(t, v, u),
                                 TriplePoint(u, t, v)}) {
        CHECK(s_matrix(7, 4, 2, w).m == s.m);
    }
}

TEST_CASE("symmetrized kernel vanishes at (1,1,1) for positive k") {
    const TriplePoint ones(Rational(1), Rational(1), Rational(1));
    for (int k = 1; k <= 5; ++k) {
        const SMatrix s = s_matrix(9, 5, k, ones);
        for (int i = 0; i < s.m.dim(); ++i)
            for (int j = 0; j < s.m.dim(); ++j) CHECK(s.m(i, j) == Rational(0));
    }
    const SMatrix s0 = s_matrix(9, 5, 0, ones);
    for (int i = 0; i < s0.m.dim(); ++i)
        for (int j = 0; j < s0.m.dim(); ++j) CHECK(s0.m(i, j) == Rational(1));
}

namespace {

std::vector<Eigen::VectorXd> random_code(std::mt19937& rng, int n, int count) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Eigen::VectorXd> code;
    while (static_cast<int>(code.size()) < count) {
        Eigen::VectorXd x(n);
        for (int i = 0; i < n; ++i) x(i) = gauss(rng);
        const double norm = x.norm();
        if (norm < 1e-6) continue;
        code.push_back(x / norm);
    }
    return code;
}

}  // namespace

TEST_CASE("positivity probes on random spherical codes") {
    std::mt19937 rng(991);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 4 + trial % 5;
        const int k = trial % 7;
        const auto code = random_code(rng, n, 3 + trial % 4);
        const double c = static_cast<double>(code.size());
        const ProbeResult res = positivity_probe(n, code, k, 6);
        CHECK(res.two_point_sum >= -1e-9 * c * c);
        CHECK(res.min_eig >= -1e-9 * c * c * c);
    }
}

TEST_CASE("kernel argument validation") {
    CHECK_THROWS_AS(TriplePoint(Rational(3, 2), Rational(0), Rational(0)),
                    std::invalid_argument);
    const TriplePoint w(Rational(0), Rational(0), Rational(0));
    CHECK_THROWS_AS(y_matrix(2, 5, 1, w), std::invalid_argument);
    CHECK_THROWS_AS(y_matrix(5, 5, 6, w), std::invalid_argument);
    CHECK_THROWS_AS(y_matrix(5, -1, 0, w), std::invalid_argument);
}
