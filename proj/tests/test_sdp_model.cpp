#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "eqlines/sdp_model.hpp"

using namespace eqlines;

TEST_CASE("equiangular SDP block layout") {
    const int p = 5;
    const LinearMatrixProblem prob = build_equiangular_sdp(23, Rational(1, 5), p);
    CHECK(prob.num_vars == 6);
    CHECK(prob.objective_constant == Rational(1));
    CHECK(prob.objective_coeffs ==
          std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(0), Rational(0),
                                Rational(0), Rational(0)});
    REQUIRE(prob.blocks.size() == static_cast<std::size_t>(p + 4));

    const Block& moment = prob.blocks[0];
    CHECK(moment.kind == Block::Kind::DensePsd);
    CHECK(moment.dim == 2);
    CHECK(moment.mat(0)(0, 0) == Rational(1));
    CHECK(moment.mat(1)(0, 1) == Rational(1, 3));
    CHECK(moment.mat(1)(1, 1) == Rational(1, 3));
    CHECK(moment.mat(2)(1, 1) == Rational(1, 3));
    for (int j = 3; j <= 6; ++j) CHECK(moment.mat(j)(1, 1) == Rational(1));

    for (int k = 0; k <= p; ++k) {
        const Block& s = prob.blocks[static_cast<std::size_t>(1 + k)];
        CHECK(s.kind == Block::Kind::DensePsd);
        CHECK(s.dim == p - k + 1);
    }

    const Block& linear = prob.blocks[static_cast<std::size_t>(p + 2)];
    CHECK(linear.kind == Block::Kind::Diagonal);
    CHECK(linear.dim == p + 1);
    CHECK(linear.mat(0)(0, 0) == Rational(3));
    CHECK(linear.mat(1)(2, 2) == gegenbauer_eval(23, 2, Rational(1, 5)));
    CHECK(linear.mat(2)(3, 3) == gegenbauer_eval(23, 3, Rational(-1, 5)));

    const Block& nonneg = prob.blocks[static_cast<std::size_t>(p + 3)];
    CHECK(nonneg.kind == Block::Kind::Diagonal);
    CHECK(nonneg.dim == 6);
    for (int j = 1; j <= 6; ++j) CHECK(nonneg.mat(j)(j - 1, j - 1) == Rational(1));
}

TEST_CASE("x = 0 is feasible: every constant block is PSD") {
    for (const auto& [n, q] : {std::pair{23, 5}, {42, 7}, {17, 3}}) {
        const LinearMatrixProblem prob = build_equiangular_sdp(n, Rational(1, q), 5);
        for (const Block& b : prob.blocks) {
            const PsdReport rep = psd_check(b.mat(0).to_float(), 1e-12);
            INFO(b.label);
            CHECK(rep.is_psd);
        }
    }
}

TEST_CASE("p = 0 degenerates gracefully") {
    const LinearMatrixProblem prob = build_equiangular_sdp(23, Rational(1, 5), 0);
    CHECK(prob.blocks.size() == 4);
    CHECK(prob.blocks[1].dim == 1);
    CHECK(prob.blocks[2].dim == 1);
}

TEST_CASE("sdpa export emits the declared layout") {
    const LinearMatrixProblem prob = build_equiangular_sdp(23, Rational(1, 5), 2);
    std::ostringstream os;
    export_sdpa(prob, os);
    const std::string text = os.str();
    CHECK(text.find("* objective = 1 + (x1+x2)/3 ; maximize") == 0);
    CHECK(text.find("\n6\n6\n") != std::string::npos);        // variable then block count
    CHECK(text.find("2 3 2 1 -3 -6\n") != std::string::npos);  // sizes, diagonals negative
}

TEST_CASE("sdpa round trip preserves structure and entries") {
    const LinearMatrixProblem prob = build_equiangular_sdp(23, Rational(1, 5), 5);
    std::stringstream ss;
    export_sdpa(prob, ss);
    const LinearMatrixProblem back = import_sdpa(ss);

    REQUIRE(back.num_vars == prob.num_vars);
    REQUIRE(back.blocks.size() == prob.blocks.size());
    CHECK(back.objective_constant == Rational(1));
    for (int j = 0; j < 6; ++j)
        CHECK(back.objective_coeffs[static_cast<std::size_t>(j)].to_double() ==
              prob.objective_coeffs[static_cast<std::size_t>(j)].to_double());
    for (std::size_t b = 0; b < prob.blocks.size(); ++b) {
        CHECK(back.blocks[b].kind == prob.blocks[b].kind);
        REQUIRE(back.blocks[b].dim == prob.blocks[b].dim);
        for (int j = 0; j <= 6; ++j)
            for (int i = 0; i < prob.blocks[b].dim; ++i)
                for (int jj = i; jj < prob.blocks[b].dim; ++jj) {
                    const double orig = prob.blocks[b].mat(j)(i, jj).to_double();
                    CHECK(back.blocks[b].mat(j)(i, jj).to_double() == orig);
                }
    }
}

TEST_CASE("sdpa round trip on randomized diagonal/dense mixes") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-20, 20);
    for (int trial = 0; trial < 20; ++trial) {
        LinearMatrixProblem prob;
        prob.num_vars = 1 + trial % 3;
        prob.objective_constant = Rational(0);
        for (int j = 0; j < prob.num_vars; ++j)
            prob.objective_coeffs.push_back(Rational(num(rng), 4));
        const int nblocks = 1 + trial % 3;
        for (int b = 0; b < nblocks; ++b) {
            const bool diag = (trial + b) % 2 == 0;
            const int dim = 1 + (trial + b) % 3;
            Block blk = Block::make(diag ? Block::Kind::Diagonal : Block::Kind::DensePsd, dim,
                                    prob.num_vars, "b");
            for (int j = 0; j <= prob.num_vars; ++j)
                for (int i = 0; i < dim; ++i)
                    for (int jj = diag ? i : 0; jj <= i; ++jj) {
                        if (diag && jj != i) continue;
                        blk.mat(j).set(i, jj, Rational(num(rng), 8));
                    }
            prob.blocks.push_back(std::move(blk));
        }
        std::stringstream ss;
        export_sdpa(prob, ss);
        const LinearMatrixProblem back = import_sdpa(ss);
        REQUIRE(back.num_vars == prob.num_vars);
        REQUIRE(back.blocks.size() == prob.blocks.size());
        for (std::size_t b = 0; b < prob.blocks.size(); ++b) {
            CHECK(back.blocks[b].kind == prob.blocks[b].kind);
            for (int j = 0; j <= prob.num_vars; ++j)
                for (int i = 0; i < prob.blocks[b].dim; ++i)
                    for (int jj = 0; jj < prob.blocks[b].dim; ++jj)
                        CHECK(back.blocks[b].mat(j)(i, jj).to_double() ==
                              prob.blocks[b].mat(j)(i, jj).to_double());
        }
    }
}

TEST_CASE("sdpa import reports the offending line") {
    {
        std::istringstream is("6\n");
        CHECK_THROWS_WITH(import_sdpa(is), Catch::Matchers::ContainsSubstring("line 2"));
    }
    {
        std::istringstream is("2\n1\n3\n0.0 0.0\n1 1 1 1 1.0\n1 1 9 9 1.0\n");
        CHECK_THROWS_WITH(import_sdpa(is), Catch::Matchers::ContainsSubstring("line 6"));
    }
    {
        std::istringstream is("2\n1\n3\n0.0\n");
        CHECK_THROWS_WITH(import_sdpa(is),
                          Catch::Matchers::ContainsSubstring("expected 2 objective entries"));
    }
    {
        std::istringstream is("2\n2\n3\n0.0 0.0\n");
        CHECK_THROWS_WITH(import_sdpa(is),
                          Catch::Matchers::ContainsSubstring("expected 2 block sizes"));
    }
}

TEST_CASE("builder argument validation") {
    CHECK_THROWS_AS(build_equiangular_sdp(2, Rational(1, 5), 5), std::invalid_argument);
    CHECK_THROWS_AS(build_equiangular_sdp(23, Rational(1, 5), -1), std::invalid_argument);
    CHECK_THROWS_AS(build_equiangular_sdp(23, Rational(7, 5), 5), std::invalid_argument);
    CHECK_THROWS_AS(build_equiangular_sdp(23, Rational(0), 5), std::invalid_argument);
}
