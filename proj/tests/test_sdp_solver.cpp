#include <catch2/catch_amalgamated.hpp>

#include "eqlines/sdp_model.hpp"
#include "eqlines/sdp_solver.hpp"

using namespace eqlines;

namespace {

// maximize c.x with one diagonal block a0 + sum x_j a_j >= 0 per column set
LinearMatrixProblem diag_problem(std::vector<Rational> obj,
                                 std::vector<std::vector<Rational>> rows) {
    LinearMatrixProblem p;
    p.num_vars = static_cast<int>(obj.size());
    p.objective_coeffs = std::move(obj);
    Block b = Block::make(Block::Kind::Diagonal, static_cast<int>(rows.size()), p.num_vars, "lp");
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int j = 0; j <= p.num_vars; ++j)
            b.mat(j).set(static_cast<int>(r), static_cast<int>(r),
                         rows[r][static_cast<std::size_t>(j)]);
    p.blocks.push_back(std::move(b));
    return p;
}

}  // namespace

TEST_CASE("one-variable box LP solves to the boundary") {
    // maximize x subject to 5 - x >= 0, x >= 0
    const auto prob = diag_problem({Rational(1)}, {{Rational(5), Rational(-1)},
                                                   {Rational(0), Rational(1)}});
    const SdpSolution sol = solve(prob);
    REQUIRE(sol.status == SolveStatus::Optimal);
    CHECK(sol.primal_obj == Catch::Approx(5.0).margin(1e-7));
    CHECK(sol.x[0] == Catch::Approx(5.0).margin(1e-6));
    CHECK(sol.gap <= 1e-8 * (1 + 5.0) + 1e-12);
}

TEST_CASE("two-variable LP picks the right vertex") {
    // maximize x + 2y subject to x + y <= 4, y <= 1, x, y >= 0
    const auto prob = diag_problem(
        {Rational(1), Rational(2)},
        {{Rational(4), Rational(-1), Rational(-1)},
         {Rational(1), Rational(0), Rational(-1)},
         {Rational(0), Rational(1), Rational(0)},
         {Rational(0), Rational(0), Rational(1)}});
    const SdpSolution sol = solve(prob);
    REQUIRE(sol.status == SolveStatus::Optimal);
    CHECK(sol.primal_obj == Catch::Approx(5.0).margin(1e-7));  // x=3, y=1
    CHECK(sol.x[0] == Catch::Approx(3.0).margin(1e-6));
    CHECK(sol.x[1] == Catch::Approx(1.0).margin(1e-6));
}

TEST_CASE("semidefinite constraint binds where the LP relaxation would not") {
    // maximize 2x subject to [[1, x], [x, 1]] >= 0: optimum at x = 1
    LinearMatrixProblem p;
    p.num_vars = 1;
    p.objective_coeffs = {Rational(2)};
    Block b = Block::make(Block::Kind::DensePsd, 2, 1, "psd");
    b.mat(0).set(0, 0, Rational(1));
    b.mat(0).set(1, 1, Rational(1));
    b.mat(1).set(0, 1, Rational(1));
    p.blocks.push_back(std::move(b));
    const SdpSolution sol = solve(p);
    REQUIRE(sol.status == SolveStatus::Optimal);
    CHECK(sol.primal_obj == Catch::Approx(2.0).margin(1e-7));
}

TEST_CASE("infeasible constant block is certified") {
    const auto prob = diag_problem({Rational(1)}, {{Rational(-1), Rational(0)},
                                                   {Rational(1), Rational(-1)}});
    CHECK(solve(prob).status == SolveStatus::Infeasible);
}

TEST_CASE("objective unbounded along a feasible ray is certified") {
    // maximize x subject only to 1 + x >= 0
    const auto prob = diag_problem({Rational(1)}, {{Rational(1), Rational(1)}});
    CHECK(solve(prob).status == SolveStatus::Unbounded);
}

TEST_CASE("settings are validated") {
    const auto prob = diag_problem({Rational(1)}, {{Rational(1), Rational(-1)}});
    SolverSettings s;
    s.gap_tol = 0.0;
    CHECK_THROWS_AS(solve(prob, s), std::invalid_argument);
    s = {};
    s.max_iter = 0;
    CHECK_THROWS_AS(solve(prob, s), std::invalid_argument);
    s = {};
    s.step_fraction = 1.0;
    CHECK_THROWS_AS(solve(prob, s), std::invalid_argument);
    LinearMatrixProblem empty;
    empty.num_vars = 1;
    empty.objective_coeffs = {Rational(1)};
    CHECK_THROWS_AS(solve(empty), std::invalid_argument);
}

TEST_CASE("equiangular instance meets its advertised tolerances") {
    const LinearMatrixProblem prob = build_equiangular_sdp(23, Rational(1, 5), 5);
    const SdpSolution sol = solve(prob);
    REQUIRE(sol.status == SolveStatus::Optimal);
    CHECK(sol.primal_obj == Catch::Approx(276.0).margin(1e-5));
    CHECK(sol.gap <= 1e-8 * (1.0 + std::abs(sol.primal_obj)));
    CHECK(sol.min_block_eig >= -1e-9);
    REQUIRE(sol.z.size() == prob.blocks.size());

    const ResidualReport rep = check_solution(prob, sol, 1e-9);
    CHECK_FALSE(rep.any_flagged);
    CHECK(rep.min_eigenvalue >= -1e-9);
    CHECK(rep.primal_obj_recomputed == Catch::Approx(sol.primal_obj).margin(1e-9));
    CHECK(std::abs(rep.dual_obj_recomputed - sol.primal_obj) <= 1e-5);
}

TEST_CASE("weak duality holds on solved instances") {
    for (const auto& [n, q] : {std::pair{23, 5}, {42, 7}}) {
        const SdpSolution sol = solve(build_equiangular_sdp(n, Rational(1, q), 5));
        REQUIRE(sol.status == SolveStatus::Optimal);
        CHECK(sol.primal_obj <= sol.dual_obj + 1e-6);
    }
}

TEST_CASE("residual checker flags a perturbed solution") {
    const LinearMatrixProblem prob = build_equiangular_sdp(23, Rational(1, 5), 5);
    SdpSolution sol = solve(prob);
    REQUIRE(sol.status == SolveStatus::Optimal);
    sol.x[0] += 0.1;
    const ResidualReport rep = check_solution(prob, sol, 1e-6);
    CHECK(rep.any_flagged);
}

TEST_CASE("repeat solves are bit-identical") {
    const LinearMatrixProblem prob = build_equiangular_sdp(23, Rational(1, 5), 5);
    const SdpSolution a = solve(prob);
    const SdpSolution b = solve(prob);
    CHECK(a.primal_obj == b.primal_obj);
    CHECK(a.dual_obj == b.dual_obj);
    CHECK(a.iterations == b.iterations);
    CHECK(a.x == b.x);
}

TEST_CASE("tightening p never increases the bound") {
    // non-increasing up to solver accuracy: consecutive optima can sit within
    // rounding noise of each other when the hierarchy has already saturated
    double prev = std::numeric_limits<double>::infinity();
    for (int p = 2; p <= 5; ++p) {
        const SdpSolution sol = solve(build_equiangular_sdp(23, Rational(1, 5), p));
        REQUIRE(sol.status == SolveStatus::Optimal);
        CHECK(sol.primal_obj <= prev + 1e-5);
        prev = sol.primal_obj;
    }
}
