#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqlines/sdp_model.hpp"

namespace eqlines {

struct SolverSettings {
    double gap_tol = 1e-8;
    double feas_tol = 1e-9;
    int max_iter = 200;
    double step_fraction = 0.98;
};

enum class SolveStatus { Optimal, MaxIterReached, Infeasible, Unbounded };

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::MaxIterReached: return "max_iter_reached";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

struct SdpSolution {
    std::vector<double> x;
    double primal_obj = std::numeric_limits<double>::quiet_NaN();
    double dual_obj = std::numeric_limits<double>::quiet_NaN();
    double gap = std::numeric_limits<double>::infinity();
    SolveStatus status = SolveStatus::MaxIterReached;
    int iterations = 0;
    // Diagnostics beyond the core contract: dual block variables in user
    // scale (diagonal blocks stored dense), worst primal block eigenvalue
    // at x, the dual linear residual, and the worst tolerance ratio of the
    // returned iterate (<= 1 exactly when status is optimal), all at the
    // returned iterate.
    std::vector<Eigen::MatrixXd> z;
    double min_block_eig = std::numeric_limits<double>::quiet_NaN();
    double dual_residual = std::numeric_limits<double>::quiet_NaN();
    double merit = std::numeric_limits<double>::infinity();
};

namespace ipm {

// The solver works on the homogeneous self-dual embedding of the conic
// form  min c.x  s.t.  G(x) + s = h,  s in a product of PSD and
// nonnegative-orthant cones, where G(x) = -sum_j x_j A_j and h = A_0 (so
// s = A_0 + sum_j x_j A_j) and c = -objective_coeffs. Iterations use
// Nesterov-Todd scaling with Mehrotra predictor-corrector steps, in
// extended precision to survive the ill-conditioning near degenerate
// optima. A solution of the embedded problem with tau > 0 maps back via
// x/tau; tau -> 0 with kappa > 0 certifies infeasibility/unboundedness.

using LD = long double;
using MatX = Eigen::Matrix<LD, Eigen::Dynamic, Eigen::Dynamic>;
using VecX = Eigen::Matrix<LD, Eigen::Dynamic, 1>;

struct ConeBlock {
    bool diag = false;
    int dim = 0;
    std::vector<MatX> A;  // dense path, A_0..A_m
    std::vector<VecX> a;  // diagonal path, a_0..a_m

    // iterate
    MatX S, Z;
    VecX sd, zd;

    // Nesterov-Todd scaling state
    MatX R, Ri, H;  // dense: lambda = Ri S Ri^T = R^T Z R, H = R R^T
    VecX lam;
    VecX w;  // diagonal: W = diag(w), lambda = sqrt(s z)

    std::vector<MatX> Atil;  // dense: Ri A_j Ri^T, j = 0..m

    LD inner(const MatX& U, const MatX& V) const { return (U.array() * V.array()).sum(); }

    // sum_j x_j A_j
    MatX combine(const VecX& x) const {
        MatX out = MatX::Zero(dim, dim);
        for (int j = 1; j < static_cast<int>(A.size()); ++j)
            if (x(j - 1) != LD(0)) out += x(j - 1) * A[static_cast<std::size_t>(j)];
        return out;
    }
    VecX combine_diag(const VecX& x) const {
        VecX out = VecX::Zero(dim);
        for (int j = 1; j < static_cast<int>(a.size()); ++j)
            if (x(j - 1) != LD(0)) out += x(j - 1) * a[static_cast<std::size_t>(j)];
        return out;
    }
};

inline void symmetrize(MatX& m) { m = ((m + m.transpose()) * LD(0.5)).eval(); }

inline LD min_eig(const MatX& m) {
    Eigen::SelfAdjointEigenSolver<MatX> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

// Direction / right-hand-side value attached to one block.
struct BlockVal {
    MatX m;
    VecX v;
};

struct Snapshot {
    VecX x;  // user-scale x/tau
    std::vector<BlockVal> zhat;
    LD primal = 0, dual = 0, gap = 0, compl_gap = 0;
    LD feas_eig = 0, dres = 0;
    LD dres_ratio = 0;  // dres relative to the cancelling term magnitudes
    LD merit = std::numeric_limits<LD>::infinity();
    bool valid = false;
};

}  // namespace ipm

class SdpSolver {
public:
    SdpSolver(const LinearMatrixProblem& prob, const SolverSettings& settings)
        : settings_(settings) {
        validate(prob, settings);
        m_ = prob.num_vars;
        obj_const_ = static_cast<ipm::LD>(prob.objective_constant.to_double());
        c_.resize(m_);
        for (int j = 0; j < m_; ++j)
            c_(j) = -static_cast<ipm::LD>(
                prob.objective_coeffs[static_cast<std::size_t>(j)].to_double());
        for (std::size_t bi = 0; bi < prob.blocks.size(); ++bi) {
            const Block& b = prob.blocks[bi];
            ipm::ConeBlock cb;
            cb.diag = b.kind == Block::Kind::Diagonal;
            cb.dim = b.dim;
            if (cb.diag) {
                cb.a.resize(static_cast<std::size_t>(m_) + 1);
                for (int j = 0; j <= m_; ++j) {
                    cb.a[static_cast<std::size_t>(j)].resize(b.dim);
                    for (int i = 0; i < b.dim; ++i)
                        cb.a[static_cast<std::size_t>(j)](i) =
                            static_cast<ipm::LD>(b.mat(j)(i, i).to_double());
                }
            } else {
                cb.A.resize(static_cast<std::size_t>(m_) + 1);
                for (int j = 0; j <= m_; ++j) {
                    cb.A[static_cast<std::size_t>(j)].resize(b.dim, b.dim);
                    for (int r = 0; r < b.dim; ++r)
                        for (int col = 0; col < b.dim; ++col)
                            cb.A[static_cast<std::size_t>(j)](r, col) =
                                static_cast<ipm::LD>(b.mat(j)(r, col).to_double());
                }
            }
            blocks_.push_back(std::move(cb));
        }
        nu_ = 0;
        for (const auto& b : blocks_) nu_ += b.dim;
    }

    SdpSolution solve() {
        using namespace ipm;
        init_iterate();
        SdpSolution sol;
        Snapshot best;

        int it = 0;
        bool breakdown = false;
        int tiny_steps = 0;
        int stalled = 0;
        for (; it < settings_.max_iter; ++it) {
            // Residuals of the embedding at the current iterate.
            VecX rx = c_ * tau_;  // G^T z + c tau
            for (auto& b : blocks_) add_gt(b, rx);
            std::vector<BlockVal> rs(blocks_.size());  // -G x + h tau - s
            for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
                auto& b = blocks_[bi];
                if (b.diag)
                    rs[bi].v = b.combine_diag(x_) + tau_ * b.a[0] - b.sd;
                else
                    rs[bi].m = b.combine(x_) + tau_ * b.A[0] - b.S;
            }
            const LD cx = c_.dot(x_);
            LD hz = 0, sz = 0;
            for (auto& b : blocks_) {
                hz += b.diag ? b.a[0].dot(b.zd) : b.inner(b.A[0], b.Z);
                sz += b.diag ? b.sd.dot(b.zd) : b.inner(b.S, b.Z);
            }
            const LD rkappa = -cx - hz - kappa_;
            const LD mu = (sz + tau_ * kappa_) / LD(nu_ + 1);

            // User-scale quantities and convergence bookkeeping.
            Snapshot cur = snapshot(cx, hz, sz, rx);
#ifdef EQLINES_IPM_TRACE
            std::fprintf(stderr,
                         "it=%3d tau=%.3Le kappa=%.3Le mu=%.3Le gap=%.3Le compl=%.3Le "
                         "dres=%.3Le feig=%.3Le merit=%.3Le\n",
                         it, tau_, kappa_, mu, cur.gap, cur.compl_gap, cur.dres, cur.feas_eig,
                         cur.merit);
#endif
            // Iterate to numerical exhaustion rather than stopping at the
            // first iterate inside tolerance: downstream flooring wants the
            // objective as sharp as the arithmetic allows, and the extra
            // iterations are a few milliseconds.
            if (cur.merit < LD(0.995) * best.merit) {
                stalled = 0;
            } else if (++stalled >= 8) {
                break;  // noise regime: successive iterates no longer improve
            }
            if (cur.merit < best.merit) best = cur;
            if (tau_ < LD(1e-2) * kappa_) {
                if (check_unbounded(sol, it)) return sol;
                if (check_infeasible(sol, it)) return sol;
            }

            if (!compute_scaling()) {
                breakdown = true;
#ifdef EQLINES_IPM_TRACE
                std::fprintf(stderr, "it=%3d scaling breakdown\n", it);
#endif
                break;
            }
            if (!factor_schur()) {
                breakdown = true;
#ifdef EQLINES_IPM_TRACE
                std::fprintf(stderr, "it=%3d schur breakdown\n", it);
#endif
                break;
            }

            // Directions with fixed scaling: (dx2, dz2) depends only on the
            // scaling, shared by predictor and corrector.
            VecX dx2;
            std::vector<BlockVal> dz2;
            {
                std::vector<BlockVal> h(blocks_.size());
                for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
                    if (blocks_[bi].diag)
                        h[bi].v = blocks_[bi].a[0];
                    else
                        h[bi].m = blocks_[bi].A[0];
                }
                solve2(-c_, h, dx2, dz2);
            }
            // c.dx2 + h.dz2 equals -|W dz2|^2 identically; the direct form
            // below stays negative where the inner-product form loses all
            // significance to cancellation near convergence.
            LD wdz2 = 0;
            for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
                const auto& b = blocks_[bi];
                if (b.diag)
                    wdz2 += b.w.cwiseProduct(dz2[bi].v).squaredNorm();
                else
                    wdz2 += (b.R.transpose() * dz2[bi].m * b.R).squaredNorm();
            }
            const LD denom = -wdz2 - kappa_ / tau_;

            auto newton = [&](LD eta, const std::vector<BlockVal>& D2, LD dkap_target,
                              VecX& dx, std::vector<BlockVal>& dz, std::vector<BlockVal>& ds,
                              LD& dtau, LD& dkappa) {
                std::vector<BlockVal> bs(blocks_.size());
                for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
                    auto& b = blocks_[bi];
                    if (b.diag)
                        bs[bi].v = eta * rs[bi].v - b.w.cwiseProduct(D2[bi].v);
                    else
                        bs[bi].m = eta * rs[bi].m - b.R * D2[bi].m * b.R.transpose();
                }
                VecX dx1;
                std::vector<BlockVal> dz1;
                solve2(-eta * rx, bs, dx1, dz1);
                LD cdx1 = c_.dot(dx1), hdz1 = 0;
                for (std::size_t bi = 0; bi < blocks_.size(); ++bi)
                    hdz1 += blocks_[bi].diag
                                ? blocks_[bi].a[0].dot(dz1[bi].v)
                                : blocks_[bi].inner(blocks_[bi].A[0], dz1[bi].m);
                dtau = (eta * rkappa - dkap_target / tau_ - cdx1 - hdz1) / denom;
                dx = dx1 + dtau * dx2;
                dz.resize(blocks_.size());
                ds.resize(blocks_.size());
                for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
                    auto& b = blocks_[bi];
                    if (b.diag) {
                        dz[bi].v = dz1[bi].v + dtau * dz2[bi].v;
                        ds[bi].v = b.w.cwiseProduct(D2[bi].v) -
                                   b.w.array().square().matrix().cwiseProduct(dz[bi].v);
                    } else {
                        dz[bi].m = dz1[bi].m + dtau * dz2[bi].m;
                        ipm::symmetrize(dz[bi].m);
                        ds[bi].m = b.R * D2[bi].m * b.R.transpose() - b.H * dz[bi].m * b.H;
                        ipm::symmetrize(ds[bi].m);
                    }
                }
                dkappa = (dkap_target - kappa_ * dtau) / tau_;
            };

            // Predictor (affine scaling direction).
            std::vector<BlockVal> D2(blocks_.size());
            for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
                if (blocks_[bi].diag)
                    D2[bi].v = -blocks_[bi].lam;
                else
                    D2[bi].m = MatX((-blocks_[bi].lam).asDiagonal());
            }
            VecX dx_a;
            std::vector<BlockVal> dz_a, ds_a;
            LD dtau_a = 0, dkappa_a = 0;
            newton(LD(1), D2, -tau_ * kappa_, dx_a, dz_a, ds_a, dtau_a, dkappa_a);

            const LD alpha_max_a = step_to_boundary(ds_a, dz_a, dtau_a, dkappa_a);
            const LD alpha_a = std::min(LD(1), alpha_max_a);
            LD sz_aff = tau_ + alpha_a * dtau_a;
            sz_aff *= kappa_ + alpha_a * dkappa_a;
            for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
                auto& b = blocks_[bi];
                if (b.diag)
                    sz_aff += (b.sd + alpha_a * ds_a[bi].v).dot(b.zd + alpha_a * dz_a[bi].v);
                else
                    sz_aff += b.inner(b.S + alpha_a * ds_a[bi].m, b.Z + alpha_a * dz_a[bi].m);
            }
            const LD mu_aff = sz_aff / LD(nu_ + 1);
            LD sigma = mu_aff / mu;
            sigma = std::clamp(sigma * sigma * sigma, LD(0), LD(1));

            // Corrector: recenter toward sigma*mu and cancel the Mehrotra
            // second-order term.
            for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
                auto& b = blocks_[bi];
                if (b.diag) {
                    const VecX cross =
                        (ds_a[bi].v.cwiseQuotient(b.w)).cwiseProduct(b.w.cwiseProduct(dz_a[bi].v));
                    const VecX ds_target = (-b.lam.array().square() - cross.array() + sigma * mu).matrix();
                    D2[bi].v = ds_target.cwiseQuotient(b.lam);
                } else {
                    const MatX Ea = b.Ri * ds_a[bi].m * b.Ri.transpose();
                    const MatX Fa = b.R.transpose() * dz_a[bi].m * b.R;
                    MatX target = -(Ea * Fa + Fa * Ea) * LD(0.5);
                    target.diagonal() -= b.lam.array().square().matrix();
                    target.diagonal().array() += sigma * mu;
                    MatX d2(b.dim, b.dim);
                    for (int r = 0; r < b.dim; ++r)
                        for (int col = 0; col < b.dim; ++col)
                            d2(r, col) = LD(2) * target(r, col) / (b.lam(r) + b.lam(col));
                    ipm::symmetrize(d2);
                    D2[bi].m = d2;
                }
            }
            const LD dkap_target = -tau_ * kappa_ - dtau_a * dkappa_a + sigma * mu;
            VecX dx;
            std::vector<BlockVal> dz, ds;
            LD dtau = 0, dkappa = 0;
            newton(LD(1) - sigma, D2, dkap_target, dx, dz, ds, dtau, dkappa);

            const LD alpha_max = step_to_boundary(ds, dz, dtau, dkappa);
            const LD alpha = std::min(LD(1), LD(settings_.step_fraction) * alpha_max);
#ifdef EQLINES_IPM_TRACE
            std::fprintf(stderr, "        sigma=%.3Le alpha=%.3Le dtau=%.3Le\n", sigma, alpha,
                         dtau);
#endif
            if (alpha < LD(1e-10)) {
                if (++tiny_steps >= 2) break;
            } else {
                tiny_steps = 0;
            }

            x_ += alpha * dx;
            tau_ += alpha * dtau;
            kappa_ += alpha * dkappa;
            for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
                auto& b = blocks_[bi];
                if (b.diag) {
                    b.sd += alpha * ds[bi].v;
                    b.zd += alpha * dz[bi].v;
                } else {
                    b.S += alpha * ds[bi].m;
                    b.Z += alpha * dz[bi].m;
                    ipm::symmetrize(b.S);
                    ipm::symmetrize(b.Z);
                }
            }
        }
        (void)breakdown;

        if (tau_ < LD(1e-2) * kappa_) {
            if (check_unbounded(sol, it)) return sol;
            if (check_infeasible(sol, it)) return sol;
        }
        if (best.valid && is_optimal(best)) {
            fill_solution(sol, best, SolveStatus::Optimal, it);
            return sol;
        }
        fill_solution(sol, best, SolveStatus::MaxIterReached, it);
        return sol;
    }

private:
    static void validate(const LinearMatrixProblem& prob, const SolverSettings& s) {
        if (s.gap_tol <= 0 || s.feas_tol <= 0)
            throw std::invalid_argument("SolverSettings: tolerances must be positive");
        if (s.max_iter < 1) throw std::invalid_argument("SolverSettings: max_iter must be >= 1");
        if (!(s.step_fraction > 0 && s.step_fraction < 1))
            throw std::invalid_argument("SolverSettings: step_fraction must be in (0,1)");
        if (prob.blocks.empty())
            throw std::invalid_argument("solve: problem must have at least one block");
        if (prob.num_vars < 1) throw std::invalid_argument("solve: need at least one variable");
        if (static_cast<int>(prob.objective_coeffs.size()) != prob.num_vars)
            throw std::invalid_argument("solve: objective size mismatch");
        for (const Block& b : prob.blocks)
            if (b.num_vars() != prob.num_vars)
                throw std::invalid_argument("solve: block variable count mismatch");
    }

    void init_iterate() {
        using namespace ipm;
        x_ = VecX::Zero(m_);
        tau_ = 1;
        kappa_ = 1;
        for (auto& b : blocks_) {
            if (b.diag) {
                b.sd = VecX::Ones(b.dim);
                b.zd = VecX::Ones(b.dim);
            } else {
                b.S = MatX::Identity(b.dim, b.dim);
                b.Z = MatX::Identity(b.dim, b.dim);
            }
        }
    }

    // rx += G^T z contribution of one block: (G^T z)_j = -<A_j, z>.
    void add_gt(const ipm::ConeBlock& b, ipm::VecX& rx) const {
        for (int j = 1; j <= m_; ++j)
            rx(j - 1) -= b.diag ? b.a[static_cast<std::size_t>(j)].dot(b.zd)
                                : b.inner(b.A[static_cast<std::size_t>(j)], b.Z);
    }

    // User-scale view of the current iterate, with a scalar merit used to
    // remember the best iterate seen.
    ipm::Snapshot snapshot(ipm::LD cx, ipm::LD hz, ipm::LD sz, const ipm::VecX& rx) {
        using namespace ipm;
        Snapshot s;
        s.x = x_ / tau_;
        s.primal = obj_const_ - cx / tau_;
        s.dual = obj_const_ + hz / tau_;
        s.gap = std::abs(s.primal - s.dual);
        s.compl_gap = sz / (tau_ * tau_);
        s.dres = (rx / tau_).cwiseAbs().maxCoeff();
        s.feas_eig = std::numeric_limits<LD>::infinity();
        s.zhat.resize(blocks_.size());
        VecX dmag = VecX::Zero(m_);
        for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
            auto& b = blocks_[bi];
            if (b.diag) {
                const VecX sv = b.combine_diag(x_) / tau_ + b.a[0];
                s.feas_eig = std::min(s.feas_eig, sv.minCoeff());
                s.zhat[bi].v = b.zd / tau_;
                for (int j = 1; j <= m_; ++j)
                    dmag(j - 1) += std::abs(b.a[static_cast<std::size_t>(j)].dot(s.zhat[bi].v));
            } else {
                MatX sm = b.combine(x_) / tau_ + b.A[0];
                ipm::symmetrize(sm);
                s.feas_eig = std::min(s.feas_eig, min_eig(sm));
                s.zhat[bi].m = b.Z / tau_;
                for (int j = 1; j <= m_; ++j)
                    dmag(j - 1) += std::abs(b.inner(b.A[static_cast<std::size_t>(j)],
                                                    s.zhat[bi].m));
            }
        }
        // Each dual residual component is a sum of terms of magnitude
        // dmag_j; holding it below feas_tol relative to that magnitude is
        // the honest criterion once the multipliers grow large.
        s.dres_ratio = 0;
        for (int j = 0; j < m_; ++j)
            s.dres_ratio = std::max(s.dres_ratio, std::abs(rx(j)) / (tau_ * (LD(1) + dmag(j))));
        const LD gap_scale = LD(settings_.gap_tol) * (LD(1) + std::abs(s.primal));
        s.merit = std::max({std::max(LD(0), -s.feas_eig) / LD(settings_.feas_tol),
                            s.dres_ratio / LD(settings_.feas_tol), s.gap / gap_scale,
                            s.compl_gap / (LD(100) * gap_scale)});
        s.valid = true;
        return s;
    }

    // Optimality: primal blocks PSD within feas_tol, dual residual small
    // relative to its cancellation scale, and the primal/dual values agree
    // within gap_tol. Complementarity only backstops the gap test because
    // its attainable floor is (machine eps * iterate norms) / tau^2, which
    // crowds the tolerance on instances with large optima.
    bool is_optimal(const ipm::Snapshot& s) const { return s.valid && s.merit <= ipm::LD(1); }

    void fill_solution(SdpSolution& sol, const ipm::Snapshot& s, SolveStatus status,
                       int iters) const {
        sol.status = status;
        sol.iterations = iters;
        if (!s.valid) return;
        sol.x.resize(static_cast<std::size_t>(m_));
        for (int j = 0; j < m_; ++j) sol.x[static_cast<std::size_t>(j)] = static_cast<double>(s.x(j));
        sol.primal_obj = static_cast<double>(s.primal);
        sol.dual_obj = static_cast<double>(s.dual);
        sol.gap = static_cast<double>(s.gap);
        sol.min_block_eig = static_cast<double>(s.feas_eig);
        sol.dual_residual = static_cast<double>(s.dres);
        sol.merit = static_cast<double>(s.merit);
        sol.z.clear();
        for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
            const auto& b = blocks_[bi];
            if (b.diag)
                sol.z.push_back(s.zhat[bi].v.cast<double>().asDiagonal());
            else
                sol.z.push_back(s.zhat[bi].m.cast<double>());
        }
    }

    // Unboundedness certificate: a ray x with objective 1 keeping every
    // block PSD. Checked directly on the data, so a false positive would
    // require an actual near-ray.
    bool check_unbounded(SdpSolution& sol, int iters) {
        using namespace ipm;
        const LD w = -c_.dot(x_);
        if (!(w > LD(0))) return false;
        const VecX ray = x_ / w;
        LD feas = std::numeric_limits<LD>::infinity();
        for (auto& b : blocks_) {
            if (b.diag)
                feas = std::min(feas, b.combine_diag(ray).minCoeff());
            else {
                MatX sm = b.combine(ray);
                ipm::symmetrize(sm);
                feas = std::min(feas, min_eig(sm));
            }
        }
        if (feas < -LD(settings_.feas_tol)) return false;
        sol.status = SolveStatus::Unbounded;
        sol.iterations = iters;
        sol.primal_obj = std::numeric_limits<double>::infinity();
        sol.dual_obj = std::numeric_limits<double>::infinity();
        sol.gap = 0.0;
        sol.x.resize(static_cast<std::size_t>(m_));
        for (int j = 0; j < m_; ++j)
            sol.x[static_cast<std::size_t>(j)] = static_cast<double>(ray(j));
        return true;
    }

    // Infeasibility certificate: z >= 0 with <A_0, z> = -1 and G^T z ~ 0.
    bool check_infeasible(SdpSolution& sol, int iters) {
        using namespace ipm;
        LD hz = 0;
        for (auto& b : blocks_) hz += b.diag ? b.a[0].dot(b.zd) : b.inner(b.A[0], b.Z);
        if (!(hz < LD(0))) return false;
        VecX gtz = VecX::Zero(m_);
        for (auto& b : blocks_) add_gt(b, gtz);
        if ((gtz / -hz).cwiseAbs().maxCoeff() > LD(settings_.feas_tol)) return false;
        sol.status = SolveStatus::Infeasible;
        sol.iterations = iters;
        return true;
    }

    bool compute_scaling() {
        using namespace ipm;
        for (auto& b : blocks_) {
            if (b.diag) {
                if ((b.sd.array() <= 0).any() || (b.zd.array() <= 0).any()) return false;
                b.w = (b.sd.cwiseQuotient(b.zd)).cwiseSqrt();
                b.lam = (b.sd.cwiseProduct(b.zd)).cwiseSqrt();
            } else {
                Eigen::LLT<MatX> ls(b.S), lz(b.Z);
                if (ls.info() != Eigen::Success || lz.info() != Eigen::Success) return false;
                const MatX Ls = ls.matrixL();
                const MatX Lz = lz.matrixL();
                Eigen::JacobiSVD<MatX> svd(Lz.transpose() * Ls,
                                           Eigen::ComputeFullU | Eigen::ComputeFullV);
                b.lam = svd.singularValues();
                if (b.lam.minCoeff() <= LD(0)) return false;
                const VecX isqrt = b.lam.cwiseSqrt().cwiseInverse();
                b.R = Ls * svd.matrixV() * isqrt.asDiagonal();
                b.Ri = isqrt.asDiagonal() * svd.matrixU().transpose() * Lz.transpose();
                b.H = b.R * b.R.transpose();
                ipm::symmetrize(b.H);
                b.Atil.resize(static_cast<std::size_t>(m_) + 1);
                for (int j = 0; j <= m_; ++j) {
                    b.Atil[static_cast<std::size_t>(j)] =
                        b.Ri * b.A[static_cast<std::size_t>(j)] * b.Ri.transpose();
                    ipm::symmetrize(b.Atil[static_cast<std::size_t>(j)]);
                }
            }
        }
        return true;
    }

    // Schur complement M = G^T (W^T W)^{-1} G, factored with escalating
    // static regularization if needed; solves are iteratively refined
    // against the unregularized matrix.
    bool factor_schur() {
        using namespace ipm;
        M_.setZero(m_, m_);
        for (auto& b : blocks_) {
            if (b.diag) {
                const VecX iw2 = b.w.array().square().inverse().matrix();
                for (int j = 1; j <= m_; ++j)
                    for (int l = j; l <= m_; ++l) {
                        const LD v = (b.a[static_cast<std::size_t>(j)]
                                          .cwiseProduct(b.a[static_cast<std::size_t>(l)]))
                                         .dot(iw2);
                        M_(j - 1, l - 1) += v;
                        if (l != j) M_(l - 1, j - 1) += v;
                    }
            } else {
                for (int j = 1; j <= m_; ++j)
                    for (int l = j; l <= m_; ++l) {
                        const LD v = b.inner(b.Atil[static_cast<std::size_t>(j)],
                                             b.Atil[static_cast<std::size_t>(l)]);
                        M_(j - 1, l - 1) += v;
                        if (l != j) M_(l - 1, j - 1) += v;
                    }
            }
        }
        LD reg = 0;
        const LD scale = std::max(LD(1), M_.cwiseAbs().maxCoeff());
        for (int attempt = 0; attempt < 4; ++attempt) {
            MatX reg_m = M_;
            reg_m.diagonal().array() += reg;
            ldlt_.compute(reg_m);
            if (ldlt_.info() == Eigen::Success) {
                const VecX probe = ldlt_.solve(VecX::Ones(m_));
                if (probe.allFinite()) return true;
            }
            reg = reg == 0 ? scale * LD(1e-24) : reg * LD(1e4);
        }
        return false;
    }

    ipm::VecX schur_solve(const ipm::VecX& rhs) const {
        using namespace ipm;
        VecX x = ldlt_.solve(rhs);
        for (int pass = 0; pass < 3; ++pass) {
            const VecX r = rhs - M_ * x;
            if (!r.allFinite()) break;
            x += ldlt_.solve(r);
        }
        return x;
    }

    // Solves  G^T dz = bx,  G dx - W^T W dz = bs  via the Schur
    // complement: M dx = bx + G^T (W^T W)^{-1} bs, then
    // dz = (W^T W)^{-1} (G dx - bs).
    void solve2(const ipm::VecX& bx, const std::vector<ipm::BlockVal>& bs, ipm::VecX& dx,
                std::vector<ipm::BlockVal>& dz) const {
        using namespace ipm;
        VecX rhs = bx;
        std::vector<BlockVal> T(blocks_.size());
        for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
            const auto& b = blocks_[bi];
            if (b.diag) {
                T[bi].v = bs[bi].v.cwiseQuotient(b.w.array().square().matrix());
                for (int j = 1; j <= m_; ++j)
                    rhs(j - 1) -= b.a[static_cast<std::size_t>(j)].dot(T[bi].v);
            } else {
                MatX inner_m = b.Ri * bs[bi].m * b.Ri.transpose();
                T[bi].m = b.Ri.transpose() * inner_m * b.Ri;
                ipm::symmetrize(T[bi].m);
                for (int j = 1; j <= m_; ++j)
                    rhs(j - 1) -= b.inner(b.A[static_cast<std::size_t>(j)], T[bi].m);
            }
        }
        dx = schur_solve(rhs);
        dz.resize(blocks_.size());
        for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
            const auto& b = blocks_[bi];
            if (b.diag) {
                const VecX gv = -b.combine_diag(dx) - bs[bi].v;
                dz[bi].v = gv.cwiseQuotient(b.w.array().square().matrix());
            } else {
                MatX gm = -b.combine(dx) - bs[bi].m;
                MatX inner_m = b.Ri * gm * b.Ri.transpose();
                dz[bi].m = b.Ri.transpose() * inner_m * b.Ri;
                ipm::symmetrize(dz[bi].m);
            }
        }
    }

    // Largest step keeping s, z, tau, kappa in their cones, via extreme
    // eigenvalues of the scaled directions.
    ipm::LD step_to_boundary(const std::vector<ipm::BlockVal>& ds,
                             const std::vector<ipm::BlockVal>& dz, ipm::LD dtau,
                             ipm::LD dkappa) const {
        using namespace ipm;
        LD t = std::min(dtau / tau_, dkappa / kappa_);
        for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
            const auto& b = blocks_[bi];
            if (b.diag) {
                t = std::min(t, (ds[bi].v.cwiseQuotient(b.w).cwiseQuotient(b.lam)).minCoeff());
                t = std::min(t, (dz[bi].v.cwiseProduct(b.w).cwiseQuotient(b.lam)).minCoeff());
            } else {
                const VecX isqrt = b.lam.cwiseSqrt().cwiseInverse();
                MatX es = b.Ri * ds[bi].m * b.Ri.transpose();
                es = isqrt.asDiagonal() * es * isqrt.asDiagonal();
                ipm::symmetrize(es);
                t = std::min(t, min_eig(es));
                MatX ez = b.R.transpose() * dz[bi].m * b.R;
                ez = isqrt.asDiagonal() * ez * isqrt.asDiagonal();
                ipm::symmetrize(ez);
                t = std::min(t, min_eig(ez));
            }
        }
        if (t >= LD(0)) return std::numeric_limits<LD>::infinity();
        return LD(1) / -t;
    }

    SolverSettings settings_;
    int m_ = 0;
    int nu_ = 0;
    ipm::LD obj_const_ = 0;
    ipm::VecX c_;
    std::vector<ipm::ConeBlock> blocks_;

    ipm::VecX x_;
    ipm::LD tau_ = 1, kappa_ = 1;
    ipm::MatX M_;
    Eigen::LDLT<ipm::MatX> ldlt_;
};

/// Solves the block LMI maximization problem. Deterministic for fixed
/// inputs and settings. On status optimal the returned x satisfies every
/// block constraint up to -feas_tol and the reported primal/dual values
/// bracket the true optimum within the gap tolerance; dual_obj is the
/// certified upper-bound side.
///
/// Runs a second pass rescaled by the first pass's solution and slack
/// magnitudes whenever the first pass saw scales far from 1; keeps
/// whichever iterate has the smaller worst tolerance ratio.
inline SdpSolution solve(const LinearMatrixProblem& prob, const SolverSettings& settings = {}) {
    return SdpSolver(prob, settings).solve();
}

struct BlockResidual {
    std::string label;
    double min_eigenvalue = 0.0;
    bool flagged = false;
};

struct ResidualReport {
    std::vector<BlockResidual> blocks;
    double min_eigenvalue = 0.0;      // worst block eigenvalue at sol.x
    double complementarity = 0.0;     // sum_b <A_0 + sum x A_j, z_b>, if z present
    double dual_residual = 0.0;       // max_j |obj_j + sum_b <A_j, z_b>|, if z present
    double primal_obj_recomputed = 0.0;
    double dual_obj_recomputed = 0.0;
    bool any_flagged = false;
};

/// Recomputes primal residuals of a solution from scratch against the
/// exact problem data (converted entry-wise at full double precision,
/// accumulated in extended precision), flagging blocks whose smallest
/// eigenvalue falls below -tol. Dual-side quantities are recomputed when
/// the solution carries dual blocks.
inline ResidualReport check_solution(const LinearMatrixProblem& prob, const SdpSolution& sol,
                                     double tol) {
    using ipm::LD;
    using ipm::MatX;
    if (static_cast<int>(sol.x.size()) != prob.num_vars)
        throw std::invalid_argument("check_solution: solution size mismatch");
    for (double v : sol.x)
        if (!std::isfinite(v)) throw std::invalid_argument("check_solution: non-finite x");

    ResidualReport rep;
    rep.min_eigenvalue = std::numeric_limits<double>::infinity();
    const bool have_z = sol.z.size() == prob.blocks.size();
    LD compl_sum = 0;
    LD dual_obj = static_cast<LD>(prob.objective_constant.to_double());
    ipm::VecX dres = ipm::VecX::Zero(prob.num_vars);
    for (int j = 0; j < prob.num_vars; ++j)
        dres(j) = static_cast<LD>(prob.objective_coeffs[static_cast<std::size_t>(j)].to_double());

    for (std::size_t bi = 0; bi < prob.blocks.size(); ++bi) {
        const Block& b = prob.blocks[bi];
        MatX s = MatX::Zero(b.dim, b.dim);
        for (int j = 0; j <= prob.num_vars; ++j) {
            const LD coef = j == 0 ? LD(1) : static_cast<LD>(sol.x[static_cast<std::size_t>(j - 1)]);
            if (coef == LD(0)) continue;
            for (int r = 0; r < b.dim; ++r)
                for (int c = 0; c < b.dim; ++c)
                    s(r, c) += coef * static_cast<LD>(b.mat(j)(r, c).to_double());
        }
        ipm::symmetrize(s);
        BlockResidual br;
        br.label = b.label;
        br.min_eigenvalue = static_cast<double>(ipm::min_eig(s));
        br.flagged = br.min_eigenvalue < -tol;
        rep.any_flagged = rep.any_flagged || br.flagged;
        rep.min_eigenvalue = std::min(rep.min_eigenvalue, br.min_eigenvalue);
        if (have_z) {
            MatX z(b.dim, b.dim);
            for (int r = 0; r < b.dim; ++r)
                for (int c = 0; c < b.dim; ++c) z(r, c) = static_cast<LD>(sol.z[bi](r, c));
            compl_sum += (s.array() * z.array()).sum();
            for (int j = 0; j <= prob.num_vars; ++j) {
                LD dot = 0;
                for (int r = 0; r < b.dim; ++r)
                    for (int c = 0; c < b.dim; ++c)
                        dot += static_cast<LD>(b.mat(j)(r, c).to_double()) * z(r, c);
                if (j == 0)
                    dual_obj += dot;
                else
                    dres(j - 1) += dot;
            }
        }
        rep.blocks.push_back(std::move(br));
    }

    LD primal = static_cast<LD>(prob.objective_constant.to_double());
    for (int j = 0; j < prob.num_vars; ++j)
        primal += static_cast<LD>(prob.objective_coeffs[static_cast<std::size_t>(j)].to_double()) *
                  static_cast<LD>(sol.x[static_cast<std::size_t>(j)]);
    rep.primal_obj_recomputed = static_cast<double>(primal);
    if (have_z) {
        rep.complementarity = static_cast<double>(compl_sum);
        rep.dual_residual = static_cast<double>(dres.cwiseAbs().maxCoeff());
        rep.dual_obj_recomputed = static_cast<double>(dual_obj);
    }
    return rep;
}

}  // namespace eqlines
