#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "eqlines/gegenbauer.hpp"
#include "eqlines/matrices.hpp"
#include "eqlines/polynomial.hpp"
#include "eqlines/rational.hpp"

namespace eqlines {

/// A triple of pairwise inner products (u, v, t), each in [-1, 1].
struct TriplePoint {
    Rational u, v, t;

    TriplePoint(Rational u_, Rational v_, Rational t_)
        : u(std::move(u_)), v(std::move(v_)), t(std::move(t_)) {
        check(u);
        check(v);
        check(t);
    }

private:
    static void check(const Rational& x) {
        if (x.abs() > Rational(1))
            throw std::invalid_argument("TriplePoint: coordinate outside [-1, 1]");
    }
};

namespace detail {

/// Scalar part of the three-point kernel, written to avoid the 0/0 at
/// |u| = 1 or |v| = 1:
///   sum_m g_m (t - uv)^m ((1 - u^2)(1 - v^2))^{(k-m)/2},
/// where g_m are the coefficients of G_k for dimension n-1. Only terms
/// with m = k (mod 2) appear, so the exponent (k-m)/2 is integral.
template <class Scalar>
Scalar y_factor(const UniPoly& g, int k, const Scalar& u, const Scalar& v, const Scalar& t) {
    const Scalar s = t - u * v;
    const Scalar q = (Scalar(1) - u * u) * (Scalar(1) - v * v);
    std::vector<Scalar> s_pow(static_cast<std::size_t>(k) + 1), q_pow(k / 2 + 1);
    s_pow[0] = Scalar(1);
    for (int m = 1; m <= k; ++m) s_pow[m] = s_pow[m - 1] * s;
    q_pow[0] = Scalar(1);
    for (int m = 1; m <= k / 2; ++m) q_pow[m] = q_pow[m - 1] * q;
    Scalar acc(0);
    for (int m = k; m >= 0; m -= 2) {
        const Rational& gm = g.coeff(m);
        if (gm.is_zero()) continue;
        if constexpr (std::is_same_v<Scalar, Rational>)
            acc += gm * s_pow[m] * q_pow[(k - m) / 2];
        else
            acc += Scalar(gm.to_double()) * s_pow[m] * q_pow[(k - m) / 2];
    }
    return acc;
}

inline void require_three_point_args(int n, int p, int k) {
    if (n < 3) throw std::invalid_argument("three-point kernel: dimension must be >= 3");
    if (k < 0 || k > p)
        throw std::invalid_argument("three-point kernel: need 0 <= k <= p");
}

}  // namespace detail

/// Three-point matrix kernel of degree k for dimension n, truncated at p:
///   (Y_k)_{ij} = u^i v^j * y_factor(u, v, t),  0 <= i, j <= p - k.
/// Not symmetric in general (u and v enter through different powers).
/// Wherever the textbook radical form
///   u^i v^j ((1-u^2)(1-v^2))^{k/2} G_k^{(n-1)}((t-uv)/sqrt((1-u^2)(1-v^2)))
/// is defined the two agree; the polynomial form extends it continuously
/// to |u| = 1 or |v| = 1.
inline RationalMatrix y_matrix(int n, int p, int k, const TriplePoint& w) {
    detail::require_three_point_args(n, p, k);
    const UniPoly g = gegenbauer_poly(n - 1, k);
    const Rational f = detail::y_factor<Rational>(g, k, w.u, w.v, w.t);
    const int dim = p - k + 1;
    std::vector<Rational> u_pow(static_cast<std::size_t>(dim)), v_pow(u_pow.size());
    u_pow[0] = Rational(1);
    v_pow[0] = Rational(1);
    for (int i = 1; i < dim; ++i) {
        u_pow[i] = u_pow[i - 1] * w.u;
        v_pow[i] = v_pow[i - 1] * w.v;
    }
    RationalMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = u_pow[i] * v_pow[j] * f;
    return m;
}

/// Float reference evaluation of one y_matrix entry through the radical
/// formula. Only valid on interior triples (|u| < 1 and |v| < 1); used to
/// cross-check the polynomial form.
inline double y_entry_radical(int n, int k, int i, int j, double u, double v, double t) {
    const double q = (1.0 - u * u) * (1.0 - v * v);
    const double arg = (t - u * v) / std::sqrt(q);
    return std::pow(u, i) * std::pow(v, j) * std::pow(q, k / 2.0) *
           gegenbauer_eval_double(n - 1, k, arg);
}

/// Symmetrized three-point kernel with its generating parameters: the
/// average of y_matrix over all six orderings of (u, v, t). Swapping the
/// first two arguments transposes y_matrix, so the average is symmetric.
struct SMatrix {
    int n = 0;
    int p = 0;
    int k = 0;
    SymMatrixExact m{0};
};

inline SMatrix s_matrix(int n, int p, int k, const TriplePoint& w) {
    detail::require_three_point_args(n, p, k);
    const Rational& u = w.u;
    const Rational& v = w.v;
    const Rational& t = w.t;
    const TriplePoint perms[6] = {
        TriplePoint(u, v, t), TriplePoint(v, u, t), TriplePoint(u, t, v),
        TriplePoint(t, u, v), TriplePoint(v, t, u), TriplePoint(t, v, u)};
    const int dim = p - k + 1;
    RationalMatrix sum(dim);
    for (const auto& perm : perms) {
        const RationalMatrix y = y_matrix(n, p, k, perm);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) sum(i, j) += y(i, j);
    }
    const Rational sixth(1, 6);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) sum(i, j) *= sixth;
    return SMatrix{n, p, k, SymMatrixExact::from_matrix(sum)};
}

namespace detail {

/// Float evaluation of the symmetrized kernel at a dot-product triple.
inline void accumulate_s_float(const UniPoly& g, int k, int dim, double u, double v,
                               double t, Eigen::MatrixXd& acc) {
    const double trip[3] = {u, v, t};
    static const int perm[6][3] = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                                   {2, 0, 1}, {1, 2, 0}, {2, 1, 0}};
    for (const auto& pr : perm) {
        const double pu = trip[pr[0]], pv = trip[pr[1]], pt = trip[pr[2]];
        const double f = y_factor<double>(g, k, pu, pv, pt) / 6.0;
        double ui = 1.0;
        for (int i = 0; i < dim; ++i) {
            double vj = 1.0;
            for (int j = 0; j < dim; ++j) {
                acc(i, j) += ui * vj * f;
                vj *= pv;
            }
            ui *= pu;
        }
    }
}

}  // namespace detail

struct ProbeResult {
    double two_point_sum = 0.0;
    double min_eig = 0.0;
};

/// Empirical check of the two positivity facts behind the bound, over a
/// finite set C of unit vectors:
///   two_point_sum = sum over ordered pairs (x, y) of G_k^{(n)}(x.y),
///   min_eig = smallest eigenvalue of sum over ordered triples (x, y, z)
///             of S_k(x.y, x.z, y.z), evaluated in floating point.
/// Both are nonnegative in exact arithmetic for every C, so negative
/// results beyond rounding noise indicate a bug.
inline ProbeResult positivity_probe(int n, const std::vector<Eigen::VectorXd>& code,
                                    int k, int p) {
    detail::require_three_point_args(n, p, k);
    for (const auto& x : code) {
        if (x.size() != n)
            throw std::invalid_argument("positivity_probe: point dimension mismatch");
        if (std::abs(x.norm() - 1.0) > 1e-12)
            throw std::invalid_argument("positivity_probe: point is not unit length");
    }
    const UniPoly g = gegenbauer_poly(n - 1, k);
    const int dim = p - k + 1;
    const int c = static_cast<int>(code.size());
    Eigen::MatrixXd dots(c, c);
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) dots(i, j) = code[i].dot(code[j]);

    ProbeResult res;
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j)
            res.two_point_sum += gegenbauer_eval_double(n, k, dots(i, j));

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (int xi = 0; xi < c; ++xi)
        for (int yi = 0; yi < c; ++yi)
            for (int zi = 0; zi < c; ++zi)
                detail::accumulate_s_float(g, k, dim, dots(xi, yi), dots(xi, zi),
                                           dots(yi, zi), m);
    SymMatrixFloat sym(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) sym.set(i, j, 0.5 * (m(i, j) + m(j, i)));
    res.min_eig = psd_check(sym, 0.0).min_eigenvalue;
    return res;
}

}  // namespace eqlines
