#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eqlines/polynomial.hpp"
#include "eqlines/rational.hpp"

namespace eqlines {

namespace detail {

inline void require_gegenbauer_args(int n, int k) {
    if (n < 2) throw std::invalid_argument("gegenbauer: dimension must be >= 2");
    if (k < 0) throw std::invalid_argument("gegenbauer: degree must be >= 0");
}

}  // namespace detail

/// Memoized table of the spherical Gegenbauer polynomials G_k^{(n)},
/// normalized so that G_k(1) = 1 and generated by the recursion
///   G_0 = 1,  G_1 = t,
///   (k + n - 3) G_k = (2k + n - 4) t G_{k-1} - (k - 1) G_{k-2}.
/// Lookups are returned by value so callers never hold references into
/// the growing cache; concurrent lookup-or-insert is serialized.
class GegenbauerCache {
public:
    static GegenbauerCache& instance() {
        static GegenbauerCache cache;
        return cache;
    }

    UniPoly get(int n, int k) {
        detail::require_gegenbauer_args(n, k);
        std::lock_guard<std::mutex> lock(mu_);
        auto& polys = memo_[n];
        if (polys.empty()) {
            polys.push_back(UniPoly::constant(Rational(1)));
            polys.push_back(UniPoly::monomial(Rational(1), 1));
        }
        const UniPoly t = UniPoly::monomial(Rational(1), 1);
        while (static_cast<int>(polys.size()) <= k) {
            const int j = static_cast<int>(polys.size());
            UniPoly next = Rational(2 * j + n - 4) * (t * polys[j - 1]) -
                           Rational(j - 1) * polys[j - 2];
            next *= Rational(1, j + n - 3);
            polys.push_back(std::move(next));
        }
        return polys[static_cast<std::size_t>(k)];
    }

private:
    GegenbauerCache() = default;

    std::mutex mu_;
    std::map<int, std::vector<UniPoly>> memo_;
};

/// Degree-k Gegenbauer polynomial for dimension n (cached).
inline UniPoly gegenbauer_poly(int n, int k) { return GegenbauerCache::instance().get(n, k); }

/// Exact evaluation of G_k^{(n)}(t) via the value recursion, without
/// materializing the polynomial.
inline Rational gegenbauer_eval(int n, int k, const Rational& t) {
    detail::require_gegenbauer_args(n, k);
    if (k == 0) return Rational(1);
    Rational prev(1), cur = t;
    for (int j = 2; j <= k; ++j) {
        Rational next = (Rational(2 * j + n - 4) * t * cur - Rational(j - 1) * prev) *
                        Rational(1, j + n - 3);
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Same recursion in floating point, for fast inexact probes.
inline double gegenbauer_eval_double(int n, int k, double t) {
    detail::require_gegenbauer_args(n, k);
    if (k == 0) return 1.0;
    double prev = 1.0, cur = t;
    for (int j = 2; j <= k; ++j) {
        const double next =
            ((2.0 * j + n - 4.0) * t * cur - (j - 1.0) * prev) / (j + n - 3.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Coefficients of a polynomial in the basis {G_0, ..., G_d} for a fixed
/// dimension: f = sum_k coeffs[k] * G_k^{(n)}.
struct GegenbauerExpansion {
    int n = 0;
    std::vector<Rational> coeffs;

    int degree() const {
        return coeffs.empty() ? kZeroPolyDegree : static_cast<int>(coeffs.size()) - 1;
    }

    const Rational& coeff(int k) const {
        static const Rational zero(0);
        if (k < 0 || k >= static_cast<int>(coeffs.size())) return zero;
        return coeffs[static_cast<std::size_t>(k)];
    }

    UniPoly reconstruct() const {
        UniPoly sum;
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            sum += coeffs[k] * gegenbauer_poly(n, static_cast<int>(k));
        return sum;
    }
};

/// Expands f exactly in the Gegenbauer basis for dimension n by leading
/// term elimination (the basis is triangular in degree). The zero
/// polynomial expands to no terms.
inline GegenbauerExpansion gegenbauer_expand(int n, const UniPoly& f) {
    if (n < 2) throw std::invalid_argument("gegenbauer_expand: dimension must be >= 2");
    GegenbauerExpansion ex;
    ex.n = n;
    if (f.is_zero()) return ex;
    ex.coeffs.assign(static_cast<std::size_t>(f.degree()) + 1, Rational(0));
    UniPoly rem = f;
    while (!rem.is_zero()) {
        const int d = rem.degree();
        const UniPoly g = gegenbauer_poly(n, d);
        const Rational c = rem.coeff(d) / g.coeff(d);
        ex.coeffs[static_cast<std::size_t>(d)] = c;
        rem -= c * g;
        if (rem.degree() >= d)
            throw std::logic_error("gegenbauer_expand: elimination failed to reduce degree");
    }
    return ex;
}

/// Degree-4 Gegenbauer polynomial in closed form:
///   ((n+2)(n+4) t^4 - 6(n+2) t^2 + 3) / (n^2 - 1).
inline UniPoly g4_closed_form(int n) {
    if (n < 2) throw std::invalid_argument("g4_closed_form: dimension must be >= 2");
    const Rational d(static_cast<long>(n) * n - 1);
    return UniPoly{Rational(3) / d, Rational(0), Rational(-6 * (n + 2)) / d, Rational(0),
                   Rational(static_cast<long>(n + 2) * (n + 4)) / d};
}

}  // namespace eqlines
