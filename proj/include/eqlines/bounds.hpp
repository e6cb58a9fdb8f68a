#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqlines/gegenbauer.hpp"
#include "eqlines/polynomial.hpp"
#include "eqlines/rational.hpp"

namespace eqlines {

// Closed-form and linear-programming upper bounds for sets of equiangular
// lines, plus enumeration of the common angles 1/(2k-1) that can occur in
// large line sets.

/// An admissible common angle: large equiangular line sets in dimension n
/// force cos(angle) = 1/(2k-1) for an integer k with (2k-1)^2 <= 2n.
struct AngleCandidate {
    int k = 2;
    Rational a;  // 1/(2k-1)
};

enum class BoundMethod { gerzon, relative, ls_third, delsarte_lp, harmonic4, g_min, sdp };

inline std::string to_string(BoundMethod m) {
    switch (m) {
        case BoundMethod::gerzon: return "gerzon";
        case BoundMethod::relative: return "relative";
        case BoundMethod::ls_third: return "ls_third";
        case BoundMethod::delsarte_lp: return "delsarte_lp";
        case BoundMethod::harmonic4: return "harmonic4";
        case BoundMethod::g_min: return "g_min";
        case BoundMethod::sdp: return "sdp";
    }
    return "?";
}

struct BoundValue {
    Rational value;
    BoundMethod method = BoundMethod::gerzon;
};

/// n(n+1)/2: no more equiangular lines than the dimension of the space of
/// symmetric n x n matrices of trace zero plus one.
inline std::int64_t gerzon(int n) {
    if (n < 2) throw std::invalid_argument("gerzon: dimension must be >= 2");
    return static_cast<std::int64_t>(n) * (n + 1) / 2;
}

/// n(1-a^2)/(1-n a^2) when 1 - n a^2 > 0; empty otherwise (the bound says
/// nothing once the denominator hits zero).
inline std::optional<Rational> relative_bound(int n, const Rational& a) {
    const Rational a2 = a * a;
    const Rational den = Rational(1) - Rational(n) * a2;
    if (!(den > Rational(0))) return std::nullopt;
    return Rational(n) * (Rational(1) - a2) / den;
}

/// At angle 1/3 and dimension >= 16 there are at most 2(n-1) lines.
inline std::int64_t lemmens_seidel_third(int n) {
    if (n < 16) throw std::invalid_argument("lemmens_seidel_third: requires n >= 16");
    return 2 * (static_cast<std::int64_t>(n) - 1);
}

/// All angle candidates 1/(2k-1) admissible in dimension n, smallest k
/// first. The k-range test (2k-1)^2 <= 2n is evaluated in integers.
inline std::vector<AngleCandidate> candidate_angles(int n) {
    if (n < 15) throw std::invalid_argument("candidate_angles: requires n >= 15");
    std::vector<AngleCandidate> out;
    for (int k = 2;; ++k) {
        const std::int64_t odd = 2 * static_cast<std::int64_t>(k) - 1;
        if (odd * odd > 2 * static_cast<std::int64_t>(n)) break;
        out.push_back({k, Rational(1, odd)});
    }
    return out;
}

/// A polynomial offered to lp_delsarte failed one of the sign conditions.
class LpHypothesisError : public std::domain_error {
public:
    explicit LpHypothesisError(const std::string& what) : std::domain_error(what) {}
};

/// Linear-programming bound: if f has a positive mean term, nonnegative
/// Gegenbauer coefficients, and f(t) <= 0 on the allowed inner products T,
/// then any spherical code with inner products in T has at most
/// floor(f(1)/f_0) points. All three hypotheses are checked exactly.
inline std::int64_t lp_delsarte(int n, const std::vector<Rational>& T, const UniPoly& f) {
    const GegenbauerExpansion ex = gegenbauer_expand(n, f);
    if (!(ex.coeff(0) > Rational(0)))
        throw LpHypothesisError("lp_delsarte: f_0 = " + ex.coeff(0).to_string() +
                                " is not positive");
    for (int k = 1; k <= ex.degree(); ++k)
        if (ex.coeff(k) < Rational(0))
            throw LpHypothesisError("lp_delsarte: f_" + std::to_string(k) + " = " +
                                    ex.coeff(k).to_string() + " is negative");
    for (const Rational& t : T)
        if (f.eval(t) > Rational(0))
            throw LpHypothesisError("lp_delsarte: f(" + t.to_string() + ") = " +
                                    f.eval(t).to_string() + " is positive");
    const Rational ratio = f.eval(Rational(1)) / ex.coeff(0);
    return static_cast<std::int64_t>(ratio.floor().get_si());
}

struct HarmonicIndex4Bound {
    int n = 0;
    Rational a;
    UniPoly f;
    Rational bound;
};

/// The quartic f(t) = (t^2 - a^2)(t^2 + (a^2 n + 4a^2 - 6)/(n + 4)) with
/// a = 1/(2k-1) and n = 3(2k-1)^2 - 4 passes the LP hypotheses with
/// f_1 = f_2 = f_3 = 0 and yields exactly (n+1)(n+2)/6 lines at angle a.
inline HarmonicIndex4Bound harmonic_index4_bound(int k) {
    if (k < 2) throw std::invalid_argument("harmonic_index4_bound: requires k >= 2");
    HarmonicIndex4Bound out;
    const std::int64_t odd = 2 * static_cast<std::int64_t>(k) - 1;
    out.n = static_cast<int>(3 * odd * odd - 4);
    out.a = Rational(1, odd);
    const Rational a2 = out.a * out.a;
    const Rational shift = (a2 * Rational(out.n) + Rational(4) * a2 - Rational(6)) /
                           Rational(out.n + 4);
    const UniPoly t2 = UniPoly::monomial(Rational(1), 2);
    out.f = (t2 - UniPoly::constant(a2)) * (t2 + UniPoly::constant(shift));
    out.bound = Rational(lp_delsarte(out.n, {out.a, -out.a}, out.f));
    const Rational expected =
        Rational(out.n + 1) * Rational(out.n + 2) / Rational(6);
    if (out.bound != expected)
        throw std::logic_error("harmonic_index4_bound: LP value " + out.bound.to_string() +
                               " differs from closed form " + expected.to_string());
    return out;
}

/// No scanned even degree had a negative Gegenbauer value, so the
/// truncated minimum in g_bound is over an empty set.
class NoQualifyingDegreeError : public std::domain_error {
public:
    explicit NoQualifyingDegreeError(const std::string& what) : std::domain_error(what) {}
};

struct GBound {
    Rational bound;  // min over qualifying k of 1/|G_k(a)|, plus 1
    int argmin_k = 0;
};

/// Bound at angle a from single Gegenbauer polynomials: for any even k with
/// G_k^{(n)}(a) < 0 there are at most 1/|G_k^{(n)}(a)| + 1 lines. Scans
/// even k in [2, k_max] and returns the best, preferring smaller k on ties.
inline GBound g_bound(int n, const Rational& a, int k_max = 100) {
    if (n < 2) throw std::invalid_argument("g_bound: dimension must be >= 2");
    if (!(a > Rational(0)) || !(a < Rational(1)))
        throw std::invalid_argument("g_bound: angle must lie in (0,1)");
    if (k_max < 2 || k_max % 2 != 0)
        throw std::invalid_argument("g_bound: k_max must be even and >= 2");
    std::optional<GBound> best;
    for (int k = 2; k <= k_max; k += 2) {
        const Rational g = gegenbauer_eval(n, k, a);
        if (!(g < Rational(0))) continue;
        const Rational cand = g.abs().reciprocal() + Rational(1);
        if (!best || cand < best->bound) best = GBound{cand, k};
    }
    if (!best)
        throw NoQualifyingDegreeError(
            "g_bound: no even degree in [2, " + std::to_string(k_max) +
            "] has a negative Gegenbauer value at a = " + a.to_string());
    return *best;
}

}  // namespace eqlines
