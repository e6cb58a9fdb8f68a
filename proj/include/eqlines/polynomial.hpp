#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eqlines/rational.hpp"

namespace eqlines {

/// Degree reported for the zero polynomial (stands in for minus infinity).
inline constexpr int kZeroPolyDegree = -1;

/// Univariate polynomial with exact rational coefficients, stored
/// lowest-degree first. The zero polynomial has an empty coefficient
/// vector; otherwise the leading coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rational& a) { return UniPoly({a}); }
    /// c * t^k
    static UniPoly monomial(const Rational& c, int k) {
        if (c.is_zero()) return zero();
        std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
        v.back() = c;
        return UniPoly(std::move(v));
    }

    int degree() const { return c_.empty() ? kZeroPolyDegree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of t^k (zero beyond the stored range).
    const Rational& coeff(int k) const {
        static const Rational zero_coeff(0);
        if (k < 0 || k >= static_cast<int>(c_.size())) return zero_coeff;
        return c_[static_cast<std::size_t>(k)];
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    double eval_double(double x) const {
        double acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
        return acc;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator*=(const Rational& s) {
        if (s.is_zero()) { c_.clear(); return *this; }
        for (auto& a : c_) a *= s;
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(prod));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
        if (p.is_zero()) return os << "0";
        for (int k = p.degree(); k >= 0; --k) {
            if (p.coeff(k).is_zero()) continue;
            if (k != p.degree()) os << (p.coeff(k).sign() > 0 ? " + " : " - ");
            else if (p.coeff(k).sign() < 0) os << "-";
            os << p.coeff(k).abs();
            if (k > 0) os << "*t^" << k;
        }
        return os;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Evaluates p at x by Horner's rule.
inline Rational poly_eval(const UniPoly& p, const Rational& x) { return p.eval(x); }

}  // namespace eqlines
