#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eqlines/rational.hpp"

namespace eqlines {

/// Dense square matrix over the rationals.
class RationalMatrix {
public:
    explicit RationalMatrix(int dim) : n_(dim), a_(check_dim(dim)) {}

    int dim() const { return n_; }

    const Rational& operator()(int i, int j) const { return a_[idx(i, j)]; }
    Rational& operator()(int i, int j) { return a_[idx(i, j)]; }

    RationalMatrix transposed() const {
        RationalMatrix t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

private:
    static std::size_t check_dim(int dim) {
        if (dim < 0) throw std::invalid_argument("RationalMatrix: negative dimension");
        return static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
    }
    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw std::out_of_range("RationalMatrix: index out of range");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<Rational> a_;
};

class SymMatrixFloat;

/// Symmetric matrix with exact rational entries. Symmetry holds by
/// construction: set(i, j, v) writes both (i, j) and (j, i).
class SymMatrixExact {
public:
    explicit SymMatrixExact(int dim) : m_(dim) {}

    /// Validates symmetry of a general matrix; throws if it fails.
    static SymMatrixExact from_matrix(const RationalMatrix& m) {
        for (int i = 0; i < m.dim(); ++i)
            for (int j = i + 1; j < m.dim(); ++j)
                if (m(i, j) != m(j, i))
                    throw std::invalid_argument("SymMatrixExact: matrix is not symmetric");
        SymMatrixExact s(m.dim());
        s.m_ = m;
        return s;
    }

    int dim() const { return m_.dim(); }

    const Rational& operator()(int i, int j) const { return m_(i, j); }

    void set(int i, int j, const Rational& v) {
        m_(i, j) = v;
        m_(j, i) = v;
    }

    SymMatrixFloat to_float() const;

    friend bool operator==(const SymMatrixExact& a, const SymMatrixExact& b) {
        return a.m_ == b.m_;
    }

private:
    RationalMatrix m_;
};

/// Symmetric matrix of doubles; storage is exactly symmetric because
/// writes go through set().
class SymMatrixFloat {
public:
    explicit SymMatrixFloat(int dim) : m_(Eigen::MatrixXd::Zero(dim, dim)) {
        if (dim < 0) throw std::invalid_argument("SymMatrixFloat: negative dimension");
    }

    int dim() const { return static_cast<int>(m_.rows()); }

    double operator()(int i, int j) const { return m_(i, j); }

    void set(int i, int j, double v) {
        m_(i, j) = v;
        m_(j, i) = v;
    }

    const Eigen::MatrixXd& mat() const { return m_; }

private:
    Eigen::MatrixXd m_;
};

inline SymMatrixFloat SymMatrixExact::to_float() const {
    SymMatrixFloat f(dim());
    for (int i = 0; i < dim(); ++i)
        for (int j = i; j < dim(); ++j) f.set(i, j, m_(i, j).to_double());
    return f;
}

struct PsdReport {
    bool is_psd = false;
    double min_eigenvalue = 0.0;
};

/// Tests positive semidefiniteness up to tolerance: accepts when the
/// smallest eigenvalue is >= -tol. Eigenvalues come from Householder
/// tridiagonalization followed by the implicit QL iteration.
inline PsdReport psd_check(const SymMatrixFloat& m, double tol) {
    if (tol < 0) throw std::invalid_argument("psd_check: negative tolerance");
    if (m.dim() == 0) return PsdReport{true, 0.0};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.mat(), Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    return PsdReport{min_eig >= -tol, min_eig};
}

}  // namespace eqlines
