#pragma once

#include <vector>

#include "siegel/bigcomplex.hpp"

namespace siegel {

// Dense matrix of exact rationals.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static QMat identity(int n);
    // standard alternating form [[0, -I], [I, 0]] of size 2g
    static QMat symplectic_j(int g);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    QMat transpose() const;
    bool is_integral() const;
    bool is_antisymmetric() const;
    Rational det() const;
    QMat inverse() const; // throws on singular

    friend QMat operator*(const QMat& a, const QMat& b);
    friend QMat operator+(const QMat& a, const QMat& b);
    friend QMat operator-(const QMat& a, const QMat& b);
    friend bool operator==(const QMat& a, const QMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

// Dense complex matrix at working precision; just enough for the g x g
// blocks handled here.
class CMat {
public:
    CMat() : rows_(0), cols_(0) {}
    CMat(int rows, int cols, mpfr_prec_t prec)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, BigComplex(prec)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigComplex& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const BigComplex& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    CMat transpose() const;
    friend CMat operator*(const CMat& a, const CMat& b);
    friend CMat operator+(const CMat& a, const CMat& b);

private:
    int rows_, cols_;
    std::vector<BigComplex> a_;
};

struct CSolveResult {
    CMat x;
    // log2 of a rough condition estimate: max |entry| / min |pivot|
    double cond_log2;
};

// Solves A X = B by Gaussian elimination with partial pivoting.
// Throws "singular complex matrix" when a zero pivot appears.
CSolveResult cmat_solve(const CMat& a, const CMat& b);

} // namespace siegel
