#pragma once

#include <vector>

#include "siegel/linalg.hpp"

namespace siegel {

// Point of the Siegel upper half-space: symmetric g x g complex matrix
// with positive-definite imaginary part. Construction validates both
// (symmetry residual below 2^{-prec+16}, leading principal minors of the
// imaginary part positive at working precision) and throws "not in H_g"
// otherwise.
class SiegelPoint {
public:
    static SiegelPoint from_matrix(const CMat& z);

    int g() const { return z_.rows(); }
    mpfr_prec_t prec() const { return z_.at(0, 0).prec(); }
    const CMat& mat() const { return z_; }
    const BigComplex& at(int i, int j) const { return z_.at(i, j); }
    // Im Z as a real matrix (entries at working precision)
    std::vector<BigReal> imag_part() const;
    SiegelPoint round_to(mpfr_prec_t prec) const;

private:
    explicit SiegelPoint(CMat z) : z_(std::move(z)) {}
    CMat z_;
};

// exact check of M^T J M = J
bool is_symplectic(const QMat& m);

// fractional action (AZ+B)(CZ+D)^{-1}; requires a symplectic integral matrix.
// Throws "unstable action" when CZ+D is too close to singular.
SiegelPoint act_on_h(const QMat& gamma, const SiegelPoint& z);

struct SymplecticReduction {
    QMat t;                         // T G T^T = [[0, -E], [E, 0]]
    std::vector<Rational> divisors; // diagonal of E, divisibility chain
};

// Frobenius reduction of a nondegenerate antisymmetric form. For integral G
// the transform T is unimodular. Pivot choice: smallest nonzero absolute
// value, ties by lowest row index (or highest when reversed_ties is set, to
// exercise basis independence).
// Throws "degenerate alternating form".
SymplecticReduction symplectic_reduce(const QMat& gram, bool reversed_ties = false);

} // namespace siegel
