#pragma once

#include <vector>

#include "siegel/symplectic.hpp"

namespace siegel {

// Theta characteristic [r; s], r and s rational g-vectors. `level` pins the
// modular level N used by big_theta; when 0 the least common denominator of
// the entries is used instead. (A table row like (2,4,0,2)/6 must keep
// level 6 even though its entries reduce to thirds.)
struct ThetaChar {
    std::vector<Rational> r, s;
    long level = 0;

    int g() const { return static_cast<int>(r.size()); }
    long denominator() const;
    long effective_level() const { return level > 0 ? level : denominator(); }
    // entries reduced into [0,1)
    ThetaChar reduced_mod_1() const;
    bool is_half_integer() const;
    // r^T s
    Rational dot_rs() const;

    static ThetaChar from_vector(const std::vector<Rational>& v, long level = 0);

    friend ThetaChar operator-(const ThetaChar& a);
    friend ThetaChar operator+(const ThetaChar& a, const ThetaChar& b);
    friend ThetaChar operator-(const ThetaChar& a, const ThetaChar& b);
};

enum class Parity { even, odd };

// Parity of a half-integer characteristic: odd iff e(2 r^T s) = -1,
// equivalently 4 r^T s is an odd integer. Rejects non half-integer input.
Parity classify_char(const ThetaChar& v);

struct CharSets {
    int g;
    std::vector<ThetaChar> s_minus, s_plus; // odd / even half-integer chars
};

// exhaustive split of {0,1/2}^{2g}; |S_-| = 2^{g-1}(2^g-1), |S_+| = 2^{g-1}(2^g+1)
CharSets build_char_sets(int g);

struct TruncationPlan {
    long radius;        // box |n|_inf <= radius
    BigReal tail_bound; // certified bound on the dropped tail plus rounding floor
    BigReal lambda_min; // lower bound for the smallest eigenvalue of Im Z
};

// Chooses the lattice box so the Gaussian tail is below 2^{-target_prec}.
// Throws "not in H_g" when no positive lower bound on Im Z exists.
TruncationPlan plan_truncation(const SiegelPoint& z, const ThetaChar& v, mpfr_prec_t target_prec);

// theta([r;s], Z) by the truncated lattice sum, deterministic lexicographic
// summation order over the box.
BigComplex theta_eval(const ThetaChar& v, const SiegelPoint& z, mpfr_prec_t prec);

// The Siegel modular function built from theta constants: level-N quotient of
// shifted odd-characteristic products over even-characteristic products.
// Throws "pole of Theta" when a denominator theta vanishes numerically.
BigComplex big_theta(const ThetaChar& v, const SiegelPoint& z, mpfr_prec_t prec);

// Genus-1 Siegel function g_{[r;s]}(tau) as the classical q-product.
// Requires (r,s) not both integral and Im tau > 0.
BigComplex siegel_function(const Rational& r, const Rational& s, const BigComplex& tau,
                           mpfr_prec_t prec);

// Characteristic permutation attached to an integral symplectic matrix:
// v -> gamma^T v + ((A^T C)_diag, (B^T D)_diag)/2 mod Z^{2g}, restricted to
// half-integer characteristics.
ThetaChar char_permute(const QMat& gamma, const ThetaChar& v);

} // namespace siegel
