#pragma once

#include <string>
#include <vector>

#include "siegel/bigcomplex.hpp"

namespace siegel {

// Element of Q(zeta_ell) for an odd prime ell, written in the basis
// {zeta, zeta^2, ..., zeta^{ell-1}}. The basis is closed under the Galois
// action and under complex conjugation, which both become coordinate
// permutations; the constant 1 is -(zeta + ... + zeta^{ell-1}).
// Representation is canonical: equal elements have equal coordinates.
class CycloElem {
public:
    explicit CycloElem(long ell);
    static CycloElem from_rational(long ell, const Rational& q);
    static CycloElem zeta_pow(long ell, long k);
    static CycloElem from_coords(long ell, std::vector<Rational> coords);

    long ell() const { return ell_; }
    const std::vector<Rational>& coords() const { return coords_; }
    bool is_zero() const;
    // true iff all denominators are 1 (lies in the ring of integers)
    bool is_integral() const;
    bool is_rational() const;
    Rational as_rational() const; // requires is_rational()

    CycloElem galois(long i) const; // zeta -> zeta^i, gcd(i, ell) = 1
    CycloElem conj() const { return galois(ell_ - 1); }
    Rational trace_to_q() const;
    Rational norm_to_q() const;
    CycloElem inverse() const; // throws on zero

    BigComplex embed(long i, mpfr_prec_t prec) const;

    std::string to_string() const;
    static CycloElem parse(long ell, const std::string& text);

    friend CycloElem operator+(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator-(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator-(const CycloElem& a);
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator*(const Rational& q, const CycloElem& a);
    friend bool operator==(const CycloElem& a, const CycloElem& b) {
        return a.ell_ == b.ell_ && a.coords_ == b.coords_;
    }

private:
    long ell_;
    std::vector<Rational> coords_; // ell-1 entries
};

// Coordinates of `target` in a Q-basis of 2g elements, solved exactly.
// Throws "basis not independent" when the basis matrix is singular.
std::vector<Rational> solve_in_basis(const CycloElem& target, const std::vector<CycloElem>& basis);

// Principal ideal of O_K, class-number-one setting.
class CycloIdeal {
public:
    explicit CycloIdeal(CycloElem gen);
    const CycloElem& generator() const { return gen_; }
    // |N_{K/Q}(gen)|
    Rational absolute_norm() const;

private:
    CycloElem gen_;
};

bool is_odd_prime(long ell);

} // namespace siegel
