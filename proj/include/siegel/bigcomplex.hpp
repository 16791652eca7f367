#pragma once

#include "siegel/bigreal.hpp"

namespace siegel {

// Complex value over BigReal. Both components always share one precision.
class BigComplex {
public:
    explicit BigComplex(mpfr_prec_t prec = 256) : re_(prec), im_(prec) {}
    BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {
        mpfr_prec_t p = join_prec(re_, im_);
        if (re_.prec() != p) re_ = re_.round_to(p);
        if (im_.prec() != p) im_ = im_.round_to(p);
    }
    BigComplex(long re, long im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}

    static BigComplex from_rationals(const Rational& re, const Rational& im, mpfr_prec_t prec) {
        return {BigReal::from_rational(re, prec), BigReal::from_rational(im, prec)};
    }

    const BigReal& re() const { return re_; }
    const BigReal& im() const { return im_; }
    mpfr_prec_t prec() const { return re_.prec(); }
    BigComplex round_to(mpfr_prec_t prec) const { return {re_.round_to(prec), im_.round_to(prec)}; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    BigComplex conj() const { return {re_, -im_}; }
    BigReal abs() const { return hypot(re_, im_); }
    // |z|^2
    BigReal norm() const { return re_ * re_ + im_ * im_; }
    BigComplex mul_2si(long e) const { return {re_.mul_2si(e), im_.mul_2si(e)}; }
    // principal-branch argument
    BigReal arg() const { return atan2(im_, re_); }

    // z^e by binary powering, e >= 0
    BigComplex pow_int(unsigned long e) const;

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re_, -a.im_}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend BigComplex operator*(const BigReal& a, const BigComplex& b) {
        return {a * b.re_, a * b.im_};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

private:
    BigReal re_, im_;
};

// exp(z), componentwise faithful
BigComplex cplx_exp(const BigComplex& z);

// e(x) = exp(2*pi*i*x) for real x; unit modulus up to rounding
BigComplex e_of(const BigReal& x);

// e(q) with the argument reduced mod 1 exactly before any rounding
BigComplex e_of(const Rational& q, mpfr_prec_t prec);

// e(w) = exp(2*pi*i*w) for complex w
BigComplex cplx_e(const BigComplex& w);

// true iff |a-b| <= 10^{1-d} * max(|a|,|b|), or both magnitudes are below
// 10^{-0.3*min(prec)} (the both-vanish clause)
bool agree_to_digits(const BigComplex& a, const BigComplex& b, long d);

// strict relative form, meaningful at any magnitude: no both-vanish clause
bool agree_relative(const BigComplex& a, const BigComplex& b, long d);

} // namespace siegel
