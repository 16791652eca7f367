#include "siegel/bigcomplex.hpp"

#include "siegel/error.hpp"

namespace siegel {

BigComplex BigComplex::pow_int(unsigned long e) const {
    BigComplex acc(1, 0, prec());
    BigComplex base = *this;
    while (e > 0) {
        if (e & 1UL)
            acc = acc * base;
        base = base * base;
        e >>= 1UL;
    }
    return acc;
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigReal nb = b.norm();
    if (nb.is_zero())
        throw Error("complex division by zero");
    BigComplex num = a * b.conj();
    return {num.re() / nb, num.im() / nb};
}

BigComplex cplx_exp(const BigComplex& z) {
    mpfr_prec_t p = z.prec();
    BigReal mag = exp(z.re());
    BigReal c(p), s(p);
    mpfr_sin_cos(s.raw(), c.raw(), z.im().raw(), MPFR_RNDN);
    return {mag * c, mag * s};
}

BigComplex e_of(const BigReal& x) {
    mpfr_prec_t p = x.prec();
    BigReal angle = (BigReal::pi(p).mul_2si(1)) * x;
    BigReal c(p), s(p);
    mpfr_sin_cos(s.raw(), c.raw(), angle.raw(), MPFR_RNDN);
    return {c, s};
}

BigComplex e_of(const Rational& q, mpfr_prec_t prec) {
    // reduce mod 1 exactly: q - floor(q)
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    Rational reduced = q - Rational(fl);
    BigComplex v = e_of(BigReal::from_rational(reduced, prec + 16));
    return v.round_to(prec);
}

BigComplex cplx_e(const BigComplex& w) {
    mpfr_prec_t p = w.prec();
    BigReal two_pi = BigReal::pi(p).mul_2si(1);
    BigReal mag = exp(-(two_pi * w.im()));
    BigReal angle = two_pi * w.re();
    BigReal c(p), s(p);
    mpfr_sin_cos(s.raw(), c.raw(), angle.raw(), MPFR_RNDN);
    return {mag * c, mag * s};
}

bool agree_relative(const BigComplex& a, const BigComplex& b, long d) {
    if (d < 1)
        throw Error("agreement check requires d >= 1");
    const mpfr_prec_t scratch = 96;
    BigReal ma = a.abs().round_to(scratch);
    BigReal mb = b.abs().round_to(scratch);
    BigReal mx = ma > mb ? ma : mb;
    BigReal diff = (a - b).abs().round_to(scratch);
    BigReal ten(10, scratch);
    BigReal tol(scratch);
    mpfr_pow_si(tol.raw(), ten.raw(), 1 - d, MPFR_RNDN);
    return diff <= tol * mx;
}

bool agree_to_digits(const BigComplex& a, const BigComplex& b, long d) {
    if (d < 1)
        throw Error("agree_to_digits requires d >= 1");
    const mpfr_prec_t scratch = 96;
    BigReal ma = a.abs().round_to(scratch);
    BigReal mb = b.abs().round_to(scratch);

    mpfr_prec_t pmin = a.prec() < b.prec() ? a.prec() : b.prec();
    // 10^{-0.3*pmin}
    BigReal ten(10, scratch);
    BigReal vanish(scratch);
    mpfr_pow_si(vanish.raw(), ten.raw(), -(3 * static_cast<long>(pmin)) / 10, MPFR_RNDN);
    if (ma <= vanish && mb <= vanish)
        return true;

    return agree_relative(a, b, d);
}

} // namespace siegel
