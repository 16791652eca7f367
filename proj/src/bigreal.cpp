#include "siegel/bigreal.hpp"

#include <climits>
#include <cstdlib>

#include "siegel/error.hpp"

namespace siegel {

BigReal BigReal::from_rational(const Rational& q, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_q(r.x_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::from_string(const std::string& s, mpfr_prec_t prec) {
    BigReal r(prec);
    if (mpfr_set_str(r.x_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw Error("cannot parse decimal literal: " + s);
    return r;
}

BigReal BigReal::pi(mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_const_pi(r.x_, MPFR_RNDN);
    return r;
}

BigReal BigReal::pow2(long e, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_si(r.x_, 1, MPFR_RNDN);
    mpfr_mul_2si(r.x_, r.x_, e, MPFR_RNDN);
    return r;
}

BigReal BigReal::round_to(mpfr_prec_t prec) const {
    BigReal r(prec);
    mpfr_set(r.x_, x_, MPFR_RNDN);
    return r;
}

long BigReal::exponent() const {
    if (is_zero())
        return LONG_MIN / 2;
    return static_cast<long>(mpfr_get_exp(x_));
}

std::string BigReal::to_decimal(size_t digits) const {
    if (is_zero())
        return "0";
    if (!mpfr_number_p(x_))
        return mpfr_nan_p(x_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
    if (digits < 2)
        digits = 2;
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, x_, MPFR_RNDN);
    std::string digs(s);
    mpfr_free_str(s);
    std::string sign_part;
    if (digs[0] == '-') {
        sign_part = "-";
        digs.erase(0, 1);
    }
    // mpfr exponent convention: value = 0.digs * 10^e
    std::string out = sign_part + digs.substr(0, 1) + "." + digs.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

BigReal BigReal::mul_2si(long e) const {
    BigReal r(prec());
    mpfr_mul_2si(r.x_, x_, e, MPFR_RNDN);
    return r;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(join_prec(a, b));
    mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(join_prec(a, b));
    mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(join_prec(a, b));
    mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
    BigReal r(join_prec(a, b));
    mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

BigReal operator-(const BigReal& a) {
    BigReal r(a.prec());
    mpfr_neg(r.x_, a.x_, MPFR_RNDN);
    return r;
}

BigReal abs(const BigReal& a) {
    BigReal r(a.prec());
    mpfr_abs(r.x_, a.x_, MPFR_RNDN);
    return r;
}

BigReal sqrt(const BigReal& a) {
    BigReal r(a.prec());
    mpfr_sqrt(r.x_, a.x_, MPFR_RNDN);
    return r;
}

BigReal exp(const BigReal& a) {
    BigReal r(a.prec());
    mpfr_exp(r.x_, a.x_, MPFR_RNDN);
    return r;
}

BigReal log(const BigReal& a) {
    BigReal r(a.prec());
    mpfr_log(r.x_, a.x_, MPFR_RNDN);
    return r;
}

BigReal sin(const BigReal& a) {
    BigReal r(a.prec());
    mpfr_sin(r.x_, a.x_, MPFR_RNDN);
    return r;
}

BigReal cos(const BigReal& a) {
    BigReal r(a.prec());
    mpfr_cos(r.x_, a.x_, MPFR_RNDN);
    return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
    BigReal r(join_prec(y, x));
    mpfr_atan2(r.x_, y.x_, x.x_, MPFR_RNDN);
    return r;
}

BigReal floor(const BigReal& a) {
    BigReal r(a.prec());
    mpfr_floor(r.x_, a.x_);
    return r;
}

BigReal hypot(const BigReal& a, const BigReal& b) {
    BigReal r(join_prec(a, b));
    mpfr_hypot(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

} // namespace siegel
