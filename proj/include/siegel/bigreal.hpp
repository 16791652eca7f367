#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace siegel {

using Rational = mpq_class;
using Integer = mpz_class;

// Arbitrary-precision binary floating point, value semantics.
//
// Every value carries its own working precision in bits. Binary operations
// round once (to nearest) at the maximum of the two operand precisions, so
// mixing precisions promotes instead of silently truncating.
class BigReal {
public:
    explicit BigReal(mpfr_prec_t prec = 256) {
        mpfr_init2(x_, clamp(prec));
        mpfr_set_zero(x_, 1);
    }
    BigReal(long v, mpfr_prec_t prec) {
        mpfr_init2(x_, clamp(prec));
        mpfr_set_si(x_, v, MPFR_RNDN);
    }
    BigReal(const BigReal& o) {
        mpfr_init2(x_, o.prec());
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(x_, 2);
        mpfr_swap(x_, o.x_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(x_, o.prec());
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~BigReal() { mpfr_clear(x_); }

    static BigReal from_rational(const Rational& q, mpfr_prec_t prec);
    static BigReal from_string(const std::string& s, mpfr_prec_t prec);
    static BigReal pi(mpfr_prec_t prec);
    // 2^e exactly
    static BigReal pow2(long e, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
    BigReal round_to(mpfr_prec_t prec) const;

    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }
    // binary exponent of the leading bit; very negative for zero
    long exponent() const;
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(x_, MPFR_RNDN); }
    // "d.dddddde±X" with the requested count of significant digits
    std::string to_decimal(size_t digits) const;

    BigReal mul_2si(long e) const;

    mpfr_srcptr raw() const { return x_; }
    mpfr_ptr raw() { return x_; }

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a);

    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.x_, b.x_) != 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.x_, b.x_) != 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.x_, b.x_) != 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.x_, b.x_) != 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.x_, b.x_) != 0; }

    friend BigReal abs(const BigReal& a);
    friend BigReal sqrt(const BigReal& a);
    friend BigReal exp(const BigReal& a);
    friend BigReal log(const BigReal& a);
    friend BigReal sin(const BigReal& a);
    friend BigReal cos(const BigReal& a);
    friend BigReal atan2(const BigReal& y, const BigReal& x);
    friend BigReal floor(const BigReal& a);
    friend BigReal hypot(const BigReal& a, const BigReal& b);

private:
    static mpfr_prec_t clamp(mpfr_prec_t p) { return p < MPFR_PREC_MIN ? MPFR_PREC_MIN : p; }
    mpfr_t x_;
};

inline mpfr_prec_t join_prec(const BigReal& a, const BigReal& b) {
    return a.prec() > b.prec() ? a.prec() : b.prec();
}

} // namespace siegel
