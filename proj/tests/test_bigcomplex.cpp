#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegel/bigcomplex.hpp"
#include "siegel/error.hpp"

using namespace siegel;

namespace {

bool close_abs(const BigReal& a, const BigReal& b, long log2_tol) {
    return abs(a - b) < BigReal::pow2(log2_tol, 64);
}

} // namespace

TEST_CASE("precision promotion takes the max") {
    BigReal a(1, 128), b(1, 256);
    CHECK((a + b).prec() == 256);
    CHECK((a * b).prec() == 256);
    CHECK((a / b).prec() == 256);
    BigComplex u(BigReal(1, 128), BigReal(0, 320));
    CHECK(u.prec() == 320);
}

TEST_CASE("e_of at rational anchor points") {
    const mpfr_prec_t p = 256;
    BigComplex one = e_of(Rational(0), p);
    CHECK(one.re().to_double() == 1.0);
    CHECK(one.im().is_zero());

    BigComplex minus_one = e_of(Rational(1, 2), p);
    CHECK(close_abs(minus_one.re(), BigReal(-1, p), -250));
    CHECK(close_abs(minus_one.im(), BigReal(0, p), -250));

    // e(1/8) = sqrt(2)/2 * (1 + i), checked against a doubled-precision
    // evaluation of sqrt
    BigComplex v = e_of(Rational(1, 8), p);
    BigReal s2 = sqrt(BigReal(2, 2 * p)) / BigReal(2, 2 * p);
    CHECK(close_abs(v.re(), s2, -250));
    CHECK(close_abs(v.im(), s2, -250));
}

TEST_CASE("e_of has unit modulus and period 1") {
    const mpfr_prec_t p = 256;
    for (int k = 1; k <= 20; ++k) {
        BigReal x = BigReal(7 * k + 1, p) / BigReal(23, p);
        BigComplex v = e_of(x);
        CHECK(close_abs(v.abs(), BigReal(1, p), -250));
        BigComplex w = e_of(x + BigReal(1, p));
        CHECK((v - w).abs() < BigReal::pow2(-245, 64));
    }
}

TEST_CASE("cplx_exp anchors and doubled-precision consistency") {
    const mpfr_prec_t p = 256;
    BigComplex z0(0, 0, p);
    BigComplex e0 = cplx_exp(z0);
    CHECK(e0.re().to_double() == 1.0);
    CHECK(e0.im().is_zero());

    BigComplex ipi(BigReal(0, p), BigReal::pi(p));
    BigComplex em1 = cplx_exp(ipi);
    CHECK(close_abs(em1.re(), BigReal(-1, p), -250));
    CHECK(close_abs(em1.im(), BigReal(0, p), -250));

    BigComplex z(1, 1, p);
    BigComplex low = cplx_exp(z);
    BigComplex high = cplx_exp(z.round_to(2 * p));
    // within 4 ulp at precision p
    CHECK((low - high).abs() < low.abs().mul_2si(-static_cast<long>(p) + 2));
}

TEST_CASE("complex field operations") {
    const mpfr_prec_t p = 128;
    BigComplex a(3, -2, p), b(-1, 5, p);
    BigComplex q = (a * b) / b;
    CHECK((q - a).abs() < BigReal::pow2(-120, 64));
    CHECK((a * a.conj() - BigComplex(a.norm(), BigReal(0, p))).abs() <
          BigReal::pow2(-120, 64));
    CHECK(a.pow_int(3).abs().to_double() == doctest::Approx(std::pow(a.abs().to_double(), 3)));
    CHECK_THROWS_AS(a / BigComplex(0, 0, p), Error);
}

TEST_CASE("agree_to_digits boundary behavior") {
    const mpfr_prec_t p = 256;
    auto mk = [&](const char* re) {
        return BigComplex(BigReal::from_string(re, p), BigReal(0, p));
    };
    CHECK(agree_to_digits(mk("1.00000"), mk("1.00001"), 5));
    CHECK(!agree_to_digits(mk("1.0"), mk("2.0"), 2));
    CHECK(agree_to_digits(BigComplex(0, 0, p), BigComplex(0, 0, p), 10));
    // the both-vanish clause fires below 10^{-0.3 prec}
    BigComplex tiny1 = mk("1e-100"), tiny2 = mk("3e-101");
    CHECK(agree_to_digits(tiny1, tiny2, 8));
    CHECK(!agree_relative(tiny1, tiny2, 8));
}

TEST_CASE("decimal round trip") {
    const mpfr_prec_t p = 200;
    BigReal x = BigReal::from_rational(Rational(-355, 113000), p);
    std::string s = x.to_decimal(40);
    BigReal y = BigReal::from_string(s, p);
    CHECK(abs(x - y) < abs(x).mul_2si(-125));
    CHECK(BigReal(0, p).to_decimal(10) == "0");
    CHECK(BigReal::from_string("3.25e2", p).to_double() == 325.0);
}

TEST_CASE("doubling precision changes composites below the scaling bound") {
    const mpfr_prec_t p = 192;
    // composite: exp(sin(x) + pi*x) / sqrt(1 + x^2)
    auto eval = [](mpfr_prec_t prec) {
        BigReal x = BigReal::from_rational(Rational(5, 7), prec);
        BigReal one(1, prec);
        return exp(sin(x) + BigReal::pi(prec) * x) / sqrt(one + x * x);
    };
    BigReal low = eval(p), high = eval(2 * p);
    CHECK(abs(low - high) / abs(high) < BigReal::pow2(-(static_cast<long>(p) - 8), 64));
}
