#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "siegel/cyclo.hpp"
#include "siegel/error.hpp"

using namespace siegel;

namespace {

CycloElem zeta(long k) { return CycloElem::zeta_pow(5, k); }

CycloElem rand_elem(std::mt19937_64& rng, long ell = 5) {
    std::uniform_int_distribution<long> d(-5, 5);
    std::vector<Rational> c;
    for (long k = 1; k < ell; ++k)
        c.emplace_back(d(rng));
    return CycloElem::from_coords(ell, c);
}

} // namespace

TEST_CASE("galois action on basis monomials and composites") {
    CHECK(zeta(1).galois(2) == zeta(2));
    CycloElem two_plus_z = CycloElem::from_rational(5, 2) + zeta(1);
    CHECK(two_plus_z.galois(3) == CycloElem::from_rational(5, 2) + zeta(3));
    CHECK_THROWS_AS(zeta(1).galois(5), Error);

    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        CycloElem a = rand_elem(rng);
        long i = 1 + static_cast<long>(rng() % 4), j = 1 + static_cast<long>(rng() % 4);
        CHECK(a.galois(i).galois(j) == a.galois((i * j) % 5));
    }
}

TEST_CASE("trace against the explicit conjugate sum") {
    CHECK(CycloElem::from_rational(5, 1).trace_to_q() == 4);
    CHECK(zeta(1).trace_to_q() == -1);

    // conjugate-sum oracle
    auto trace_oracle = [](const CycloElem& a) {
        CycloElem s(a.ell());
        for (long i = 1; i < a.ell(); ++i)
            s = s + a.galois(i);
        return s.as_rational();
    };
    CycloElem v = zeta(1) + zeta(4);
    CHECK(trace_oracle(v) == -2);
    CHECK(v.trace_to_q() == -2);

    std::mt19937_64 rng(12);
    for (int t = 0; t < 20; ++t) {
        CycloElem a = rand_elem(rng);
        CHECK(a.trace_to_q() == trace_oracle(a));
    }
}

TEST_CASE("norms of reference elements") {
    CycloElem two_plus_z = CycloElem::from_rational(5, 2) + zeta(1);
    // brute-force conjugate product
    CycloElem prod = CycloElem::from_rational(5, 1);
    for (long i = 1; i < 5; ++i)
        prod = prod * two_plus_z.galois(i);
    CHECK(prod.as_rational() == 11);
    CHECK(two_plus_z.norm_to_q() == 11);
    CHECK(CycloElem::from_rational(5, 1).norm_to_q() == 1);
    CHECK((CycloElem::from_rational(5, 1) + zeta(1)).norm_to_q() == 1);
}

TEST_CASE("complex conjugation") {
    CHECK(zeta(1).conj() == zeta(4));
    CycloElem xi = Rational(1, 5) * (zeta(1) - zeta(4));
    CHECK(xi.conj() == -xi);
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        CycloElem a = rand_elem(rng);
        CHECK(a.conj().conj() == a);
    }
}

TEST_CASE("embeddings") {
    const mpfr_prec_t p = 256;
    BigComplex one = CycloElem::from_rational(5, 1).embed(2, p);
    CHECK((one - BigComplex(1, 0, p)).abs() < BigReal::pow2(-250, 64));

    BigComplex z1 = zeta(1).embed(1, p);
    BigReal ang = BigReal::pi(p).mul_2si(1) / BigReal(5, p);
    CHECK(abs(z1.re() - cos(ang)) < BigReal::pow2(-250, 64));
    CHECK(abs(z1.im() - sin(ang)) < BigReal::pow2(-250, 64));

    std::mt19937_64 rng(14);
    for (int t = 0; t < 10; ++t) {
        CycloElem a = rand_elem(rng);
        BigComplex va = a.embed(1, p), vc = a.conj().embed(1, p);
        CHECK((va * vc - BigComplex(va.norm(), BigReal(0, p))).abs() <
              BigReal::pow2(-240, 64));
    }
}

TEST_CASE("ring laws hold exactly") {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 40; ++t) {
        CycloElem a = rand_elem(rng), b = rand_elem(rng), c = rand_elem(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).galois(3) == a.galois(3) * b.galois(3));
    }
}

TEST_CASE("inverse via exact linear solve") {
    std::mt19937_64 rng(16);
    for (int t = 0; t < 15; ++t) {
        CycloElem a = rand_elem(rng);
        if (a.is_zero())
            continue;
        CHECK(a * a.inverse() == CycloElem::from_rational(5, 1));
    }
    CHECK_THROWS_AS(CycloElem(5).inverse(), Error);
}

TEST_CASE("solve_in_basis") {
    std::vector<CycloElem> basis{zeta(2), zeta(4), zeta(1), zeta(1) + zeta(3)};
    std::vector<Rational> unit = solve_in_basis(zeta(4), basis);
    CHECK(unit == std::vector<Rational>({0, 1, 0, 0}));

    std::mt19937_64 rng(17);
    for (int t = 0; t < 15; ++t) {
        CycloElem target = rand_elem(rng);
        std::vector<Rational> sol = solve_in_basis(target, basis);
        CycloElem back(5);
        for (size_t j = 0; j < basis.size(); ++j)
            back = back + sol[j] * basis[j];
        CHECK(back == target);
    }

    std::vector<CycloElem> dep{zeta(1), zeta(1) + zeta(2), zeta(2), zeta(3)};
    CHECK_THROWS_WITH_AS(solve_in_basis(zeta(4), dep), "basis not independent", Error);
}

TEST_CASE("parser and printer") {
    CycloElem e = CycloElem::parse(5, "2 + z^1 - 3/2*z^4");
    CHECK(e == CycloElem::from_rational(5, 2) + zeta(1) - Rational(3, 2) * zeta(4));
    CHECK(CycloElem::parse(5, "0").is_zero());
    CHECK(CycloElem::parse(5, "z") == zeta(1));
    CHECK_THROWS_AS(CycloElem::parse(5, "2 +"), Error);
    CHECK_THROWS_AS(CycloElem::parse(5, "q^2"), Error);

    std::mt19937_64 rng(18);
    for (int t = 0; t < 25; ++t) {
        CycloElem a = rand_elem(rng);
        CHECK(CycloElem::parse(5, a.to_string()) == a);
    }
}

TEST_CASE("larger prime sanity") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 10; ++t) {
        CycloElem a = rand_elem(rng, 7), b = rand_elem(rng, 7);
        CHECK((a * b).galois(2) == a.galois(2) * b.galois(2));
        CHECK(a.trace_to_q() == [&] {
            CycloElem s(7);
            for (long i = 1; i < 7; ++i)
                s = s + a.galois(i);
            return s.as_rational();
        }());
    }
}

TEST_CASE("ideals require nonzero generators") {
    CHECK_THROWS_AS(CycloIdeal(CycloElem(5)), Error);
    CycloElem two_plus_z = CycloElem::from_rational(5, 2) + zeta(1);
    CHECK(CycloIdeal(two_plus_z).absolute_norm() == 11);
    CHECK(CycloIdeal(-two_plus_z).absolute_norm() == 11);
}
