#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "siegel/cmdata.hpp"
#include "siegel/error.hpp"

using namespace siegel;

namespace {

CycloElem zeta(long k) { return CycloElem::zeta_pow(5, k); }

CycloElem rand_elem(std::mt19937_64& rng, long ell = 5) {
    std::uniform_int_distribution<long> d(-4, 4);
    std::vector<Rational> c;
    for (long k = 1; k < ell; ++k)
        c.emplace_back(d(rng));
    return CycloElem::from_coords(ell, c);
}

} // namespace

TEST_CASE("context construction for the first primes") {
    for (long ell : {3L, 5L, 7L, 11L}) {
        CmContext ctx = CmContext::make(ell);
        CHECK(ctx.g == (ell - 1) / 2);
        CHECK(ctx.xi.conj() == -ctx.xi);
        // seed basis is an integral basis: solving any integral element
        // in it must produce integers
        std::mt19937_64 rng(static_cast<unsigned long>(ell));
        std::vector<CycloElem> xs = ctx.seed_basis();
        for (int t = 0; t < 5; ++t) {
            std::vector<Rational> sol = solve_in_basis(rand_elem(rng, ell), xs);
            for (const auto& q : sol)
                CHECK(q.get_den() == 1);
        }
    }
    CHECK_THROWS_AS(CmContext::make(9), Error);
}

TEST_CASE("type norm on reference inputs") {
    CmContext ctx = CmContext::make(5);
    CHECK(type_norm(ctx, CycloElem::from_rational(5, 1)) == CycloElem::from_rational(5, 1));

    CycloElem two_plus_z = CycloElem::from_rational(5, 2) + zeta(1);
    CycloElem expected = Rational(-2) * zeta(1) + Rational(-4) * zeta(2) +
                         Rational(-2) * zeta(3) + Rational(-3) * zeta(4);
    CHECK(type_norm(ctx, two_plus_z) == expected);
    // equals (2+zeta)(2+zeta^3)
    CHECK(type_norm(ctx, two_plus_z) ==
          two_plus_z * (CycloElem::from_rational(5, 2) + zeta(3)));

    std::mt19937_64 rng(21);
    for (int t = 0; t < 100; ++t) {
        CycloElem a = rand_elem(rng), b = rand_elem(rng);
        CHECK(type_norm(ctx, a * b) == type_norm(ctx, a) * type_norm(ctx, b));
    }
}

TEST_CASE("psi embedding") {
    CmContext ctx = CmContext::make(5);
    const mpfr_prec_t p = 256;

    std::vector<BigComplex> zero = psi_embed(ctx, CycloElem(5), p);
    for (const auto& v : zero)
        CHECK(v.is_zero());

    std::vector<BigComplex> zv = psi_embed(ctx, zeta(1), p);
    REQUIRE(zv.size() == 2);
    for (int i = 0; i < 2; ++i) {
        BigComplex expect = e_of(Rational(i + 1, 5), p);
        CHECK((zv[static_cast<size_t>(i)] - expect).abs() < BigReal::pow2(-250, 64));
    }

    std::mt19937_64 rng(22);
    for (int t = 0; t < 10; ++t) {
        CycloElem a = rand_elem(rng), b = rand_elem(rng);
        auto va = psi_embed(ctx, a, p), vb = psi_embed(ctx, b, p),
             vab = psi_embed(ctx, a + b, p);
        for (size_t i = 0; i < va.size(); ++i)
            CHECK((va[i] + vb[i] - vab[i]).abs() < BigReal::pow2(-250, 64));
    }
}

TEST_CASE("riemann pairing is alternating and antisymmetric") {
    CmContext ctx = CmContext::make(5);
    RiemannFormSpec form(ctx.xi, 1);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 30; ++t) {
        CycloElem a = rand_elem(rng), b = rand_elem(rng);
        CHECK(riemann_pairing(form, a, a) == 0);
        CHECK(riemann_pairing(form, a, b) == -riemann_pairing(form, b, a));
    }
    CHECK_THROWS_AS(RiemannFormSpec(zeta(1), 1), Error);
}

TEST_CASE("m_c values") {
    CmContext ctx = CmContext::make(5);
    CycloElem two_plus_z = CycloElem::from_rational(5, 2) + zeta(1);
    CHECK(compute_mc(ctx, 5, CycloIdeal(two_plus_z)) == Rational(11, 25));
    CHECK(compute_mc(ctx, 5, CycloIdeal(CycloElem::from_rational(5, 1))) == Rational(1, 25));
    // multiplicativity in the generator with the N^{-2} factor counted once
    CycloElem mu = CycloElem::from_rational(5, 1) + zeta(2); // unit, norm 1
    CHECK(compute_mc(ctx, 5, CycloIdeal(two_plus_z * mu)) ==
          compute_mc(ctx, 5, CycloIdeal(two_plus_z)) * mu.norm_to_q());
    CycloElem seven = CycloElem::from_rational(5, 7);
    CHECK(compute_mc(ctx, 5, CycloIdeal(two_plus_z * seven)) ==
          Rational(11, 25) * seven.norm_to_q());
}

TEST_CASE("gram matrix of the polarized lattice basis") {
    CmContext ctx = CmContext::make(5);
    const long n = 5;
    CycloElem lam = CycloElem::from_rational(5, 2) + zeta(1);

    CycloElem tn_inv = type_norm(ctx, lam).inverse();
    std::vector<CycloElem> scaled, raw;
    for (const auto& x : ctx.seed_basis()) {
        raw.push_back(tn_inv * x);
        scaled.push_back(Rational(n) * (tn_inv * x));
    }

    RiemannFormSpec form(ctx.xi, compute_mc(ctx, n, CycloIdeal(lam)));
    QMat gram = gram_matrix(form, scaled);
    CHECK(gram_is_standard_j(gram));
    CHECK(gram.is_integral());

    // raw (unscaled) lattice with the polarization scalar of that lattice
    RiemannFormSpec raw_form(ctx.xi, lam.norm_to_q());
    CHECK(gram_is_standard_j(gram_matrix(raw_form, raw)));
    // and with m_c it picks up exactly the 1/n^2 scale
    QMat raw_gram = gram_matrix(form, raw);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(raw_gram.at(i, j) * n * n == gram.at(i, j));

    // permuted basis permutes the matrix
    std::vector<CycloElem> perm{scaled[1], scaled[0], scaled[3], scaled[2]};
    QMat pg = gram_matrix(form, perm);
    CHECK(pg.at(0, 3) == gram.at(1, 2));
    CHECK(pg.at(2, 1) == gram.at(3, 0));
}

TEST_CASE("inverse different generated by xi") {
    CmContext ctx = CmContext::make(5);
    std::vector<CycloElem> xs = ctx.seed_basis();
    QMat tr(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rational v =
                (ctx.xi * xs[static_cast<size_t>(i)] * xs[static_cast<size_t>(j)].conj())
                    .trace_to_q();
            CHECK(v.get_den() == 1);
            tr.at(i, j) = v;
        }
    Rational d = tr.det();
    CHECK((d == 1 || d == -1));
}

TEST_CASE("type positivity of xi") {
    for (long ell : {3L, 5L, 7L}) {
        CmContext ctx = CmContext::make(ell);
        for (long e : ctx.type_exponents) {
            BigComplex v = ctx.xi.embed(e, 256);
            CHECK(v.im().sign() > 0);
            CHECK(abs(v.re()) < BigReal::pow2(-240, 64));
        }
    }
}
