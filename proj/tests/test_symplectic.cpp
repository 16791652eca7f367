#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegel/error.hpp"
#include "siegel/sampling.hpp"
#include "siegel/symplectic.hpp"
#include "siegel/theta.hpp"

using namespace siegel;

TEST_CASE("symplectic membership") {
    for (int g = 1; g <= 3; ++g) {
        CHECK(is_symplectic(QMat::identity(2 * g)));
        CHECK(is_symplectic(QMat::symplectic_j(g)));
        QMat d = QMat::identity(2 * g);
        d.at(0, 0) = 2;
        CHECK(!is_symplectic(d));
    }
    CHECK(!is_symplectic(QMat(3, 3)));
}

TEST_CASE("siegel point validation") {
    const mpfr_prec_t p = 128;
    CMat bad(2, 2, p);
    bad.at(0, 0) = BigComplex(0, 1, p);
    bad.at(1, 1) = BigComplex(0, 1, p);
    bad.at(0, 1) = BigComplex(1, 0, p);
    bad.at(1, 0) = BigComplex(0, 0, p); // grossly asymmetric
    CHECK_THROWS_WITH_AS(SiegelPoint::from_matrix(bad), "not in H_g", Error);

    CMat neg(1, 1, p);
    neg.at(0, 0) = BigComplex(0, -1, p);
    CHECK_THROWS_WITH_AS(SiegelPoint::from_matrix(neg), "not in H_g", Error);

    Rng rng(5);
    SiegelPoint ok = random_siegel_point(2, p, rng);
    CHECK(ok.g() == 2);
}

TEST_CASE("fractional action basics") {
    const mpfr_prec_t p = 192;
    Rng rng(7);
    SiegelPoint z = random_siegel_point(2, p, rng);

    SiegelPoint same = act_on_h(QMat::identity(4), z);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK((same.at(i, j) - z.at(i, j)).abs() < BigReal::pow2(-180, 64));

    // J sends Z to -Z^{-1}: check J(J(Z)) = Z
    SiegelPoint jz = act_on_h(QMat::symplectic_j(2), z);
    SiegelPoint jjz = act_on_h(QMat::symplectic_j(2), jz);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK((jjz.at(i, j) - z.at(i, j)).abs() < BigReal::pow2(-150, 64));

    QMat notsp = QMat::identity(4);
    notsp.at(0, 1) = 1;
    CHECK_THROWS_AS(act_on_h(notsp, z), Error);
}

TEST_CASE("action composition over random generator words") {
    const mpfr_prec_t p = 192;
    Rng rng(11);
    for (int t = 0; t < 12; ++t) {
        int g = 1 + (t % 2);
        QMat a = random_symplectic(g, rng), b = random_symplectic(g, rng);
        SiegelPoint z = random_siegel_point(g, p, rng);
        SiegelPoint lhs = act_on_h(a * b, z);
        SiegelPoint rhs = act_on_h(a, act_on_h(b, z));
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j)
                CHECK((lhs.at(i, j) - rhs.at(i, j)).abs() < BigReal::pow2(-120, 64));
    }
}

TEST_CASE("symplectic reduction: canonical fast path") {
    SymplecticReduction red = symplectic_reduce(QMat::symplectic_j(2));
    CHECK(red.t == QMat::identity(4));
    CHECK(red.divisors == std::vector<Rational>({1, 1}));
}

TEST_CASE("symplectic reduction: scrambled forms") {
    Rng rng(13);
    for (int t = 0; t < 25; ++t) {
        int g = 1 + (t % 3);
        std::vector<long> divs;
        long cur = 1 + static_cast<long>(rng() % 3);
        for (int i = 0; i < g; ++i) {
            divs.push_back(cur);
            cur *= 1 + static_cast<long>(rng() % 3);
        }
        QMat form(2 * g, 2 * g);
        for (int i = 0; i < g; ++i) {
            form.at(i, g + i) = -divs[static_cast<size_t>(i)];
            form.at(g + i, i) = divs[static_cast<size_t>(i)];
        }
        QMat u = random_unimodular(2 * g, rng);
        QMat gram = u * form * u.transpose();

        SymplecticReduction red = symplectic_reduce(gram, t % 2 == 1);
        QMat expect(2 * g, 2 * g);
        for (int i = 0; i < g; ++i) {
            expect.at(i, g + i) = -red.divisors[static_cast<size_t>(i)];
            expect.at(g + i, i) = red.divisors[static_cast<size_t>(i)];
        }
        CHECK(red.t * gram * red.t.transpose() == expect);
        // elementary divisors are basis independent
        std::vector<Rational> want;
        for (long d : divs)
            want.emplace_back(d);
        CHECK(red.divisors == want);
        Rational dt = red.t.det();
        CHECK((dt == 1 || dt == -1));
        CHECK(red.t.is_integral());
    }
}

TEST_CASE("symplectic reduction: rational forms and errors") {
    // scaled standard form reduces with scaled divisors
    QMat form = QMat::symplectic_j(2);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            form.at(i, j) /= 25;
    Rng rng(17);
    QMat u = random_unimodular(4, rng);
    SymplecticReduction red = symplectic_reduce(u * form * u.transpose());
    CHECK(red.divisors == std::vector<Rational>({Rational(1, 25), Rational(1, 25)}));

    QMat degenerate(4, 4);
    CHECK_THROWS_WITH_AS(symplectic_reduce(degenerate), "degenerate alternating form", Error);

    QMat nonalt(2, 2);
    nonalt.at(0, 1) = 1;
    nonalt.at(1, 0) = 1;
    CHECK_THROWS_AS(symplectic_reduce(nonalt), Error);
}

TEST_CASE("characteristic permutation") {
    CharSets sets = build_char_sets(2);

    // identity: {A^T C} = {B^T D} = 0
    for (const auto& v : sets.s_minus) {
        ThetaChar w = char_permute(QMat::identity(4), v);
        CHECK(w.r == v.r);
        CHECK(w.s == v.s);
    }

    auto key_of = [](const ThetaChar& c) {
        std::string k;
        for (const auto& q : c.r)
            k += q.get_str() + ",";
        for (const auto& q : c.s)
            k += q.get_str() + ",";
        return k;
    };

    Rng rng(19);
    for (int t = 0; t < 50; ++t) {
        QMat m = random_symplectic(2, rng);
        std::set<std::string> in, out;
        for (const auto& v : sets.s_minus) {
            in.insert(key_of(v));
            out.insert(key_of(char_permute(m, v)));
        }
        CHECK(in == out);
        std::set<std::string> pin, pout;
        for (const auto& v : sets.s_plus) {
            pin.insert(key_of(v));
            pout.insert(key_of(char_permute(m, v)));
        }
        CHECK(pin == pout);

        QMat m2 = random_symplectic(2, rng);
        const ThetaChar& v = sets.s_plus[t % sets.s_plus.size()];
        CHECK(key_of(char_permute(m * m2, v)) == key_of(char_permute(m2, char_permute(m, v))));
    }

    ThetaChar bad;
    bad.r = {Rational(1, 3), Rational(0)};
    bad.s = {Rational(0), Rational(0)};
    CHECK_THROWS_AS(char_permute(QMat::identity(4), bad), Error);
}
