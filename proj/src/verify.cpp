#include "siegel/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "siegel/error.hpp"
#include "siegel/sampling.hpp"

namespace siegel {

namespace {

double residual_log2(const BigReal& err, const BigReal& bound) {
    if (err.is_zero())
        return -1000.0;
    BigReal q = err / bound;
    return static_cast<double>(q.exponent());
}

struct Collector {
    SuiteResult res;
    double worst = -1.0e9;

    explicit Collector(std::string name) { res.name = std::move(name); }

    // record err against bound; normalized residual must stay below 1
    void check(const BigReal& err, const BigReal& bound, const std::string& what) {
        double r = residual_log2(err, bound);
        res.residuals_log2.push_back(r);
        worst = std::max(worst, r);
        if (!(err < bound) && res.passed) {
            res.passed = false;
            res.detail = what + " exceeded bound (log2 residual " + std::to_string(r) + ")";
        }
    }
    void require(bool ok, const std::string& what) {
        if (!ok && res.passed) {
            res.passed = false;
            res.detail = what;
        }
    }
    SuiteResult finish() {
        if (res.passed) {
            std::ostringstream os;
            os << "ok";
            if (!res.residuals_log2.empty())
                os << ", max log2 residual " << static_cast<long>(worst);
            res.detail = os.str();
        }
        return res;
    }
};

std::vector<Rational> qmat_apply_t(const QMat& m, const std::vector<Rational>& v) {
    std::vector<Rational> out(v.size(), Rational(0));
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t k = 0; k < v.size(); ++k)
            out[i] += m.at(static_cast<int>(k), static_cast<int>(i)) * v[k];
    return out;
}

ThetaChar transform_char(const QMat& gamma, const ThetaChar& v) {
    std::vector<Rational> flat;
    flat.insert(flat.end(), v.r.begin(), v.r.end());
    flat.insert(flat.end(), v.s.begin(), v.s.end());
    return ThetaChar::from_vector(qmat_apply_t(gamma, flat), v.level);
}

CycloElem random_cyclo(long ell, Rng& rng, long height = 4) {
    std::uniform_int_distribution<long> d(-height, height);
    std::vector<Rational> coords;
    for (long k = 1; k < ell; ++k)
        coords.emplace_back(d(rng));
    return CycloElem::from_coords(ell, coords);
}

// ---------------------------------------------------------------- cyclo ----

SuiteResult suite_cyclo_ring(const VerifyOptions& opt) {
    Collector col("cyclo.ring-laws");
    Rng rng(opt.seed ^ 0x11);
    const long ell = opt.ell;
    for (int t = 0; t < 50; ++t) {
        CycloElem a = random_cyclo(ell, rng), b = random_cyclo(ell, rng),
                  c = random_cyclo(ell, rng);
        col.require((a * b) * c == a * (b * c), "associativity");
        col.require(a * (b + c) == a * b + a * c, "distributivity");
        col.require(a * b == b * a, "commutativity");
        long i = 1 + static_cast<long>(rng() % static_cast<unsigned long>(ell - 1));
        long j = 1 + static_cast<long>(rng() % static_cast<unsigned long>(ell - 1));
        col.require((a * b).galois(i) == a.galois(i) * b.galois(i), "galois multiplicative");
        col.require(a.galois(i).galois(j) == a.galois((i * j) % ell), "galois action law");
        col.require(a.conj().conj() == a, "conjugation involution");
        if (!a.is_zero())
            col.require(a * a.inverse() == CycloElem::from_rational(ell, 1), "inverse");
    }
    return col.finish();
}

SuiteResult suite_cyclo_embed(const VerifyOptions& opt) {
    Collector col("cyclo.trace-norm-vs-embeddings");
    Rng rng(opt.seed ^ 0x12);
    const long ell = opt.ell;
    const mpfr_prec_t p = 256;
    BigReal bound = BigReal::pow2(-200, 64);
    for (int t = 0; t < 10; ++t) {
        CycloElem a = random_cyclo(ell, rng);
        BigComplex tr(p), nm(1, 0, p);
        for (long i = 1; i < ell; ++i) {
            tr = tr + a.embed(i, p);
            nm = nm * a.embed(i, p);
        }
        BigReal terr = (tr - BigComplex::from_rationals(a.trace_to_q(), 0, p)).abs();
        BigReal nerr = (nm - BigComplex::from_rationals(a.norm_to_q(), 0, p)).abs();
        // normalize the norm error by the norm magnitude
        BigReal scale = nm.abs() + BigReal(1, p);
        col.check(terr, bound, "trace vs embeddings");
        col.check(nerr / scale, bound, "norm vs embeddings");
    }
    // trace of a purely imaginary element vanishes
    for (int t = 0; t < 10; ++t) {
        CycloElem a = random_cyclo(ell, rng);
        CycloElem im = a - a.conj();
        col.require(im.conj() == -im, "imaginary construction");
        col.require(im.trace_to_q() == 0, "trace of imaginary element");
    }
    return col.finish();
}

SuiteResult suite_cyclo_parse(const VerifyOptions& opt) {
    Collector col("cyclo.parse-print-roundtrip");
    Rng rng(opt.seed ^ 0x13);
    for (int t = 0; t < 25; ++t) {
        CycloElem a = random_cyclo(opt.ell, rng);
        col.require(CycloElem::parse(opt.ell, a.to_string()) == a, "round-trip");
    }
    col.require(CycloElem::parse(5, "2 + z^1 - 3/2*z^4") ==
                    CycloElem::from_rational(5, 2) + CycloElem::zeta_pow(5, 1) -
                        Rational(3, 2) * CycloElem::zeta_pow(5, 4),
                "fixed literal");
    return col.finish();
}

SuiteResult suite_cyclo_solve(const VerifyOptions& opt) {
    Collector col("cyclo.solve-in-basis");
    Rng rng(opt.seed ^ 0x14);
    CmContext ctx = CmContext::make(opt.ell);
    std::vector<CycloElem> xs = ctx.seed_basis();
    for (int t = 0; t < 20; ++t) {
        CycloElem target = random_cyclo(opt.ell, rng);
        std::vector<Rational> sol = solve_in_basis(target, xs);
        CycloElem back(opt.ell);
        for (size_t j = 0; j < xs.size(); ++j)
            back = back + sol[j] * xs[j];
        col.require(back == target, "recombination");
    }
    return col.finish();
}

// ----------------------------------------------------------- symplectic ----

SuiteResult suite_symplectic_basics(const VerifyOptions& opt) {
    Collector col("symplectic.membership-and-action");
    Rng rng(opt.seed ^ 0x21);
    const mpfr_prec_t p = opt.prec;
    for (int g = 1; g <= 2; ++g) {
        col.require(is_symplectic(QMat::identity(2 * g)), "identity symplectic");
        col.require(is_symplectic(QMat::symplectic_j(g)), "J symplectic");
        QMat d2 = QMat::identity(2 * g);
        d2.at(0, 0) = 2;
        col.require(!is_symplectic(d2), "diag(2) not symplectic");
    }
    BigReal bound = BigReal::pow2(-static_cast<long>(p) + 40, 64);
    for (int t = 0; t < 8; ++t) {
        int g = 1 + (t % 2);
        QMat m1 = random_symplectic(g, rng), m2 = random_symplectic(g, rng);
        SiegelPoint z = random_siegel_point(g, p, rng);
        SiegelPoint lhs = act_on_h(m1 * m2, z);
        SiegelPoint rhs = act_on_h(m1, act_on_h(m2, z));
        BigReal err(64);
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j)
                err = err + (lhs.at(i, j) - rhs.at(i, j)).abs();
        col.check(err, bound, "action composition");
        // J acts as Z -> -Z^{-1}
        SiegelPoint jz = act_on_h(QMat::symplectic_j(g), z);
        CSolveResult inv = cmat_solve(z.mat(), [&] {
            CMat id(g, g, p);
            for (int i = 0; i < g; ++i)
                id.at(i, i) = BigComplex(1, 0, p);
            return id;
        }());
        BigReal err2(64);
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j)
                err2 = err2 + (jz.at(i, j) + inv.x.at(i, j)).abs();
        col.check(err2, bound, "J action");
    }
    return col.finish();
}

SuiteResult suite_symplectic_reduce(const VerifyOptions& opt) {
    Collector col("symplectic.reduction");
    Rng rng(opt.seed ^ 0x22);
    std::uniform_int_distribution<long> div_d(1, 3);
    for (int t = 0; t < 20; ++t) {
        int g = 1 + (t % 3);
        // random form with a known divisor chain, scrambled unimodularly
        std::vector<long> divs;
        long cur = div_d(rng);
        for (int i = 0; i < g; ++i) {
            divs.push_back(cur);
            cur *= div_d(rng);
        }
        QMat form(2 * g, 2 * g);
        for (int i = 0; i < g; ++i) {
            form.at(i, g + i) = -divs[static_cast<size_t>(i)];
            form.at(g + i, i) = divs[static_cast<size_t>(i)];
        }
        QMat u = random_unimodular(2 * g, rng);
        QMat gram = u * form * u.transpose();
        SymplecticReduction red = symplectic_reduce(gram, t % 2 == 1);
        col.require(red.t * gram * red.t.transpose() ==
                        [&] {
                            QMat e(2 * g, 2 * g);
                            for (int i = 0; i < g; ++i) {
                                e.at(i, g + i) = -red.divisors[static_cast<size_t>(i)];
                                e.at(g + i, i) = red.divisors[static_cast<size_t>(i)];
                            }
                            return e;
                        }(),
                    "round-trip");
        std::vector<Rational> expect;
        for (long d : divs)
            expect.emplace_back(d);
        col.require(red.divisors == expect, "elementary divisors invariant");
        Rational dt = red.t.det();
        col.require(dt == 1 || dt == -1, "unimodular transform");
    }
    // canonical input returns the identity transform
    SymplecticReduction triv = symplectic_reduce(QMat::symplectic_j(2));
    col.require(triv.t == QMat::identity(4), "identity on canonical input");
    return col.finish();
}

SuiteResult suite_symplectic_chars(const VerifyOptions& opt) {
    Collector col("symplectic.characteristic-permutation");
    Rng rng(opt.seed ^ 0x23);
    const int g = 2;
    CharSets sets = build_char_sets(g);
    auto key_of = [](const ThetaChar& c) {
        std::string k;
        for (const auto& q : c.r)
            k += q.get_str() + ",";
        for (const auto& q : c.s)
            k += q.get_str() + ",";
        return k;
    };
    for (int t = 0; t < 50; ++t) {
        QMat m = random_symplectic(g, rng);
        std::set<std::string> minus_in, minus_out, plus_out;
        for (const auto& c : sets.s_minus)
            minus_in.insert(key_of(c));
        for (const auto& c : sets.s_minus)
            minus_out.insert(key_of(char_permute(m, c)));
        for (const auto& c : sets.s_plus)
            plus_out.insert(key_of(char_permute(m, c)));
        col.require(minus_out == minus_in, "S_- preserved");
        col.require(plus_out.size() == sets.s_plus.size(), "S_+ bijection");
        QMat m2 = random_symplectic(g, rng);
        const ThetaChar& v = sets.s_minus[static_cast<size_t>(t) % sets.s_minus.size()];
        col.require(key_of(char_permute(m * m2, v)) ==
                        key_of(char_permute(m2, char_permute(m, v))),
                    "composition law");
        col.require(key_of(char_permute(QMat::identity(2 * g), v)) == key_of(v),
                    "identity fixes chars");
    }
    return col.finish();
}

// ---------------------------------------------------------------- theta ----

SuiteResult suite_theta_parity_vanishing(const VerifyOptions& opt) {
    Collector col("theta.parity-and-odd-vanishing");
    Rng rng(opt.seed ^ 0x31);
    const mpfr_prec_t p = opt.prec;
    for (int t = 0; t < 100; ++t) {
        int g = 1 + (t % 2);
        SiegelPoint z = random_siegel_point(g, p, rng);
        ThetaChar v = random_char(g, 5 + (t % 7), rng);
        TruncationPlan plan = plan_truncation(z, v, p);
        BigReal bound = plan.tail_bound.mul_2si(1);
        BigComplex a = theta_eval(v, z, p);
        BigComplex b = theta_eval(-v, z, p);
        col.check((a - b).abs(), bound, "parity");
        CharSets sets = build_char_sets(g);
        const ThetaChar& odd =
            sets.s_minus[static_cast<size_t>(t) % sets.s_minus.size()];
        TruncationPlan oplan = plan_truncation(z, odd, p);
        col.check(theta_eval(odd, z, p).abs(), oplan.tail_bound.mul_2si(1), "odd vanishing");
    }
    return col.finish();
}

SuiteResult suite_theta_level_shift(const VerifyOptions& opt) {
    Collector col("theta.level-shift-invariance");
    Rng rng(opt.seed ^ 0x32);
    const mpfr_prec_t p = opt.prec;
    std::uniform_int_distribution<long> shift_d(-3, 3);
    BigReal bound = BigReal::pow2(-64, 64);
    for (int t = 0; t < 10; ++t) {
        int g = 1 + (t % 2);
        long den = 3 + (t % 4);
        SiegelPoint z = random_siegel_point(g, p, rng);
        ThetaChar v = random_char(g, den, rng);
        ThetaChar w = v;
        for (auto& q : w.r)
            q += shift_d(rng);
        for (auto& q : w.s)
            q += shift_d(rng);
        try {
            BigComplex tv = big_theta(v, z, p);
            BigComplex tw = big_theta(w, z, p);
            if (tv.is_zero()) {
                col.require(tw.is_zero(), "shift of identically-zero value");
                continue;
            }
            col.check((tv - tw).abs() / tv.abs(), bound, "level shift");
        } catch (const Error& e) {
            // a pole affects both sides the same way; skip such samples
            col.require(std::string(e.what()) == "pole of Theta", e.what());
        }
    }
    return col.finish();
}

SuiteResult suite_theta_sp_invariance(const VerifyOptions& opt) {
    Collector col("theta.sp-invariance");
    Rng rng(opt.seed ^ 0x33);
    const mpfr_prec_t p = opt.prec;
    BigReal bound = BigReal::pow2(-static_cast<long>(p) / 4, 64);
    for (int t = 0; t < 10; ++t) {
        int g = 2;
        long den = 3 + (t % 4);
        SiegelPoint z = random_siegel_point(g, p, rng);
        ThetaChar v = random_char(g, den, rng);
        QMat gamma = random_symplectic(g, rng);
        try {
            BigComplex lhs = big_theta(v, act_on_h(gamma, z), p);
            BigComplex rhs = big_theta(transform_char(gamma, v), z, p);
            if (rhs.is_zero()) {
                col.require(lhs.is_zero(), "invariance at a zero");
                continue;
            }
            col.check((lhs - rhs).abs() / rhs.abs(), bound, "Sp invariance");
        } catch (const Error& e) {
            col.require(std::string(e.what()) == "pole of Theta", e.what());
        }
    }
    return col.finish();
}

SuiteResult suite_theta_genus1(const VerifyOptions& opt) {
    Collector col("theta.genus1-siegel-function");
    Rng rng(opt.seed ^ 0x34);
    const mpfr_prec_t p = opt.prec;
    BigReal bound = BigReal::pow2(-std::min<long>(64, static_cast<long>(p) / 4), 64);
    std::uniform_int_distribution<long> den_d(2, 7);
    for (int t = 0; t < 25; ++t) {
        long den = den_d(rng);
        ThetaChar v = random_char(1, den, rng);
        if (v.r[0].get_den() == 1 && v.s[0].get_den() == 1) {
            v.r[0] += Rational(1, den);
            if (v.r[0].get_den() == 1)
                v.r[0] += Rational(1, den); // den = 2 and entry was half-integral
        }
        long n = v.effective_level();
        SiegelPoint z = random_siegel_point(1, p, rng);
        BigComplex tau = z.at(0, 0);
        BigComplex lhs = big_theta(v, z, p);
        BigComplex rhs = siegel_function(v.r[0], v.s[0], tau, p)
                             .pow_int(static_cast<unsigned long>(12 * n));
        col.check((lhs - rhs).abs() / rhs.abs(), bound, "genus-1 identity");
    }
    return col.finish();
}

SuiteResult suite_theta_precision_scaling(const VerifyOptions& opt) {
    Collector col("theta.precision-scaling");
    Rng rng(opt.seed ^ 0x35);
    const mpfr_prec_t p = opt.prec;
    BigReal bound = BigReal::pow2(-static_cast<long>(p) + 8, 64);
    for (int t = 0; t < 5; ++t) {
        int g = 1 + (t % 2);
        SiegelPoint z = random_siegel_point(g, 2 * p, rng);
        ThetaChar v = random_char(g, 4 + t, rng);
        BigComplex low = theta_eval(v, z.round_to(p), p);
        BigComplex high = theta_eval(v, z, 2 * p);
        BigReal denom = high.abs();
        if (denom < BigReal::pow2(-static_cast<long>(p) / 2, 64))
            continue; // numerically zero theta, covered by the vanishing suite
        col.check((low - high).abs() / denom, bound, "theta precision scaling");
        BigComplex e_low = e_of(BigReal::from_rational(Rational(t + 1, 7), p));
        BigComplex e_high = e_of(BigReal::from_rational(Rational(t + 1, 7), 2 * p));
        col.check((e_low - e_high).abs(), bound, "e_of precision scaling");
    }
    return col.finish();
}

// ------------------------------------------------------------------ cm ----

SuiteResult suite_cmdata(const VerifyOptions& opt) {
    Collector col("cmdata.polarization");
    Rng rng(opt.seed ^ 0x41);
    CmContext ctx = CmContext::make(opt.ell);

    col.require(ctx.xi.conj() == -ctx.xi, "xi purely imaginary");
    for (long e : ctx.type_exponents) {
        BigComplex v = ctx.xi.embed(e, 256);
        col.require(v.im().sign() > 0, "xi positivity");
        col.check(abs(v.re()), BigReal::pow2(-240, 64), "xi real part");
    }

    for (int t = 0; t < 100; ++t) {
        CycloElem a = random_cyclo(ctx.ell, rng, 3), b = random_cyclo(ctx.ell, rng, 3);
        col.require(type_norm(ctx, a * b) == type_norm(ctx, a) * type_norm(ctx, b),
                    "type norm multiplicative");
    }

    RiemannFormSpec form(ctx.xi, 1);
    for (int t = 0; t < 30; ++t) {
        CycloElem a = random_cyclo(ctx.ell, rng, 3), b = random_cyclo(ctx.ell, rng, 3);
        col.require(riemann_pairing(form, a, b) == -riemann_pairing(form, b, a),
                    "pairing antisymmetric");
        col.require(riemann_pairing(form, a, a) == 0, "pairing alternating");
    }

    // the seed basis is symplectic for E_xi
    col.require(gram_is_standard_j(gram_matrix(form, ctx.seed_basis())), "seed basis Gram = J");

    // inverse-different check: Tr(xi x_i conj(x_j)) integral with unimodular Gram
    if (opt.ell == 5) {
        std::vector<CycloElem> xs = ctx.seed_basis();
        QMat tr(4, 4);
        bool integral = true;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Rational v = (ctx.xi * xs[static_cast<size_t>(i)] *
                              xs[static_cast<size_t>(j)].conj())
                                 .trace_to_q();
                tr.at(i, j) = v;
                integral = integral && v.get_den() == 1;
            }
        col.require(integral, "trace pairing integral");
        Rational dt = tr.det();
        col.require(dt == 1 || dt == -1, "trace pairing unimodular");
    }

    // m_c on the reference ideal
    if (opt.ell == 5) {
        CycloElem lam = CycloElem::from_rational(5, 2) + CycloElem::zeta_pow(5, 1);
        col.require(compute_mc(ctx, 5, CycloIdeal(lam)) == Rational(11, 25), "m_c = 11/25");
        col.require(compute_mc(ctx, 5, CycloIdeal(CycloElem::from_rational(5, 1))) ==
                        Rational(1, 25),
                    "m_c unit ideal");
    }
    return col.finish();
}

// ------------------------------------------------------------- rayclass ----

SuiteResult suite_rayclass_group(const VerifyOptions& opt) {
    Collector col("rayclass.group-structure");
    RayClassTable table = enumerate_ray_classes(opt.ell, opt.n);
    col.require(table.order * table.unit_image_count == table.residue_unit_count,
                "order = |(O/N)^x| / |units|");
    if (opt.ell == 5 && opt.n == 5) {
        col.require(table.order == 5 && table.cyclic, "Cl(5 O_K) cyclic of order 5");
        CycloElem lam = CycloElem::from_rational(5, 2) + CycloElem::zeta_pow(5, 1);
        col.require(table.label_of(lam) == 1, "generator class contains 2+zeta");
        col.require(table.by_label(1).r_vec == std::vector<long>({1, 2, 0, 3}),
                    "C_1 r-vector");
    }
    if (opt.ell == 5 && opt.n == 6)
        col.require(table.order == 10 && table.cyclic, "Cl(6 O_K) cyclic of order 10");

    if (table.cyclic) {
        // exhaustive group-law consistency on labels
        bool ok = true;
        for (const auto& a : table.classes)
            for (const auto& b : table.classes) {
                CycloElem prod = a.representative * b.representative;
                ok = ok && table.label_of(prod) == label_of_product(table, a.label, b.label);
            }
        col.require(ok, "label arithmetic matches residue products");
    }

    // polarization Gram is exactly J for every class representative
    CmContext ctx = CmContext::make(opt.ell);
    for (const auto& cls : table.classes) {
        RiemannFormSpec form(ctx.xi,
                             compute_mc(ctx, table.n_level, CycloIdeal(cls.representative)));
        CycloElem tn_inv = type_norm(ctx, cls.representative).inverse();
        std::vector<CycloElem> ys;
        for (const auto& x : ctx.seed_basis())
            ys.push_back(Rational(table.n_level) * (tn_inv * x));
        col.require(gram_is_standard_j(gram_matrix(form, ys)), "scaled basis Gram = J");
    }
    return col.finish();
}

SuiteResult suite_rayclass_invariants(const VerifyOptions& opt) {
    Collector col("rayclass.invariants");
    CmContext ctx = CmContext::make(opt.ell);
    RayClassTable table = enumerate_ray_classes(opt.ell, opt.n);
    compute_invariants(ctx, table, opt.prec);

    const long n = table.order;
    long digits = std::max<long>(5, static_cast<long>(opt.prec) / 8);
    if (table.cyclic && n > 1) {
        for (const auto& cls : table.classes) {
            long conj_label = (n - cls.label) % n == 0 ? n : (n - cls.label) % n;
            const BigComplex& a = table.invariants[static_cast<size_t>(cls.label - 1)];
            const BigComplex& b = table.invariants[static_cast<size_t>(conj_label - 1)];
            col.require(agree_relative(a, b.conj(), digits), "conjugate-pair symmetry");
            if (cls.label == conj_label) {
                BigReal rel = a.im().is_zero() ? BigReal(0, 64) : (a.im() / a.abs());
                col.check(abs(rel), BigReal::pow2(-64, 64), "self-conjugate class real");
            }
        }
    }
    for (size_t i = 0; i < table.invariants.size(); ++i)
        for (size_t j = i + 1; j < table.invariants.size(); ++j)
            col.require(!agree_relative(table.invariants[i], table.invariants[j], 5),
                        "pairwise distinct");

    // independence spot checks on the generator class
    if (table.cyclic && n > 1) {
        Rng rng(opt.seed ^ 0x51);
        const RayClass& cls = table.by_label(1);
        // alternative representative: multiply by an element that is 1 mod f
        CycloElem one = CycloElem::from_rational(opt.ell, 1);
        CycloElem mu = one + Rational(opt.n) * random_cyclo(opt.ell, rng, 1);
        if (mu.is_zero())
            mu = one;
        CycloElem alt = cls.representative * mu;
        col.require(independence_check(ctx, table, cls, alt, opt.prec),
                    "representative independence");
        QMat u = random_unimodular(2 * ctx.g, rng);
        col.require(independence_check_basis(ctx, table, cls, u, false, opt.prec),
                    "basis independence");
        col.require(independence_check_basis(ctx, table, cls, QMat::identity(2 * ctx.g), true,
                                             opt.prec),
                    "reversed tie-break independence");
    }

    // Stickelberger sums
    if (table.cyclic && n > 1) {
        for (long j = 1; j < n; ++j) {
            Character chi{n, j};
            BigComplex s = stickelberger_sum(table, chi);
            col.require(s.abs() > BigReal(1, 64), "Stickelberger nonvanishing");
            Character chibar{n, n - j};
            BigComplex sbar = stickelberger_sum(table, chibar);
            col.check((sbar - s.conj()).abs() / s.abs(), BigReal::pow2(-64, 64),
                      "conjugate character symmetry");
        }
    }
    return col.finish();
}

} // namespace

std::vector<SuiteResult> run_suites(const std::string& which, const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    auto want = [&](const std::string& s) { return which == "all" || which == s; };
    if (want("cyclo")) {
        out.push_back(suite_cyclo_ring(opt));
        out.push_back(suite_cyclo_embed(opt));
        out.push_back(suite_cyclo_parse(opt));
        out.push_back(suite_cyclo_solve(opt));
    }
    if (want("symplectic")) {
        out.push_back(suite_symplectic_basics(opt));
        out.push_back(suite_symplectic_reduce(opt));
        out.push_back(suite_symplectic_chars(opt));
    }
    if (want("theta")) {
        out.push_back(suite_theta_parity_vanishing(opt));
        out.push_back(suite_theta_level_shift(opt));
        out.push_back(suite_theta_sp_invariance(opt));
        out.push_back(suite_theta_genus1(opt));
        out.push_back(suite_theta_precision_scaling(opt));
    }
    if (want("cmdata")) {
        out.push_back(suite_cmdata(opt));
    }
    if (want("rayclass")) {
        out.push_back(suite_rayclass_group(opt));
        out.push_back(suite_rayclass_invariants(opt));
    }
    if (out.empty())
        throw Error("unknown suite: " + which);
    return out;
}

void print_suite_report(std::ostream& out, const std::vector<SuiteResult>& results,
                        bool histograms) {
    for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail << "\n";
        if (histograms && !r.residuals_log2.empty()) {
            // histogram over log2(residual/bound), bucket width 16
            std::map<long, int> buckets;
            for (double v : r.residuals_log2) {
                long b = static_cast<long>(std::floor(v / 16.0)) * 16;
                ++buckets[b];
            }
            out << "      residual histogram (log2 bins): ";
            for (const auto& [b, c] : buckets)
                out << "[" << b << ".." << b + 16 << "):" << c << "  ";
            out << "\n";
        }
    }
}

} // namespace siegel
