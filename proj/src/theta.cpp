#include "siegel/theta.hpp"

#include <algorithm>
#include <cmath>

#include "siegel/error.hpp"

namespace siegel {

namespace {

Rational mod_1(const Rational& q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return q - Rational(fl);
}

long ceil_log2(long v) {
    long b = 0;
    while ((1L << b) < v)
        ++b;
    return b;
}

} // namespace

long ThetaChar::denominator() const {
    Integer l = 1;
    for (const auto& q : r)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    for (const auto& q : s)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    return l.get_si();
}

ThetaChar ThetaChar::reduced_mod_1() const {
    ThetaChar out = *this;
    for (auto& q : out.r)
        q = mod_1(q);
    for (auto& q : out.s)
        q = mod_1(q);
    return out;
}

bool ThetaChar::is_half_integer() const {
    for (const auto& q : r)
        if (q.get_den() > 2)
            return false;
    for (const auto& q : s)
        if (q.get_den() > 2)
            return false;
    return true;
}

Rational ThetaChar::dot_rs() const {
    Rational d = 0;
    for (size_t i = 0; i < r.size(); ++i)
        d += r[i] * s[i];
    return d;
}

ThetaChar ThetaChar::from_vector(const std::vector<Rational>& v, long level) {
    if (v.size() % 2 != 0 || v.empty())
        throw Error("characteristic vector must have even length");
    const size_t g = v.size() / 2;
    ThetaChar c;
    c.r.assign(v.begin(), v.begin() + static_cast<long>(g));
    c.s.assign(v.begin() + static_cast<long>(g), v.end());
    c.level = level;
    return c;
}

ThetaChar operator-(const ThetaChar& a) {
    ThetaChar out = a;
    for (auto& q : out.r)
        q = -q;
    for (auto& q : out.s)
        q = -q;
    return out;
}

ThetaChar operator+(const ThetaChar& a, const ThetaChar& b) {
    if (a.g() != b.g())
        throw Error("characteristic genus mismatch");
    ThetaChar out = a;
    for (int i = 0; i < a.g(); ++i) {
        out.r[static_cast<size_t>(i)] += b.r[static_cast<size_t>(i)];
        out.s[static_cast<size_t>(i)] += b.s[static_cast<size_t>(i)];
    }
    return out;
}

ThetaChar operator-(const ThetaChar& a, const ThetaChar& b) {
    return a + (-b);
}

Parity classify_char(const ThetaChar& v) {
    if (!v.is_half_integer())
        throw Error("characteristic is not half-integer");
    Rational four_rs = 4 * v.dot_rs();
    if (four_rs.get_den() != 1)
        throw Error("characteristic is not half-integer");
    Integer n = four_rs.get_num();
    return mpz_odd_p(n.get_mpz_t()) ? Parity::odd : Parity::even;
}

CharSets build_char_sets(int g) {
    if (g < 1)
        throw Error("genus must be positive");
    CharSets sets;
    sets.g = g;
    const long total = 1L << (2 * g);
    for (long mask = 0; mask < total; ++mask) {
        ThetaChar c;
        c.r.resize(static_cast<size_t>(g));
        c.s.resize(static_cast<size_t>(g));
        for (int i = 0; i < g; ++i) {
            c.r[static_cast<size_t>(i)] = (mask >> i) & 1 ? Rational(1, 2) : Rational(0);
            c.s[static_cast<size_t>(i)] = (mask >> (g + i)) & 1 ? Rational(1, 2) : Rational(0);
        }
        (classify_char(c) == Parity::odd ? sets.s_minus : sets.s_plus).push_back(std::move(c));
    }
    return sets;
}

namespace {

// lower bound for the smallest eigenvalue of the symmetric matrix Im Z
BigReal lambda_min_bound(const SiegelPoint& z) {
    const int g = z.g();
    const mpfr_prec_t p = 96;
    std::vector<BigReal> y;
    y.reserve(static_cast<size_t>(g) * g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            y.push_back(z.at(i, j).im().round_to(p));
    auto Y = [&](int i, int j) -> BigReal& { return y[static_cast<size_t>(i) * g + j]; };

    BigReal one_minus = BigReal(1, p) - BigReal::pow2(-40, p);
    if (g == 1)
        return Y(0, 0) * one_minus;
    if (g == 2) {
        BigReal half = BigReal::pow2(-1, p);
        BigReal tr2 = (Y(0, 0) + Y(1, 1)) * half;
        BigReal dif2 = (Y(0, 0) - Y(1, 1)) * half;
        BigReal disc = sqrt(dif2 * dif2 + Y(0, 1) * Y(1, 0));
        return (tr2 - disc) * one_minus;
    }
    // Gershgorin first
    BigReal best(p);
    bool have = false;
    for (int i = 0; i < g; ++i) {
        BigReal row = Y(i, i);
        for (int j = 0; j < g; ++j)
            if (j != i)
                row = row - abs(Y(i, j));
        if (!have || row < best) {
            best = row;
            have = true;
        }
    }
    if (best.sign() > 0)
        return best * one_minus;
    // Jacobi sweep fallback at low precision
    BigReal tol = BigReal::pow2(-48, p);
    for (int sweep = 0; sweep < 48; ++sweep) {
        BigReal off(p);
        for (int i = 0; i < g; ++i)
            for (int j = i + 1; j < g; ++j)
                off = off + abs(Y(i, j));
        if (off < tol)
            break;
        for (int i = 0; i < g; ++i)
            for (int j = i + 1; j < g; ++j) {
                if (abs(Y(i, j)) < tol)
                    continue;
                BigReal theta_ang = atan2(Y(i, j).mul_2si(1), Y(i, i) - Y(j, j)).mul_2si(-1);
                BigReal c = cos(theta_ang), s = sin(theta_ang);
                for (int k = 0; k < g; ++k) {
                    BigReal a = Y(i, k), b = Y(j, k);
                    Y(i, k) = c * a + s * b;
                    Y(j, k) = c * b - s * a;
                }
                for (int k = 0; k < g; ++k) {
                    BigReal a = Y(k, i), b = Y(k, j);
                    Y(k, i) = c * a + s * b;
                    Y(k, j) = c * b - s * a;
                }
            }
    }
    BigReal lmin = Y(0, 0);
    for (int i = 1; i < g; ++i)
        if (Y(i, i) < lmin)
            lmin = Y(i, i);
    BigReal fudge = BigReal(1, p) - BigReal::pow2(-20, p);
    return lmin * fudge;
}

} // namespace

TruncationPlan plan_truncation(const SiegelPoint& z, const ThetaChar& v, mpfr_prec_t target_prec) {
    const int g = z.g();
    if (v.g() != g)
        throw Error("characteristic genus mismatch");
    const mpfr_prec_t p = 96;

    BigReal lam = lambda_min_bound(z);
    if (!(lam.sign() > 0))
        throw Error("not in H_g");

    // Shift norm after reduction into [0,1)^g, symmetrized over v and -v so
    // the same plan certifies both evaluations (parity checks compare them).
    ThetaChar red = v.reduced_mod_1();
    Rational rho2 = 0;
    for (const auto& q : red.r) {
        Rational alt = q == 0 ? Rational(0) : 1 - q;
        Rational m = q > alt ? q : alt;
        rho2 += m * m;
    }
    BigReal rho = sqrt(BigReal::from_rational(rho2, p));

    BigReal pi = BigReal::pi(p);
    BigReal two(2, p);
    BigReal goal = BigReal::pow2(-static_cast<long>(target_prec) - 1, p);

    long b_floor = static_cast<long>(floor(rho).to_double()) + 2;
    // start the scan near the Gaussian estimate instead of from the bottom
    {
        double lam_d = lam.to_double();
        if (lam_d > 0) {
            double est = rho.to_double() +
                         std::sqrt((static_cast<double>(target_prec) + 8.0) * 0.6931 /
                                   (3.1415 * lam_d));
            long b_est = static_cast<long>(est) - 1;
            if (b_est > b_floor)
                b_floor = b_est;
        }
    }
    for (long b = b_floor; b <= b_floor + 4096; ++b) {
        // tail(b) = sum_{k>b} count(k) exp(-pi lam (k - rho)^2),
        // count(k) = (2k+1)^g - (2k-1)^g
        BigReal tail(p);
        bool certified = false;
        BigReal prev_term(p);
        for (long k = b + 1; k <= b + 4096; ++k) {
            BigReal kr = BigReal(k, p) - rho;
            BigReal cnt(p);
            {
                BigReal t1(2 * k + 1, p), t2(2 * k - 1, p);
                BigReal p1(1, p), p2(1, p);
                for (int t = 0; t < g; ++t) {
                    p1 = p1 * t1;
                    p2 = p2 * t2;
                }
                cnt = p1 - p2;
            }
            BigReal term = cnt * exp(-(pi * lam * kr * kr));
            tail = tail + term;
            if (k > b + 1 && !prev_term.is_zero()) {
                // once the ratio stays below 1/2 the rest is bounded by the
                // current term
                if (term.mul_2si(1) < prev_term && term < goal.mul_2si(-4)) {
                    tail = tail + term; // geometric remainder bound
                    certified = true;
                    break;
                }
            }
            prev_term = term;
        }
        if (certified && tail < goal) {
            TruncationPlan plan;
            plan.radius = b;
            plan.tail_bound = tail + BigReal::pow2(-static_cast<long>(target_prec) - 8, p);
            plan.lambda_min = lam;
            return plan;
        }
    }
    throw Error("not in H_g");
}

BigComplex theta_eval(const ThetaChar& v, const SiegelPoint& z, mpfr_prec_t prec) {
    const int g = z.g();
    if (v.g() != g)
        throw Error("characteristic genus mismatch");

    TruncationPlan plan = plan_truncation(z, v, prec);
    const long b = plan.radius;
    const long width = 2 * b + 1;
    const mpfr_prec_t wp = prec + 48 + 2 * ceil_log2(width + 1);

    // theta is invariant under integral shifts of r (the sum reindexes), so
    // summation always runs over the reduced r; s stays as given.
    ThetaChar red = v.reduced_mod_1();
    for (size_t i = 0; i < red.s.size(); ++i)
        red.s[i] = v.s[i];

    CMat Z(g, g, wp);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            Z.at(i, j) = z.at(i, j).round_to(wp);

    std::vector<BigReal> rshift, sval;
    for (int i = 0; i < g; ++i) {
        rshift.push_back(BigReal::from_rational(red.r[static_cast<size_t>(i)], wp));
        sval.push_back(BigReal::from_rational(red.s[static_cast<size_t>(i)], wp));
    }

    // step multiplier for the innermost coordinate: e(Z_{gg})
    const BigComplex step_mul = cplx_e(Z.at(g - 1, g - 1));
    const BigReal m_last0 = BigReal(-b, wp) + rshift[static_cast<size_t>(g - 1)];

    BigComplex total(wp);
    std::vector<long> idx(static_cast<size_t>(g > 1 ? g - 1 : 0), -b);
    bool done = false;
    while (!done) {
        // outer coordinates m' = n' + r'
        std::vector<BigReal> m;
        for (int i = 0; i + 1 < g; ++i)
            m.push_back(BigReal(idx[static_cast<size_t>(i)], wp) + rshift[static_cast<size_t>(i)]);

        // w(m_g) = alpha + beta m_g + (Z_gg/2) m_g^2 over the inner row
        BigComplex alpha(wp);
        for (int i = 0; i + 1 < g; ++i) {
            for (int j = 0; j + 1 < g; ++j)
                alpha = alpha + (m[static_cast<size_t>(i)] * m[static_cast<size_t>(j)]) *
                                    Z.at(i, j).mul_2si(-1);
            alpha = alpha + BigComplex(m[static_cast<size_t>(i)] * sval[static_cast<size_t>(i)],
                                       BigReal(wp));
        }
        BigComplex beta(wp);
        for (int j = 0; j + 1 < g; ++j)
            beta = beta + m[static_cast<size_t>(j)] * Z.at(g - 1, j);
        beta = beta + BigComplex(sval[static_cast<size_t>(g - 1)], BigReal(wp));

        BigComplex w0 = alpha + m_last0 * beta +
                        (m_last0 * m_last0) * Z.at(g - 1, g - 1).mul_2si(-1);
        BigComplex term = cplx_e(w0);
        // ratio between consecutive inner terms: e(beta + Z_gg (m + 1/2))
        BigComplex ratio = cplx_e(beta + (m_last0 + BigReal::pow2(-1, wp)) * Z.at(g - 1, g - 1));
        for (long k = 0; k < width; ++k) {
            total = total + term;
            term = term * ratio;
            ratio = ratio * step_mul;
        }

        if (g == 1)
            break;
        int pos = g - 2;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == b) {
            idx[static_cast<size_t>(pos)] = -b;
            --pos;
        }
        if (pos < 0)
            done = true;
        else
            ++idx[static_cast<size_t>(pos)];
    }
    // keep a few bits beyond the target so the final rounding stays well
    // below the certified tail bound
    return total.round_to(prec + 32);
}

BigComplex big_theta(const ThetaChar& v, const SiegelPoint& z, mpfr_prec_t prec) {
    const int g = z.g();
    if (v.g() != g)
        throw Error("characteristic genus mismatch");
    const long n = v.effective_level();
    if (n < 2)
        throw Error("level must be at least 2");

    const long exp_minus = 4 * n * ((1L << g) + 1);
    const long exp_plus = 4 * n * ((1L << g) - 1);
    CharSets sets = build_char_sets(g);
    const long power_count = static_cast<long>(sets.s_minus.size()) * exp_minus +
                             static_cast<long>(sets.s_plus.size()) * exp_plus;
    const mpfr_prec_t wp = prec + 64 + 4 * ceil_log2(power_count);

    // If a shifted numerator characteristic is itself an odd half-integer
    // one, its theta vanishes identically and so does the whole product.
    std::vector<ThetaChar> shifted;
    shifted.reserve(sets.s_minus.size());
    for (const auto& ab : sets.s_minus) {
        ThetaChar c = ab - v;
        if (c.is_half_integer() && classify_char(c.reduced_mod_1()) == Parity::odd)
            return BigComplex(prec);
        shifted.push_back(std::move(c));
    }

    SiegelPoint zw = z.round_to(wp);
    BigReal zero_tol = BigReal::pow2(-static_cast<long>(prec) / 2, 64);

    BigComplex num(1, 0, wp);
    for (const auto& c : shifted)
        num = num * theta_eval(c, zw, wp).pow_int(static_cast<unsigned long>(exp_minus));
    BigComplex den(1, 0, wp);
    for (const auto& cd : sets.s_plus) {
        BigComplex th = theta_eval(cd, zw, wp);
        if (th.abs() < zero_tol)
            throw Error("pole of Theta");
        den = den * th.pow_int(static_cast<unsigned long>(exp_plus));
    }

    Rational phase_arg = Rational(-(1L << g) * n * ((1L << g) - 1) * ((1L << g) + 1)) * v.dot_rs();
    BigComplex phase = e_of(phase_arg, wp);
    BigComplex result = (phase * num / den).mul_2si(4 * n);
    return result.round_to(prec);
}

BigComplex siegel_function(const Rational& r, const Rational& s, const BigComplex& tau,
                           mpfr_prec_t prec) {
    if (r.get_den() == 1 && s.get_den() == 1)
        throw Error("characteristic must not be integral");
    if (!(tau.im().sign() > 0))
        throw Error("tau is not in the upper half-plane");

    // how many product factors until |q|^{n-1-ceil|r|} < 2^{-prec-16}
    double log2_q = (-BigReal::pi(64).mul_2si(1) * tau.im() /
                     log(BigReal(2, 64)))
                        .to_double();
    double rabs = std::abs(BigReal::from_rational(r, 64).to_double());
    long n_max = static_cast<long>((static_cast<double>(prec) + 16.0) / (-log2_q)) + 3 +
                 static_cast<long>(rabs);

    const mpfr_prec_t wp = prec + 48 + 2 * ceil_log2(n_max + 2);
    BigComplex tw = tau.round_to(wp);
    BigReal rr = BigReal::from_rational(r, wp);

    auto q_pow = [&](const BigReal& x) { return cplx_e(x * tw); };
    BigComplex e_s = e_of(s, wp);
    BigComplex e_ms = e_of(Rational(-s), wp);

    // B_2(r)/2 exactly, then the leading factor -q^{B2/2} e(s(r-1)/2)
    Rational b2_half = (r * r - r + Rational(1, 6)) / 2;
    Rational lead_phase = s * (r - 1) / 2;
    BigComplex val = -(q_pow(BigReal::from_rational(b2_half, wp)) * e_of(lead_phase, wp));
    BigComplex one(1, 0, wp);
    val = val * (one - q_pow(rr) * e_s);
    for (long k = 1; k <= n_max; ++k) {
        BigReal kk(k, wp);
        val = val * (one - q_pow(kk + rr) * e_s) * (one - q_pow(kk - rr) * e_ms);
    }
    return val.round_to(prec);
}

ThetaChar char_permute(const QMat& gamma, const ThetaChar& v) {
    if (!is_symplectic(gamma))
        throw Error("matrix is not symplectic");
    if (!gamma.is_integral())
        throw Error("matrix is not integral");
    const int g = v.g();
    if (gamma.rows() != 2 * g)
        throw Error("matrix dimension mismatch");
    for (const auto& q : v.r)
        if (q != 0 && q != Rational(1, 2))
            throw Error("characteristic entries must lie in {0, 1/2}");
    for (const auto& q : v.s)
        if (q != 0 && q != Rational(1, 2))
            throw Error("characteristic entries must lie in {0, 1/2}");

    std::vector<Rational> vin;
    vin.insert(vin.end(), v.r.begin(), v.r.end());
    vin.insert(vin.end(), v.s.begin(), v.s.end());

    std::vector<Rational> out(static_cast<size_t>(2 * g));
    for (int i = 0; i < 2 * g; ++i) {
        Rational acc = 0;
        for (int k = 0; k < 2 * g; ++k)
            acc += gamma.at(k, i) * vin[static_cast<size_t>(k)]; // gamma^T v
        out[static_cast<size_t>(i)] = acc;
    }
    // + ((A^T C)_diag ; (B^T D)_diag)/2
    for (int i = 0; i < g; ++i) {
        Rational ac = 0, bd = 0;
        for (int k = 0; k < g; ++k) {
            ac += gamma.at(k, i) * gamma.at(g + k, i);
            bd += gamma.at(k, g + i) * gamma.at(g + k, g + i);
        }
        out[static_cast<size_t>(i)] += ac / 2;
        out[static_cast<size_t>(g + i)] += bd / 2;
    }
    for (auto& q : out)
        q = mod_1(q);
    ThetaChar result = ThetaChar::from_vector(out, v.level);
    return result;
}

} // namespace siegel
