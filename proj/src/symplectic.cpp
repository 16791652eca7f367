#include "siegel/symplectic.hpp"

#include <algorithm>
#include <cstdlib>

#include "siegel/error.hpp"

namespace siegel {

SiegelPoint SiegelPoint::from_matrix(const CMat& z) {
    if (z.rows() != z.cols() || z.rows() < 1)
        throw Error("not in H_g");
    const int g = z.rows();
    const mpfr_prec_t p = z.at(0, 0).prec();

    BigReal sym_tol = BigReal::pow2(-static_cast<long>(p) + 16, 64);
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            if ((z.at(i, j) - z.at(j, i)).abs() > sym_tol)
                throw Error("not in H_g");

    // positive definiteness of Im Z via leading principal minors
    std::vector<BigReal> y;
    y.reserve(static_cast<size_t>(g) * g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            y.push_back(z.at(i, j).im());
    BigReal minor_tol = BigReal::pow2(-static_cast<long>(p) / 2, 64);
    BigReal minor(1, p);
    for (int c = 0; c < g; ++c) {
        BigReal pivot = y[static_cast<size_t>(c) * g + c];
        minor = minor * pivot;
        if (!(minor > minor_tol))
            throw Error("not in H_g");
        for (int r = c + 1; r < g; ++r) {
            BigReal f = y[static_cast<size_t>(r) * g + c] / pivot;
            for (int j = c; j < g; ++j)
                y[static_cast<size_t>(r) * g + j] =
                    y[static_cast<size_t>(r) * g + j] - f * y[static_cast<size_t>(c) * g + j];
        }
    }

    // store the symmetrized matrix so later precision changes keep the
    // symmetry residual at zero
    CMat sym(g, g, p);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            sym.at(i, j) = (z.at(i, j) + z.at(j, i)).mul_2si(-1);
    return SiegelPoint(sym);
}

std::vector<BigReal> SiegelPoint::imag_part() const {
    std::vector<BigReal> y;
    y.reserve(static_cast<size_t>(g()) * g());
    for (int i = 0; i < g(); ++i)
        for (int j = 0; j < g(); ++j)
            y.push_back(z_.at(i, j).im());
    return y;
}

SiegelPoint SiegelPoint::round_to(mpfr_prec_t prec) const {
    CMat m(g(), g(), prec);
    for (int i = 0; i < g(); ++i)
        for (int j = 0; j < g(); ++j)
            m.at(i, j) = z_.at(i, j).round_to(prec);
    return from_matrix(m);
}

bool is_symplectic(const QMat& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        return false;
    const int g = m.rows() / 2;
    return m.transpose() * QMat::symplectic_j(g) * m == QMat::symplectic_j(g);
}

SiegelPoint act_on_h(const QMat& gamma, const SiegelPoint& z) {
    if (!is_symplectic(gamma))
        throw Error("matrix is not symplectic");
    const int g = z.g();
    if (gamma.rows() != 2 * g)
        throw Error("matrix dimension mismatch");
    const mpfr_prec_t p = z.prec();

    auto block = [&](int r0, int c0) {
        CMat m(g, g, p);
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j)
                m.at(i, j) = BigComplex::from_rationals(gamma.at(r0 + i, c0 + j), 0, p);
        return m;
    };
    CMat a = block(0, 0), b = block(0, g), c = block(g, 0), d = block(g, g);

    CMat num = a * z.mat() + b;
    CMat den = c * z.mat() + d;
    CSolveResult sol = cmat_solve(den.transpose(), num.transpose());
    if (sol.cond_log2 > static_cast<double>(p) / 2)
        throw Error("unstable action");
    return SiegelPoint::from_matrix(sol.x.transpose());
}

namespace {

// integer congruence workspace: G <- ops * G * ops^T, T accumulates ops
struct Workspace {
    int n;
    std::vector<Integer> g, t;

    Integer& G(int i, int j) { return g[static_cast<size_t>(i) * n + j]; }
    Integer& T(int i, int j) { return t[static_cast<size_t>(i) * n + j]; }

    void swap_pair(int i, int j) {
        if (i == j)
            return;
        for (int k = 0; k < n; ++k) {
            std::swap(G(i, k), G(j, k));
            std::swap(T(i, k), T(j, k));
        }
        for (int k = 0; k < n; ++k)
            std::swap(G(k, i), G(k, j));
    }
    void negate_pair(int i) {
        for (int k = 0; k < n; ++k) {
            G(i, k) = -G(i, k);
            T(i, k) = -T(i, k);
        }
        for (int k = 0; k < n; ++k)
            G(k, i) = -G(k, i);
    }
    // row_i += c*row_j and col_i += c*col_j
    void addmul_pair(int i, int j, const Integer& c) {
        if (c == 0)
            return;
        for (int k = 0; k < n; ++k) {
            G(i, k) += c * G(j, k);
            T(i, k) += c * T(j, k);
        }
        for (int k = 0; k < n; ++k)
            G(k, i) += c * G(k, j);
    }
};

// quotient with remainder in [0, |d|)
Integer div_floor_abs(const Integer& a, const Integer& d, Integer& rem) {
    Integer q;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    if (rem < 0) {
        rem -= d; // d < 0 here, so this adds |d|
        q += 1;
    }
    return q;
}

} // namespace

SymplecticReduction symplectic_reduce(const QMat& gram, bool reversed_ties) {
    const int n = gram.rows();
    if (n != gram.cols() || n < 2 || n % 2 != 0)
        throw Error("degenerate alternating form");
    if (!gram.is_antisymmetric())
        throw Error("form is not antisymmetric");
    const int g = n / 2;

    // already in normal form: report the identity transform
    {
        bool canonical = true;
        for (int i = 0; i < n && canonical; ++i)
            for (int j = 0; j < n && canonical; ++j) {
                if (i < g && j == g + i)
                    canonical = gram.at(i, j) < 0;
                else if (i >= g && j == i - g)
                    canonical = gram.at(i, j) > 0;
                else
                    canonical = gram.at(i, j) == 0;
            }
        if (canonical) {
            for (int i = 0; i + 1 < g; ++i) {
                Rational ratio = gram.at(g + i + 1, i + 1) / gram.at(g + i, i);
                if (ratio.get_den() != 1)
                    canonical = false;
            }
        }
        if (canonical) {
            SymplecticReduction red{QMat::identity(n), {}};
            for (int i = 0; i < g; ++i)
                red.divisors.push_back(gram.at(g + i, i));
            return red;
        }
    }

    // scale to an integer form
    Integer lcm = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), gram.at(i, j).get_den().get_mpz_t());

    Workspace w;
    w.n = n;
    w.g.assign(static_cast<size_t>(n) * n, Integer(0));
    w.t.assign(static_cast<size_t>(n) * n, Integer(0));
    for (int i = 0; i < n; ++i) {
        w.T(i, i) = 1;
        for (int j = 0; j < n; ++j) {
            Rational scaled = gram.at(i, j) * Rational(lcm);
            w.G(i, j) = scaled.get_num();
        }
    }

    std::vector<Integer> divisors_z;
    for (int p = 0; p < g; ++p) {
        const int r0 = 2 * p, r1 = 2 * p + 1;

        // pivot: smallest |entry| in the remaining block
        auto find_pivot = [&](int& pi, int& pj) -> bool {
            bool found = false;
            Integer best;
            for (int i = r0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if (w.G(i, j) == 0)
                        continue;
                    Integer a = abs(w.G(i, j));
                    bool better = !found || a < best;
                    if (!better && a == best && reversed_ties)
                        better = (i > pi) || (i == pi && j > pj);
                    if (better) {
                        best = a;
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            return found;
        };

        int pi = 0, pj = 0;
        if (!find_pivot(pi, pj))
            throw Error("degenerate alternating form");
        w.swap_pair(pi, r0);
        if (pj == r0)
            pj = pi;
        w.swap_pair(pj, r1);

        // Euclid until the pivot divides rows r0 and r1 of the block, then
        // clear them
        bool stable = false;
        while (!stable) {
            stable = true;
            Integer d = w.G(r0, r1);
            if (d == 0)
                throw Error("degenerate alternating form");
            for (int j = r0; j < n && stable; ++j) {
                if (j == r0 || j == r1)
                    continue;
                // entry (r0, j) reduced against pivot d via column r1
                Integer rem;
                Integer q = div_floor_abs(w.G(r0, j), d, rem);
                if (q != 0)
                    w.addmul_pair(j, r1, -q);
                if (rem != 0) {
                    w.swap_pair(j, r1);
                    stable = false;
                    break;
                }
                // entry (r1, j) reduced against -d via column r0
                Integer d2 = w.G(r1, r0);
                Integer q2 = div_floor_abs(w.G(r1, j), d2, rem);
                if (q2 != 0)
                    w.addmul_pair(j, r0, -q2);
                if (rem != 0) {
                    // remainder sits at (r1, j); make it the next pivot
                    w.swap_pair(j, r0);
                    stable = false;
                    break;
                }
            }
            if (!stable)
                continue;
            // propagate divisibility into the remaining block
            Integer dd = abs(w.G(r0, r1));
            for (int i = r0 + 2; i < n && stable; ++i)
                for (int j = i + 1; j < n && stable; ++j) {
                    if (w.G(i, j) % dd != 0) {
                        w.addmul_pair(r0, i, Integer(1));
                        stable = false;
                    }
                }
        }

        if (w.G(r0, r1) > 0)
            w.negate_pair(r0);
        divisors_z.push_back(abs(w.G(r0, r1)));
    }

    // reorder rows 0,2,4,... then 1,3,5,...
    std::vector<int> perm;
    for (int i = 0; i < g; ++i)
        perm.push_back(2 * i);
    for (int i = 0; i < g; ++i)
        perm.push_back(2 * i + 1);

    SymplecticReduction red{QMat(n, n), {}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            red.t.at(i, j) = Rational(w.T(perm[static_cast<size_t>(i)], j));
    for (int i = 0; i < g; ++i)
        red.divisors.push_back(Rational(divisors_z[static_cast<size_t>(i)], lcm));

    // round-trip check is exact arithmetic, keep it on
    QMat check = red.t * gram * red.t.transpose();
    QMat expect(n, n);
    for (int i = 0; i < g; ++i) {
        expect.at(i, g + i) = -red.divisors[static_cast<size_t>(i)];
        expect.at(g + i, i) = red.divisors[static_cast<size_t>(i)];
    }
    if (!(check == expect))
        throw Error("symplectic reduction failed round-trip");
    for (size_t i = 0; i + 1 < red.divisors.size(); ++i) {
        Rational ratio = red.divisors[i + 1] / red.divisors[i];
        if (ratio.get_den() != 1)
            throw Error("symplectic reduction failed divisibility");
    }
    return red;
}

} // namespace siegel
