#include "siegel/sampling.hpp"

namespace siegel {

QMat random_symplectic(int g, Rng& rng, int max_len) {
    std::uniform_int_distribution<int> len_d(1, max_len);
    std::uniform_int_distribution<int> kind_d(0, 2);
    std::uniform_int_distribution<int> entry_d(-2, 2);

    QMat acc = QMat::identity(2 * g);
    const int len = len_d(rng);
    for (int w = 0; w < len; ++w) {
        int kind = kind_d(rng);
        QMat m(2 * g, 2 * g);
        if (kind == 0) {
            m = QMat::symplectic_j(g);
        } else {
            // [[I, B], [0, I]] or its transpose [[I, 0], [B, I]], B symmetric
            m = QMat::identity(2 * g);
            QMat b(g, g);
            for (int i = 0; i < g; ++i)
                for (int j = i; j < g; ++j) {
                    b.at(i, j) = entry_d(rng);
                    b.at(j, i) = b.at(i, j);
                }
            for (int i = 0; i < g; ++i)
                for (int j = 0; j < g; ++j) {
                    if (kind == 1)
                        m.at(i, g + j) = b.at(i, j);
                    else
                        m.at(g + i, j) = b.at(i, j);
                }
        }
        acc = acc * m;
    }
    return acc;
}

QMat random_unimodular(int n, Rng& rng, int ops) {
    std::uniform_int_distribution<int> row_d(0, n - 1);
    std::uniform_int_distribution<int> coef_d(-2, 2);
    std::uniform_int_distribution<int> kind_d(0, 3);
    QMat m = QMat::identity(n);
    for (int t = 0; t < ops; ++t) {
        int i = row_d(rng), j = row_d(rng);
        int kind = kind_d(rng);
        if (kind == 0 && i != j) {
            for (int k = 0; k < n; ++k)
                std::swap(m.at(i, k), m.at(j, k));
        } else if (kind == 1) {
            for (int k = 0; k < n; ++k)
                m.at(i, k) = -m.at(i, k);
        } else if (i != j) {
            Rational c = coef_d(rng);
            for (int k = 0; k < n; ++k)
                m.at(i, k) += c * m.at(j, k);
        }
    }
    return m;
}

SiegelPoint random_siegel_point(int g, mpfr_prec_t prec, Rng& rng) {
    std::uniform_int_distribution<long> num_d(-8, 8);
    auto frac = [&](long den, bool nonzero) {
        long v = num_d(rng);
        while (nonzero && v == 0)
            v = num_d(rng);
        Rational q(v, den);
        q.canonicalize();
        return q;
    };
    // keep strictly off the product locus (diagonal Z), where even theta
    // constants vanish and the theta quotient has poles
    QMat x(g, g), l(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j <= i; ++j) {
            x.at(i, j) = frac(9, i != j);
            x.at(j, i) = x.at(i, j);
            l.at(i, j) = frac(9, i != j);
        }
    QMat y = l * l.transpose();
    for (int i = 0; i < g; ++i)
        y.at(i, i) += 1;

    CMat z(g, g, prec);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            z.at(i, j) = BigComplex::from_rationals(x.at(i, j), y.at(i, j), prec);
    return SiegelPoint::from_matrix(z);
}

ThetaChar random_char(int g, long den, Rng& rng) {
    std::uniform_int_distribution<long> num_d(-den, den);
    auto frac = [&]() {
        Rational q(num_d(rng), den);
        q.canonicalize();
        return q;
    };
    ThetaChar c;
    c.r.resize(static_cast<size_t>(g));
    c.s.resize(static_cast<size_t>(g));
    for (int i = 0; i < g; ++i) {
        c.r[static_cast<size_t>(i)] = frac();
        c.s[static_cast<size_t>(i)] = frac();
    }
    c.level = den;
    return c;
}

} // namespace siegel
