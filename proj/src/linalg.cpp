#include "siegel/linalg.hpp"

#include <climits>

#include "siegel/error.hpp"

namespace siegel {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

QMat QMat::symplectic_j(int g) {
    QMat m(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        m.at(i, g + i) = -1;
        m.at(g + i, i) = 1;
    }
    return m;
}

QMat QMat::transpose() const {
    QMat m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            m.at(j, i) = at(i, j);
    return m;
}

bool QMat::is_integral() const {
    for (const auto& x : a_)
        if (x.get_den() != 1)
            return false;
    return true;
}

bool QMat::is_antisymmetric() const {
    if (rows_ != cols_)
        return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j <= i; ++j)
            if (at(i, j) != -at(j, i))
                return false;
    return true;
}

QMat operator*(const QMat& a, const QMat& b) {
    if (a.cols_ != b.rows_)
        throw Error("matrix dimension mismatch");
    QMat m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& x = a.at(i, k);
            if (x == 0)
                continue;
            for (int j = 0; j < b.cols_; ++j)
                m.at(i, j) += x * b.at(k, j);
        }
    return m;
}

QMat operator+(const QMat& a, const QMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error("matrix dimension mismatch");
    QMat m(a.rows_, a.cols_);
    for (size_t k = 0; k < m.a_.size(); ++k)
        m.a_[k] = a.a_[k] + b.a_[k];
    return m;
}

QMat operator-(const QMat& a, const QMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error("matrix dimension mismatch");
    QMat m(a.rows_, a.cols_);
    for (size_t k = 0; k < m.a_.size(); ++k)
        m.a_[k] = a.a_[k] - b.a_[k];
    return m;
}

Rational QMat::det() const {
    if (rows_ != cols_)
        throw Error("determinant of non-square matrix");
    QMat m = *this;
    Rational d = 1;
    for (int c = 0; c < cols_; ++c) {
        int piv = c;
        while (piv < rows_ && m.at(piv, c) == 0)
            ++piv;
        if (piv == rows_)
            return 0;
        if (piv != c) {
            for (int j = 0; j < cols_; ++j)
                std::swap(m.at(c, j), m.at(piv, j));
            d = -d;
        }
        d *= m.at(c, c);
        Rational pv = m.at(c, c);
        for (int r = c + 1; r < rows_; ++r) {
            if (m.at(r, c) == 0)
                continue;
            Rational f = m.at(r, c) / pv;
            for (int j = c; j < cols_; ++j)
                m.at(r, j) -= f * m.at(c, j);
        }
    }
    return d;
}

QMat QMat::inverse() const {
    if (rows_ != cols_)
        throw Error("inverse of non-square matrix");
    const int n = rows_;
    QMat m = *this;
    QMat inv = identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (piv < n && m.at(piv, c) == 0)
            ++piv;
        if (piv == n)
            throw Error("singular rational matrix");
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(c, j), m.at(piv, j));
                std::swap(inv.at(c, j), inv.at(piv, j));
            }
        Rational pv = m.at(c, c);
        for (int j = 0; j < n; ++j) {
            m.at(c, j) /= pv;
            inv.at(c, j) /= pv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || m.at(r, c) == 0)
                continue;
            Rational f = m.at(r, c);
            for (int j = 0; j < n; ++j) {
                m.at(r, j) -= f * m.at(c, j);
                inv.at(r, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

CMat CMat::transpose() const {
    CMat m(cols_, rows_, a_.empty() ? mpfr_prec_t(64) : a_[0].prec());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            m.at(j, i) = at(i, j);
    return m;
}

CMat operator*(const CMat& a, const CMat& b) {
    if (a.cols_ != b.rows_)
        throw Error("matrix dimension mismatch");
    mpfr_prec_t p = a.a_.empty() ? (b.a_.empty() ? 64 : b.a_[0].prec()) : a.a_[0].prec();
    CMat m(a.rows_, b.cols_, p);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) {
            BigComplex s(p);
            for (int k = 0; k < a.cols_; ++k)
                s = s + a.at(i, k) * b.at(k, j);
            m.at(i, j) = s;
        }
    return m;
}

CMat operator+(const CMat& a, const CMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error("matrix dimension mismatch");
    mpfr_prec_t p = a.a_.empty() ? 64 : a.a_[0].prec();
    CMat m(a.rows_, a.cols_, p);
    for (size_t k = 0; k < m.a_.size(); ++k)
        m.a_[k] = a.a_[k] + b.a_[k];
    return m;
}

CSolveResult cmat_solve(const CMat& a, const CMat& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows())
        throw Error("matrix dimension mismatch");
    const int n = a.rows();
    const int m = b.cols();
    mpfr_prec_t p = n > 0 ? a.at(0, 0).prec() : 64;
    CMat w = a;
    CMat x = b;

    long max_exp = LONG_MIN / 2, min_piv_exp = LONG_MAX / 2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long e = w.at(i, j).abs().exponent();
            if (e > max_exp)
                max_exp = e;
        }

    for (int c = 0; c < n; ++c) {
        int piv = c;
        BigReal best = w.at(c, c).abs();
        for (int r = c + 1; r < n; ++r) {
            BigReal v = w.at(r, c).abs();
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best.is_zero())
            throw Error("singular complex matrix");
        if (piv != c) {
            for (int j = 0; j < n; ++j)
                std::swap(w.at(c, j), w.at(piv, j));
            for (int j = 0; j < m; ++j)
                std::swap(x.at(c, j), x.at(piv, j));
        }
        long pe = best.exponent();
        if (pe < min_piv_exp)
            min_piv_exp = pe;
        BigComplex pv = w.at(c, c);
        for (int j = c; j < n; ++j)
            w.at(c, j) = w.at(c, j) / pv;
        for (int j = 0; j < m; ++j)
            x.at(c, j) = x.at(c, j) / pv;
        for (int r = 0; r < n; ++r) {
            if (r == c || w.at(r, c).is_zero())
                continue;
            BigComplex f = w.at(r, c);
            for (int j = c; j < n; ++j)
                w.at(r, j) = w.at(r, j) - f * w.at(c, j);
            for (int j = 0; j < m; ++j)
                x.at(r, j) = x.at(r, j) - f * x.at(c, j);
        }
    }
    (void)p;
    return {std::move(x), static_cast<double>(max_exp - min_piv_exp)};
}

} // namespace siegel
