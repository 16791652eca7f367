#include "siegel/cyclo.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "siegel/error.hpp"

namespace siegel {

bool is_odd_prime(long ell) {
    if (ell < 3 || ell % 2 == 0)
        return false;
    for (long d = 3; d * d <= ell; d += 2)
        if (ell % d == 0)
            return false;
    return true;
}

CycloElem::CycloElem(long ell) : ell_(ell), coords_(static_cast<size_t>(ell - 1)) {
    if (!is_odd_prime(ell))
        throw Error("ell must be an odd prime");
}

CycloElem CycloElem::from_rational(long ell, const Rational& q) {
    CycloElem r(ell);
    for (auto& c : r.coords_)
        c = -q;
    return r;
}

CycloElem CycloElem::zeta_pow(long ell, long k) {
    k %= ell;
    if (k < 0)
        k += ell;
    if (k == 0)
        return from_rational(ell, 1);
    CycloElem r(ell);
    r.coords_[static_cast<size_t>(k - 1)] = 1;
    return r;
}

CycloElem CycloElem::from_coords(long ell, std::vector<Rational> coords) {
    CycloElem r(ell);
    if (coords.size() != r.coords_.size())
        throw Error("coordinate vector has wrong length");
    r.coords_ = std::move(coords);
    return r;
}

bool CycloElem::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0)
            return false;
    return true;
}

bool CycloElem::is_integral() const {
    for (const auto& c : coords_)
        if (c.get_den() != 1)
            return false;
    return true;
}

bool CycloElem::is_rational() const {
    for (const auto& c : coords_)
        if (c != coords_[0])
            return false;
    return true;
}

Rational CycloElem::as_rational() const {
    if (!is_rational())
        throw Error("element is not rational");
    return -coords_[0];
}

CycloElem CycloElem::galois(long i) const {
    long ir = i % ell_;
    if (ir < 0)
        ir += ell_;
    if (ir == 0)
        throw Error("Galois index must be nonzero mod ell");
    CycloElem r(ell_);
    for (long k = 1; k < ell_; ++k)
        r.coords_[static_cast<size_t>((ir * k) % ell_ - 1)] = coords_[static_cast<size_t>(k - 1)];
    return r;
}

Rational CycloElem::trace_to_q() const {
    // Tr(zeta^k) = -1 for every k != 0 mod ell
    Rational s = 0;
    for (const auto& c : coords_)
        s += c;
    return -s;
}

Rational CycloElem::norm_to_q() const {
    CycloElem p = from_rational(ell_, 1);
    for (long i = 1; i < ell_; ++i)
        p = p * galois(i);
    return p.as_rational();
}

CycloElem operator+(const CycloElem& a, const CycloElem& b) {
    if (a.ell_ != b.ell_)
        throw Error("mixed cyclotomic fields");
    CycloElem r(a.ell_);
    for (size_t k = 0; k < r.coords_.size(); ++k)
        r.coords_[k] = a.coords_[k] + b.coords_[k];
    return r;
}

CycloElem operator-(const CycloElem& a, const CycloElem& b) {
    if (a.ell_ != b.ell_)
        throw Error("mixed cyclotomic fields");
    CycloElem r(a.ell_);
    for (size_t k = 0; k < r.coords_.size(); ++k)
        r.coords_[k] = a.coords_[k] - b.coords_[k];
    return r;
}

CycloElem operator-(const CycloElem& a) {
    CycloElem r(a.ell_);
    for (size_t k = 0; k < r.coords_.size(); ++k)
        r.coords_[k] = -a.coords_[k];
    return r;
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    if (a.ell_ != b.ell_)
        throw Error("mixed cyclotomic fields");
    const long ell = a.ell_;
    std::vector<Rational> raw(static_cast<size_t>(ell)); // exponents 0..ell-1
    for (long i = 1; i < ell; ++i) {
        const Rational& x = a.coords_[static_cast<size_t>(i - 1)];
        if (x == 0)
            continue;
        for (long j = 1; j < ell; ++j) {
            const Rational& y = b.coords_[static_cast<size_t>(j - 1)];
            if (y == 0)
                continue;
            raw[static_cast<size_t>((i + j) % ell)] += x * y;
        }
    }
    // fold the zeta^0 term back: 1 = -(zeta + ... + zeta^{ell-1})
    CycloElem r(ell);
    for (long k = 1; k < ell; ++k)
        r.coords_[static_cast<size_t>(k - 1)] = raw[static_cast<size_t>(k)] - raw[0];
    return r;
}

CycloElem operator*(const Rational& q, const CycloElem& a) {
    CycloElem r(a.ell_);
    for (size_t k = 0; k < r.coords_.size(); ++k)
        r.coords_[k] = q * a.coords_[k];
    return r;
}

namespace {

// exact Gauss-Jordan solve of M x = rhs, M given column-wise
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> cols,
                                   std::vector<Rational> rhs) {
    const size_t n = rhs.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            m[i][j] = cols[j][i];
        m[i][n] = rhs[i];
    }
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m[piv][c] == 0)
            ++piv;
        if (piv == n)
            throw Error("basis not independent");
        std::swap(m[c], m[piv]);
        Rational pv = m[c][c];
        for (size_t j = c; j <= n; ++j)
            m[c][j] /= pv;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0)
                continue;
            Rational f = m[r][c];
            for (size_t j = c; j <= n; ++j)
                m[r][j] -= f * m[c][j];
        }
    }
    std::vector<Rational> x(n);
    for (size_t i = 0; i < n; ++i)
        x[i] = m[i][n];
    return x;
}

} // namespace

CycloElem CycloElem::inverse() const {
    if (is_zero())
        throw Error("inverse of zero");
    const size_t n = coords_.size();
    std::vector<std::vector<Rational>> cols(n);
    for (long k = 1; k < ell_; ++k)
        cols[static_cast<size_t>(k - 1)] = ((*this) * zeta_pow(ell_, k)).coords_;
    std::vector<Rational> one = from_rational(ell_, 1).coords_;
    return from_coords(ell_, solve_linear(std::move(cols), std::move(one)));
}

BigComplex CycloElem::embed(long i, mpfr_prec_t prec) const {
    long ir = i % ell_;
    if (ir < 0)
        ir += ell_;
    if (ir == 0)
        throw Error("Galois index must be nonzero mod ell");
    mpfr_prec_t work = prec + 16;
    BigComplex acc(work);
    for (long k = 1; k < ell_; ++k) {
        const Rational& c = coords_[static_cast<size_t>(k - 1)];
        if (c == 0)
            continue;
        BigComplex root = e_of(Rational((ir * k) % ell_, ell_), work);
        acc = acc + BigReal::from_rational(c, work) * root;
    }
    return acc.round_to(prec);
}

std::vector<Rational> solve_in_basis(const CycloElem& target, const std::vector<CycloElem>& basis) {
    if (basis.empty())
        throw Error("basis not independent");
    const size_t n = target.coords().size();
    if (basis.size() != n)
        throw Error("basis has wrong size");
    std::vector<std::vector<Rational>> cols(n);
    for (size_t j = 0; j < n; ++j) {
        if (basis[j].ell() != target.ell())
            throw Error("mixed cyclotomic fields");
        cols[j] = basis[j].coords();
    }
    return solve_linear(std::move(cols), target.coords());
}

// --- parser / printer -------------------------------------------------------
//
// Grammar: terms joined with + or -, each term one of
//   <rat>            rational constant, e.g. "2", "-3/2"
//   [<rat>*] z[^k]   power of zeta with optional rational coefficient

std::string CycloElem::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (long k = 1; k < ell_; ++k) {
        const Rational& c = coords_[static_cast<size_t>(k - 1)];
        if (c == 0)
            continue;
        Rational a = c > 0 ? c : Rational(-c);
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (a != 1)
            out << a.get_str() << "*";
        out << "z^" << k;
    }
    if (first)
        out << "0";
    return out.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

Rational parse_rational(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        ++c.i;
    if (c.i == start)
        throw Error("expected number in cyclotomic element at position " + std::to_string(start));
    std::string num = c.s.substr(start, c.i - start);
    if (c.peek() == '/') {
        ++c.i;
        c.skip_ws();
        size_t dstart = c.i;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
            ++c.i;
        if (c.i == dstart)
            throw Error("expected denominator in cyclotomic element");
        num += "/" + c.s.substr(dstart, c.i - dstart);
    }
    Rational q(num);
    q.canonicalize();
    return q;
}

} // namespace

CycloElem CycloElem::parse(long ell, const std::string& text) {
    CycloElem acc(ell);
    Cursor c{text};
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            sign = ch == '-' ? -1 : 1;
            ++c.i;
        } else if (!first) {
            throw Error("expected + or - in cyclotomic element");
        }
        first = false;
        Rational coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = parse_rational(c);
            have_coeff = true;
            if (c.peek() == '*')
                ++c.i;
        }
        long k = 0;
        if (c.peek() == 'z') {
            ++c.i;
            k = 1;
            if (c.peek() == '^') {
                ++c.i;
                c.skip_ws();
                size_t start = c.i;
                while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
                    ++c.i;
                if (c.i == start)
                    throw Error("expected exponent after ^");
                k = std::stol(c.s.substr(start, c.i - start));
            }
        } else if (!have_coeff) {
            throw Error("expected term in cyclotomic element");
        }
        CycloElem term = (k == 0) ? from_rational(ell, coeff)
                                  : Rational(coeff) * zeta_pow(ell, k);
        acc = (sign > 0) ? acc + term : acc - term;
    }
    return acc;
}

CycloIdeal::CycloIdeal(CycloElem gen) : gen_(std::move(gen)) {
    if (gen_.is_zero())
        throw Error("zero generator for ideal");
}

Rational CycloIdeal::absolute_norm() const {
    Rational n = gen_.norm_to_q();
    return n < 0 ? Rational(-n) : n;
}

} // namespace siegel
