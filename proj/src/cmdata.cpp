#include "siegel/cmdata.hpp"

#include "siegel/error.hpp"

namespace siegel {

namespace {

long inv_mod(long a, long m) {
    long t = 0, new_t = 1;
    long r = m, new_r = a % m;
    if (new_r < 0)
        new_r += m;
    while (new_r != 0) {
        long q = r / new_r;
        long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1)
        throw Error("not invertible mod m");
    return t < 0 ? t + m : t;
}

} // namespace

CmContext CmContext::make(long ell) {
    if (!is_odd_prime(ell))
        throw Error("ell must be an odd prime");
    CmContext ctx{ell,
                  static_cast<int>((ell - 1) / 2),
                  CycloElem(ell),
                  {},
                  {}};
    CycloElem zeta = CycloElem::zeta_pow(ell, 1);
    CycloElem zeta_inv = CycloElem::zeta_pow(ell, ell - 1);
    ctx.xi = Rational(1, ell) * (zeta - zeta_inv);
    if (!(ctx.xi.conj() == -ctx.xi))
        throw Error("xi is not purely imaginary");
    for (long i = 1; i <= ctx.g; ++i) {
        ctx.type_exponents.push_back(i);
        ctx.reflex_exponents.push_back(inv_mod(i, ell));
    }
    // (P1): the type embeddings of xi lie on the positive imaginary axis
    for (long i : ctx.type_exponents) {
        BigComplex v = ctx.xi.embed(i, 256);
        if (!(v.im().sign() > 0) || abs(v.re()) > BigReal::pow2(-240, 64))
            throw Error("xi fails positivity");
    }
    return ctx;
}

std::vector<CycloElem> CmContext::seed_basis() const {
    std::vector<CycloElem> xs;
    for (long j = 1; j <= g; ++j)
        xs.push_back(CycloElem::zeta_pow(ell, 2 * j));
    for (long j = g + 1; j <= 2 * g; ++j) {
        CycloElem s(ell);
        for (long k = 1; k <= j - g; ++k)
            s = s + CycloElem::zeta_pow(ell, 2 * k - 1);
        xs.push_back(s);
    }
    return xs;
}

CycloElem type_norm(const CmContext& ctx, const CycloElem& a) {
    CycloElem p = CycloElem::from_rational(ctx.ell, 1);
    for (long e : ctx.reflex_exponents)
        p = p * a.galois(e);
    return p;
}

std::vector<BigComplex> psi_embed(const CmContext& ctx, const CycloElem& a, mpfr_prec_t prec) {
    std::vector<BigComplex> v;
    v.reserve(ctx.type_exponents.size());
    for (long e : ctx.type_exponents)
        v.push_back(a.embed(e, prec));
    return v;
}

RiemannFormSpec::RiemannFormSpec(CycloElem c_, Rational scale_)
    : c(std::move(c_)), scale(std::move(scale_)) {
    if (!(c.conj() == -c))
        throw Error("Riemann form scalar must be purely imaginary");
}

Rational riemann_pairing(const RiemannFormSpec& spec, const CycloElem& a, const CycloElem& b) {
    return spec.scale * (spec.c * a * b.conj()).trace_to_q();
}

Rational compute_mc(const CmContext& ctx, long n, const CycloIdeal& c_ideal) {
    (void)ctx;
    if (n < 2)
        throw Error("conductor level must be at least 2");
    return c_ideal.absolute_norm() / Rational(Integer(n) * Integer(n));
}

QMat gram_matrix(const RiemannFormSpec& spec, const std::vector<CycloElem>& basis) {
    const int n = static_cast<int>(basis.size());
    QMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = riemann_pairing(spec, basis[static_cast<size_t>(i)],
                                         basis[static_cast<size_t>(j)]);
    return m;
}

bool gram_is_standard_j(const QMat& gram) {
    if (gram.rows() != gram.cols() || gram.rows() % 2 != 0)
        return false;
    return gram == QMat::symplectic_j(gram.rows() / 2);
}

} // namespace siegel
