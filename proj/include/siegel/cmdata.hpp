#pragma once

#include <vector>

#include "siegel/cyclo.hpp"
#include "siegel/linalg.hpp"

namespace siegel {

// CM data for K = Q(zeta_ell), ell an odd prime, g = (ell-1)/2.
// The CM type of K is {phi_i^{-1} : 1 <= i <= g} with phi_i(zeta) = zeta^i;
// its reflex type gives the embedding Psi(a) = (a^{phi_1}, ..., a^{phi_g}).
// xi = (zeta - zeta^{-1})/ell generates the inverse different and its type
// embeddings lie on the positive imaginary axis.
struct CmContext {
    long ell;
    int g;
    CycloElem xi;
    std::vector<long> type_exponents;   // 1..g
    std::vector<long> reflex_exponents; // i^{-1} mod ell for i = 1..g

    static CmContext make(long ell);

    // x_1..x_{2g}: x_j = zeta^{2j} for j <= g, else sum of zeta^{2k-1}
    // for k = 1..j-g; an integral basis adapted to the polarization.
    std::vector<CycloElem> seed_basis() const;
};

// phi(a) = prod over the reflex exponents of a^{phi_i^{-1}}
CycloElem type_norm(const CmContext& ctx, const CycloElem& a);

// Psi(a) componentwise at the type exponents
std::vector<BigComplex> psi_embed(const CmContext& ctx, const CycloElem& a, mpfr_prec_t prec);

// R-bilinear pairing (a,b) -> Tr(c * scale * a * conj(b)); c purely imaginary
struct RiemannFormSpec {
    CycloElem c;
    Rational scale;

    RiemannFormSpec(CycloElem c_, Rational scale_);
};

Rational riemann_pairing(const RiemannFormSpec& spec, const CycloElem& a, const CycloElem& b);

// m_c = N_K(c) / n^2 for the conductor n*O_K (K_0 rational, d_0 = 2)
Rational compute_mc(const CmContext& ctx, long n, const CycloIdeal& c_ideal);

// matrix of pairings over a 2g-element basis
QMat gram_matrix(const RiemannFormSpec& spec, const std::vector<CycloElem>& basis);

bool gram_is_standard_j(const QMat& gram);

} // namespace siegel
