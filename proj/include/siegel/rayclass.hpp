#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "siegel/cmdata.hpp"
#include "siegel/theta.hpp"

namespace siegel {

struct RayClass {
    long label = 0;                // C_label; for cyclic groups C_k = C_1^k
    CycloElem representative;      // small integral lift, coprime to the conductor
    std::vector<long> residue;     // coordinates of the representative mod N
    std::vector<long> r_vec;       // 2g entries in [0, N)
    bool aligned = true;           // representative matches the built-in row choice

    RayClass() : representative(3) {}
};

struct RayClassTable {
    long ell = 0;
    long n_level = 0;
    int g = 0;
    long order = 0;                    // number of ray classes
    long residue_unit_count = 0;       // |(O_K/N)^x|, by exhaustion
    long unit_image_count = 0;         // order of the image of the unit group
    bool cyclic = false;
    std::vector<long> cyclic_factors;  // invariant factors d_1 | d_2 | ...
    std::vector<RayClass> classes;     // label order

    // filled by compute_invariants
    mpfr_prec_t prec = 0;
    std::optional<SiegelPoint> cm;
    std::vector<BigComplex> invariants; // parallel to classes

    // residue key -> label
    std::unordered_map<unsigned long long, long> class_of_residue;

    const RayClass& by_label(long label) const;
    long label_of(const CycloElem& elem) const; // throws if not coprime to f
};

// Enumerates Cl(N*O_K) for K = Q(zeta_ell), class number one (ell <= 19),
// by exhausting the residue ring and quotienting by the images of -zeta and
// the cyclotomic units. Throws "class number != 1 unsupported" outside the
// supported primes.
RayClassTable enumerate_ray_classes(long ell, long n);

// x-basis expansion of the type norm of lambda, reduced into [0, N)^{2g}
std::vector<long> r_vector(const CmContext& ctx, long n, const CycloElem& lambda);

// CM point of the seed basis; class independent. Throws "degenerate CM data".
SiegelPoint cm_point(const CmContext& ctx, mpfr_prec_t prec);

// CM point attached to an arbitrary symplectic basis of the lattice
SiegelPoint cm_point_from_basis(const CmContext& ctx, const std::vector<CycloElem>& basis,
                                mpfr_prec_t prec);

BigComplex siegel_invariant(const CmContext& ctx, const RayClassTable& table, const RayClass& cls,
                            mpfr_prec_t prec);

// fills table.invariants / table.cm / table.prec; classes run in parallel
void compute_invariants(const CmContext& ctx, RayClassTable& table, mpfr_prec_t prec,
                        int threads = 0);

// Recomputes the invariant of cls through an alternative class representative
// (fresh lattice, reduction, CM point and r-vector) and compares to the
// stored value at prec/8 decimal digits. Throws "not same ray class" when the
// representatives are inequivalent.
bool independence_check(const CmContext& ctx, const RayClassTable& table, const RayClass& cls,
                        const CycloElem& alt_representative, mpfr_prec_t prec);

// Same comparison through a scrambled lattice basis: unimodular change of
// basis, symplectic reduction (optionally with reversed pivot tie-breaking),
// fresh CM point and r-vector.
bool independence_check_basis(const CmContext& ctx, const RayClassTable& table,
                              const RayClass& cls, const QMat& unimodular, bool reversed_ties,
                              mpfr_prec_t prec);

// character C_k -> e(index*k/order) on a cyclic class group
struct Character {
    long order = 1;
    long index = 0;
};

// S(chi) = sum over classes of chi(C) * ln|invariant(C)|
BigComplex stickelberger_sum(const RayClassTable& table, const Character& chi);

// label arithmetic helper for cyclic tables
long label_of_product(const RayClassTable& table, long label_a, long label_b);

} // namespace siegel
