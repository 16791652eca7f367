#pragma once

#include <random>

#include "siegel/theta.hpp"

namespace siegel {

using Rng = std::mt19937_64;

// random word of length <= max_len in the standard generators of Sp_2g(Z):
// J and the upper unipotents [[I, B], [0, I]] with small symmetric B
QMat random_symplectic(int g, Rng& rng, int max_len = 6);

// random unimodular integral matrix (product of elementary row operations)
QMat random_unimodular(int n, Rng& rng, int ops = 8);

// Z = X + iY with X random symmetric, Y = L L^T + I; smallest eigenvalue
// of Y stays around 1 so theta boxes stay small
SiegelPoint random_siegel_point(int g, mpfr_prec_t prec, Rng& rng);

// random characteristic with entries k/den, k in [-den, den]
ThetaChar random_char(int g, long den, Rng& rng);

} // namespace siegel
