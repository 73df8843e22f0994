#pragma once

#include "novikov/exact/poly.hpp"

#include <utility>
#include <vector>

namespace novikov {

/// Factorization over Q of a nonzero integer polynomial into primitive
/// irreducible factors with positive leading coefficient, paired with their
/// multiplicities. Constant polynomials yield an empty list.
///
/// Square-free parts are factored with the Berlekamp-Zassenhaus scheme:
/// Cantor-Zassenhaus modulo a small prime, Hensel lifting past the Mignotte
/// bound, then recombination by trial division. Throws std::invalid_argument
/// on the zero polynomial.
std::vector<std::pair<IntPoly, int>> factor(const IntPoly& p);

/// Factors of a primitive square-free polynomial of positive degree.
std::vector<IntPoly> factor_squarefree(const IntPoly& p);

bool is_irreducible(const IntPoly& p);

}  // namespace novikov
