#pragma once

#include <optional>
#include <vector>

#include "nfsos/place.hpp"

namespace nfsos {

using ZMatrix = std::vector<ZPoly>;
using QMatrix = std::vector<QVec>;

/// Fraction-free Gaussian elimination (Bareiss).
mpz_class determinant(ZMatrix m);
mpq_class determinant(QMatrix m);

/// Solves A x = b for square A; empty if A is singular.
std::optional<QVec> solve(QMatrix a, QVec b);

/// Row Hermite normal form of the lattice spanned by the rows; zero rows dropped.
ZMatrix hermite_form(ZMatrix rows);

/// Elementary divisors (diagonal of the Smith form), including ones, of a
/// full-rank square integer matrix.
std::vector<mpz_class> smith_invariants(ZMatrix m);

/// LLL reduction (delta = 3/4) of the row basis with respect to the positive
/// definite Gram matrix `gram`. Rows must be linearly independent.
ZMatrix lll(ZMatrix basis, const ZMatrix& gram);

}  // namespace nfsos
