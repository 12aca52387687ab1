#pragma once

// Irreducible factorization of univariate polynomials over F_p and Q.
// Results are sorted by degree, then by coefficient string, so output is
// deterministic.

#include "k3/polynomial.hpp"

#include <utility>
#include <vector>

namespace k3 {

/// Modular exponentiation base^e mod m over F_p.
FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m);

/// Square-free decomposition of a nonzero polynomial over F_p: monic
/// square-free, pairwise coprime parts with their multiplicities.
std::vector<std::pair<FpPoly, int>> squarefree_decomposition(const FpPoly& f);

/// Monic irreducible factors with multiplicities. Throws
/// std::domain_error for the zero polynomial.
std::vector<std::pair<FpPoly, int>> factor_over_fp(const FpPoly& f);

/// Primitive irreducible factors with positive leading coefficient; the
/// content and sign are dropped. Throws std::domain_error for zero.
std::vector<std::pair<IntPoly, int>> factor_over_integers(const IntPoly& f);

/// Monic irreducible factors over Q.
std::vector<std::pair<RatPoly, int>> factor_over_rationals(const RatPoly& f);

/// Primitive integer polynomial proportional to f, positive leading coefficient.
IntPoly primitive_part(const RatPoly& f);
IntPoly primitive_part(const IntPoly& f);

}  // namespace k3
