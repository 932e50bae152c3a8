#pragma once

#include <cstddef>
#include <vector>

#include "quadnet/algebra/poly.hpp"

namespace quadnet {

/// Sylvester resultant of f and g with respect to var. When exactly one of
/// them is constant in var the usual power convention applies. Both constant
/// in var throws MathError(DegenerateResultant).
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var);

/// Pseudo-remainder of a by b with respect to var.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t var);

/// Greatest common divisor over Q, normalized by MultiPoly::primitive()
/// (integer coefficients, gcd 1, positive leading coefficient). gcd(0, 0) = 0.
/// Requires rational coefficients.
MultiPoly gcd_multivar(const MultiPoly& f, const MultiPoly& g);

/// gcd of the coefficients of f viewed as a polynomial in var.
MultiPoly content_in(const MultiPoly& f, std::size_t var);

struct PolyFactor {
  MultiPoly factor;
  int multiplicity;
};

/// Squarefree decomposition of a nonzero rational polynomial. Each factor is
/// primitive and nonconstant, and distinct entries are pairwise coprime;
/// one entry per multiplicity, sorted by multiplicity. The product of the
/// powers equals f up to a rational constant.
std::vector<PolyFactor> squarefree_decomposition(const MultiPoly& f);

bool is_squarefree(const MultiPoly& f);

}  // namespace quadnet
