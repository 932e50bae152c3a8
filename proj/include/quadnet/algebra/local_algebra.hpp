#pragma once

#include <vector>

#include "quadnet/algebra/poly.hpp"

namespace quadnet {

inline constexpr int kDefaultLocalCap = 16;

/// Length of the local ring at the origin modulo the ideal generated by the
/// given polynomials (all vanishing at the origin). Computes the dimension of
/// the quotient truncated below degree D for D = 1, 2, ... and returns it at
/// the first D where two consecutive truncations agree. Throws
/// MathError(NotStabilized) when D would exceed cap.
long local_algebra_dimension(const std::vector<MultiPoly>& generators, int cap = kDefaultLocalCap);

/// Dimension of the quotient truncated below degree D.
long truncated_quotient_dimension(const std::vector<MultiPoly>& generators, int degree);

}  // namespace quadnet
