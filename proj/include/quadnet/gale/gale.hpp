#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quadnet/curves/plane_curves.hpp"
#include "quadnet/hm/hilbert_mumford.hpp"
#include "quadnet/nets/quadric_nets.hpp"

namespace quadnet {

/// Invertible matrix M with last column proportional to p; moved
/// coordinates u relate to the original ones by x = M u.
ScalarMatrix projection_frame(const Point3& p);

/// Q(M u) = w*l + q with l linear and q quadratic in (u0, u1, u2).
struct PointDecomposition {
  MultiPoly l, q;
};

/// Throws PointNotOnQuadric when the w^2 coefficient is nonzero.
PointDecomposition decompose_at_point(const MultiPoly& quadric, const ScalarMatrix& frame);

struct CubicNet {
  /// C12, C13, C23 in (x, y, z), with Cij = li*qj - lj*qi.
  std::array<MultiPoly, 3> cubics;
  std::array<PointDecomposition, 3> parts;
  ScalarMatrix frame;
  Point3 point;
};

/// Throws DegenerateGale when the cubics do not span a net.
CubicNet gale_transform(const QuadricNet& net, const Point3& p);

struct ProjectedPoint {
  BasePoint source;
  PlanePoint image;
  bool common_zero;
};

struct GaleVerification {
  std::vector<ProjectedPoint> projected;
  /// Base-locus length minus one (p itself); 7 for a complete check.
  long accounted = 0;
  long expected = 7;
  bool all_common_zeros = true;
  bool syzygy = true;
};

/// Projects every other base point of the net from p and checks it is a
/// common zero of the cubics. Degenerate when the base locus is not finite.
GaleVerification verify_gale(const QuadricNet& net, const Point3& p, int cap = kBaseLocusCap);

bool gale_syzygy_holds(const CubicNet& g);

/// Rational common zeros of plane forms (none when they share a component).
std::vector<PlanePoint> common_rational_zeros(const std::vector<MultiPoly>& forms);

enum class CubicVerdict { Stable, StrictlySemistable, Unstable, Undecided };
const char* to_string(CubicVerdict v);

struct CubicNetStability {
  CubicVerdict status = CubicVerdict::Undecided;
  std::string route;
  std::optional<Certificate> certificate;
  long value = 0;
};

/// With a discriminant from a good net, the quartic verdict carries over.
/// Without it, only destabilizing certificates are searched; the answer is
/// Unstable or Undecided. Throws ProvenanceInvalid when the discriminant is
/// not reduced with only ADE singularities.
CubicNetStability cubic_net_stability(const std::array<MultiPoly, 3>& cubics,
                                      const std::optional<MultiPoly>& provenance, int cap = kDefaultLocalCap);

}  // namespace quadnet
