#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quadnet/algebra/local_algebra.hpp"
#include "quadnet/algebra/poly.hpp"
#include "quadnet/algebra/unipoly.hpp"

namespace quadnet {

/// Homogeneous ternary form (3 variables).
class TernaryForm {
 public:
  /// Throws MathError(InvalidArgument) unless p has 3 variables and is
  /// homogeneous (zero allowed).
  explicit TernaryForm(MultiPoly p);
  const MultiPoly& poly() const { return p_; }
  /// -1 for zero.
  int degree() const { return p_.total_degree(); }
  bool is_zero() const { return p_.is_zero(); }

 private:
  MultiPoly p_;
};

/// Projective point in P^2 scaled so the first nonzero coordinate is 1.
struct PlanePoint {
  std::array<Scalar, 3> c;

  static PlanePoint make(const Scalar& x, const Scalar& y, const Scalar& z);
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
  std::string to_string() const;
};

enum class SingularityKind { A, D, E, NonADE };
enum class NonADEReason { None, MultiplicityAtLeast4, TripleLineBadMilnor, NotIsolated };

struct SingularityType {
  SingularityKind kind = SingularityKind::NonADE;
  int n = 0;
  NonADEReason reason = NonADEReason::None;

  bool is_ade() const { return kind != SingularityKind::NonADE; }
  /// "A4", "D5", "E7", "NonADE(MultiplicityAtLeast4)".
  std::string to_string() const;
  friend bool operator==(const SingularityType&, const SingularityType&) = default;
};

struct SingularityRecord {
  PlanePoint point;
  int multiplicity = 0;
  std::optional<long> milnor;  // empty when not isolated
  SingularityType type;
};

struct SingularLocus {
  std::vector<PlanePoint> points;
  /// Monic eliminant factors of degree >= 3 whose roots were not resolved.
  std::vector<UniPoly> residual;
  bool non_isolated = false;
};

enum class TangentShape { DistinctLines, DoubleLine, DoublePlusSimple, TripleLine, Other };
const char* to_string(TangentShape s);

struct TangentCone {
  /// Binary form in local coordinates (u, v) at the point.
  MultiPoly form;
  TangentShape shape;
};

enum class Verdict { Stable, StrictlySemistable, Unstable };
const char* to_string(Verdict v);

struct QuarticVerdict {
  Verdict status = Verdict::Unstable;
  std::vector<std::string> reasons;
  std::vector<SingularityRecord> singularities;
};

/// F restricted to the affine chart of p, translated so p is the origin.
/// Local variables are the two remaining coordinates in increasing order.
MultiPoly localize(const MultiPoly& F, const PlanePoint& p);

bool is_reduced(const MultiPoly& F);

/// Singular points of F over Q and quadratic fields. Points on a repeated
/// component are not listed; non_isolated flags that case.
SingularLocus singular_points(const MultiPoly& F);

int multiplicity_at(const MultiPoly& F, const PlanePoint& p);
/// Empty when p lies on a repeated component of F.
std::optional<long> milnor_number(const MultiPoly& F, const PlanePoint& p, int cap = kDefaultLocalCap);
TangentCone tangent_cone(const MultiPoly& F, const PlanePoint& p);
SingularityRecord classify_singularity(const MultiPoly& F, const PlanePoint& p, int cap = kDefaultLocalCap);

/// Reduced with only ADE points. Throws UnclassifiedExtensionPoint when
/// eliminant factors remain unresolved.
std::pair<bool, std::vector<SingularityRecord>> has_only_ade(const MultiPoly& F, int cap = kDefaultLocalCap);

/// F = c q^2 with q a ternary quadric of rank 3.
bool double_smooth_conic_test(const MultiPoly& F);

/// Rank of a ternary quadratic form.
int ternary_quadric_rank(const MultiPoly& q);

/// F = L C with L tangent to C at a smooth flex point of C (contact 3).
bool inflectional_tangent_quartic_test(const MultiPoly& F, int cap = kDefaultLocalCap);

/// Contact order of the line through p with the curve C at p: valuation of
/// C restricted to a parametrization of the line starting at p.
int contact_order(const MultiPoly& C, const std::array<Scalar, 3>& line, const PlanePoint& p);

QuarticVerdict decide_quartic_stability(const MultiPoly& F, int cap = kDefaultLocalCap);

}  // namespace quadnet
