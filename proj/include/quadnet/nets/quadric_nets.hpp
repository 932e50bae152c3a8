#pragma once

#include <array>
#include <string>
#include <vector>

#include "quadnet/algebra/matrix.hpp"
#include "quadnet/algebra/poly.hpp"
#include "quadnet/algebra/unipoly.hpp"
#include "quadnet/curves/plane_curves.hpp"

namespace quadnet {

inline constexpr int kBaseLocusCap = 10;

/// Quadratic form x^T A x on P^3; A symmetric with rational entries, so the
/// coefficient of x_i x_j (i != j) is 2 A[i][j].
class Quadric4 {
 public:
  Quadric4() : a_(4, 4) {}
  explicit Quadric4(ScalarMatrix a);
  /// From a homogeneous quadratic polynomial in 4 variables.
  static Quadric4 from_form(const MultiPoly& q);

  const ScalarMatrix& matrix() const { return a_; }
  MultiPoly form() const;
  bool is_zero() const;
  friend bool operator==(const Quadric4&, const Quadric4&) = default;

 private:
  ScalarMatrix a_;
};

/// Ordered generators of a net; the three matrices are linearly independent.
class QuadricNet {
 public:
  /// Throws MathError(Degenerate) when the generators are dependent.
  QuadricNet(Quadric4 q1, Quadric4 q2, Quadric4 q3);
  static QuadricNet from_forms(const MultiPoly& q1, const MultiPoly& q2, const MultiPoly& q3);

  const std::array<Quadric4, 3>& generators() const { return q_; }
  std::array<MultiPoly, 3> forms() const;

 private:
  std::array<Quadric4, 3> q_;
};

/// Projective point in P^3 with first nonzero coordinate 1.
struct Point3 {
  std::array<Scalar, 4> c;

  static Point3 make(const Scalar& x, const Scalar& y, const Scalar& z, const Scalar& w);
  static Point3 make(const std::array<Scalar, 4>& v) { return make(v[0], v[1], v[2], v[3]); }
  friend bool operator==(const Point3&, const Point3&) = default;
  std::string to_string() const;
};

struct BasePoint {
  Point3 point;
  long multiplicity;
};

struct BaseLocusReport {
  std::vector<BasePoint> points;
  bool finite = true;
  long accounted_length = 0;
  /// Unresolved eliminant factors when fewer than 8 points were accounted.
  std::vector<UniPoly> residual;
};

/// det(l A1 + m A2 + n A3) in the variables (l, m, n).
TernaryForm discriminant(const QuadricNet& net);

int quadric_rank(const Quadric4& q);

/// Order-independent sort key for points.
bool point_less(const Point3& a, const Point3& b);

/// The three generators localized at p (chart of the first nonzero
/// coordinate, translated to the origin).
std::vector<MultiPoly> localize_net(const QuadricNet& net, const Point3& p);

BaseLocusReport base_locus(const QuadricNet& net, int cap = kBaseLocusCap);

bool is_good_net(const QuadricNet& net, int cap = kDefaultLocalCap);
QuarticVerdict decide_net_stability(const QuadricNet& net, int cap = kDefaultLocalCap);

/// A_i -> g^T A_i g, i.e. Q_i(x) -> Q_i(g x). Throws SingularMatrix.
QuadricNet net_congruence_transform(const QuadricNet& net, const ScalarMatrix& g);

/// The net of quadrics through seven points, when they impose independent
/// conditions. Throws MathError(Degenerate) otherwise.
QuadricNet net_through_points(const std::vector<std::array<Rational, 4>>& points);

}  // namespace quadnet
