#include "quadnet/curves/plane_curves.hpp"

#include <algorithm>
#include <sstream>

#include "quadnet/algebra/elimination.hpp"
#include "quadnet/algebra/matrix.hpp"
#include "quadnet/error.hpp"

namespace quadnet {

TernaryForm::TernaryForm(MultiPoly p) : p_(std::move(p)) {
  if (p_.nvars() != 3) throw MathError(ErrorKind::InvalidArgument, "ternary form needs 3 variables");
  if (!p_.is_zero() && !p_.is_homogeneous()) throw MathError(ErrorKind::InvalidArgument, "ternary form must be homogeneous");
}

PlanePoint PlanePoint::make(const Scalar& x, const Scalar& y, const Scalar& z) {
  std::array<Scalar, 3> c{x, y, z};
  std::size_t k = 0;
  while (k < 3 && c[k].is_zero()) ++k;
  if (k == 3) throw MathError(ErrorKind::ZeroInput, "point with all coordinates zero");
  Scalar inv = c[k].inverse();
  for (auto& v : c) v *= inv;
  return PlanePoint{c};
}

std::string PlanePoint::to_string() const {
  return "(" + c[0].to_string() + ":" + c[1].to_string() + ":" + c[2].to_string() + ")";
}

std::string SingularityType::to_string() const {
  switch (kind) {
    case SingularityKind::A:
      return "A" + std::to_string(n);
    case SingularityKind::D:
      return "D" + std::to_string(n);
    case SingularityKind::E:
      return "E" + std::to_string(n);
    case SingularityKind::NonADE:
      break;
  }
  switch (reason) {
    case NonADEReason::MultiplicityAtLeast4:
      return "NonADE(MultiplicityAtLeast4)";
    case NonADEReason::TripleLineBadMilnor:
      return "NonADE(TripleLineBadMilnor)";
    case NonADEReason::NotIsolated:
      return "NonADE(NotIsolated)";
    case NonADEReason::None:
      break;
  }
  return "NonADE";
}

const char* to_string(TangentShape s) {
  switch (s) {
    case TangentShape::DistinctLines:
      return "distinct-lines";
    case TangentShape::DoubleLine:
      return "double-line";
    case TangentShape::DoublePlusSimple:
      return "double-plus-simple";
    case TangentShape::TripleLine:
      return "triple-line";
    case TangentShape::Other:
      return "other";
  }
  return "other";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable:
      return "Stable";
    case Verdict::StrictlySemistable:
      return "StrictlySemistable";
    case Verdict::Unstable:
      return "Unstable";
  }
  return "Unstable";
}

namespace {

std::size_t chart_of(const PlanePoint& p) {
  std::size_t k = 0;
  while (p.c[k].is_zero()) ++k;
  return k;
}

void require_ternary(const MultiPoly& F) {
  if (F.nvars() != 3) throw MathError(ErrorKind::InvalidArgument, "expected a form in 3 variables");
  if (F.is_zero()) throw MathError(ErrorKind::ZeroInput, "zero form");
}

}  // namespace

MultiPoly localize(const MultiPoly& F, const PlanePoint& p) {
  std::size_t k = chart_of(p);
  std::vector<MultiPoly> images;
  std::size_t next = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == k) {
      images.push_back(MultiPoly::constant(2, Scalar(1)));
    } else {
      images.push_back(MultiPoly::variable(2, next++) + MultiPoly::constant(2, p.c[i]));
    }
  }
  return F.compose(images);
}

bool is_reduced(const MultiPoly& F) {
  require_ternary(F);
  return is_squarefree(F);
}

namespace {

/// Generic projection centers (a, b, 1), tried in order.
constexpr int kCenters[][2] = {{3, -2}, {-5, 7}, {2, 11}, {-7, -3}, {13, 5}, {1, 17}};

std::vector<MultiPoly> gradient(const MultiPoly& F) { return {F.derivative(0), F.derivative(1), F.derivative(2)}; }

bool is_singular_at(const MultiPoly& F, const PlanePoint& p) {
  for (const auto& g : gradient(F))
    if (!g.evaluate(p.c).is_zero()) return false;
  return true;
}

void add_point(std::vector<PlanePoint>& pts, const PlanePoint& p) {
  if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
}

/// Singular points via projection from the center (a:b:1).
SingularLocus singular_points_from(const MultiPoly& F, int a, int b) {
  SingularLocus out;
  // F'(x, y, z) = F(x + a z, y + b z, z).
  MultiPoly x = MultiPoly::variable(3, 0), y = MultiPoly::variable(3, 1), z = MultiPoly::variable(3, 2);
  std::vector<MultiPoly> images{x + Scalar(a) * z, y + Scalar(b) * z, z};
  MultiPoly G = F.compose(images);
  auto grad = gradient(G);
  MultiPoly R(3);
  std::vector<MultiPoly> partners{grad[0], grad[1], grad[0] + Scalar(3) * grad[1]};
  for (const auto& other : partners) {
    if (other.is_zero()) continue;
    MultiPoly r = resultant(grad[2], other, 2);
    R = gcd_multivar(R, r);
  }
  if (R.is_zero()) throw MathError(ErrorKind::Degenerate, "gradient eliminants vanish for a reduced form");
  // Roots of the binary form R(x, y): (t : 1) from R(t, 1) and (1 : 0) if deg drops.
  UniPoly affine = to_unipoly(R.substitute(1, Scalar(1)), 0);
  std::vector<std::pair<Scalar, Scalar>> proj;
  if (affine.degree() < R.total_degree()) proj.push_back({Scalar(1), Scalar(0)});
  if (affine.degree() > 0) {
    FieldRoots fr = roots_up_to_quadratic(affine);
    for (const auto& t : fr.roots) proj.push_back({t, Scalar(1)});
    out.residual = fr.residual;
  }
  for (const auto& [x0, y0] : proj) {
    UniPoly g;
    for (const auto& d : grad) {
      MultiPoly s = d.substitute(0, x0).substitute(1, y0);
      g = gcd(g, to_unipoly(s, 2));
    }
    if (g.is_zero()) throw MathError(ErrorKind::Degenerate, "projection center is singular");
    if (g.degree() < 1) continue;
    FieldRoots zr = roots_up_to_quadratic(g);
    for (const auto& z0 : zr.roots) {
      PlanePoint p = PlanePoint::make(x0 + Scalar(a) * z0, y0 + Scalar(b) * z0, z0);
      if (is_singular_at(F, p)) add_point(out.points, p);
    }
    for (auto& r : zr.residual) out.residual.push_back(r);
  }
  return out;
}

int residual_degree(const SingularLocus& s) {
  int d = 0;
  for (const auto& r : s.residual) d += r.degree();
  return d;
}

}  // namespace

SingularLocus singular_points(const MultiPoly& F) {
  require_ternary(F);
  if (!F.is_homogeneous()) throw MathError(ErrorKind::InvalidArgument, "form must be homogeneous");
  SingularLocus best;
  if (!is_reduced(F)) {
    best.non_isolated = true;
    return best;
  }
  if (F.total_degree() <= 1) return best;
  bool have = false;
  for (const auto& c : kCenters) {
    std::array<Scalar, 3> center{Scalar(c[0]), Scalar(c[1]), Scalar(1)};
    if (F.evaluate(center).is_zero()) continue;
    SingularLocus s = singular_points_from(F, c[0], c[1]);
    if (!have) {
      best = s;
      have = true;
    } else {
      for (const auto& p : s.points) add_point(best.points, p);
      if (residual_degree(s) < residual_degree(best)) best.residual = s.residual;
    }
    if (best.residual.empty()) break;
  }
  if (!have) throw MathError(ErrorKind::Degenerate, "no admissible projection center");
  std::sort(best.points.begin(), best.points.end(), [](const PlanePoint& p, const PlanePoint& q) {
    for (int i = 0; i < 3; ++i) {
      if (canonical_less(p.c[i], q.c[i])) return true;
      if (canonical_less(q.c[i], p.c[i])) return false;
    }
    return false;
  });
  return best;
}

int multiplicity_at(const MultiPoly& F, const PlanePoint& p) {
  require_ternary(F);
  MultiPoly f = localize(F, p);
  return f.low_degree();
}

std::optional<long> milnor_number(const MultiPoly& F, const PlanePoint& p, int cap) {
  require_ternary(F);
  if (F.is_rational()) {
    for (const auto& part : squarefree_decomposition(F))
      if (part.multiplicity > 1 && part.factor.evaluate(p.c).is_zero()) return std::nullopt;
  }
  MultiPoly f = localize(F, p);
  return local_algebra_dimension({f.derivative(0), f.derivative(1)}, cap);
}

TangentCone tangent_cone(const MultiPoly& F, const PlanePoint& p) {
  require_ternary(F);
  MultiPoly f = localize(F, p);
  int m = f.low_degree();
  MultiPoly cone = f.homogeneous_part(m);
  // Multiplicities of the linear factors over the algebraic closure.
  UniPoly affine = to_unipoly(cone.substitute(1, Scalar(1)), 0);
  std::vector<int> mults;
  int at_infinity = m - affine.degree();
  if (at_infinity > 0) mults.push_back(at_infinity);
  if (affine.degree() > 0)
    for (const auto& part : squarefree_decomposition(affine))
      for (int k = 0; k < part.factor.degree(); ++k) mults.push_back(part.multiplicity);
  std::sort(mults.rbegin(), mults.rend());
  TangentShape shape = TangentShape::Other;
  if (std::all_of(mults.begin(), mults.end(), [](int v) { return v == 1; }))
    shape = TangentShape::DistinctLines;
  else if (mults == std::vector<int>{2})
    shape = TangentShape::DoubleLine;
  else if (mults == std::vector<int>{2, 1})
    shape = TangentShape::DoublePlusSimple;
  else if (mults == std::vector<int>{3})
    shape = TangentShape::TripleLine;
  return {cone, shape};
}

SingularityRecord classify_singularity(const MultiPoly& F, const PlanePoint& p, int cap) {
  SingularityRecord rec;
  rec.point = p;
  rec.multiplicity = multiplicity_at(F, p);
  if (rec.multiplicity < 2) throw MathError(ErrorKind::InvalidArgument, "point is not singular: " + p.to_string());
  if (rec.multiplicity >= 4) {
    rec.type = {SingularityKind::NonADE, 0, NonADEReason::MultiplicityAtLeast4};
    try {
      rec.milnor = milnor_number(F, p, cap);
    } catch (const MathError& e) {
      if (e.kind() != ErrorKind::NotStabilized) throw;
    }
    return rec;
  }
  rec.milnor = milnor_number(F, p, cap);
  if (!rec.milnor) {
    rec.type = {SingularityKind::NonADE, 0, NonADEReason::NotIsolated};
    return rec;
  }
  int mu = static_cast<int>(*rec.milnor);
  if (rec.multiplicity == 2) {
    rec.type = {SingularityKind::A, mu, NonADEReason::None};
    return rec;
  }
  TangentShape shape = tangent_cone(F, p).shape;
  if (shape == TangentShape::TripleLine) {
    if (mu >= 6 && mu <= 8)
      rec.type = {SingularityKind::E, mu, NonADEReason::None};
    else
      rec.type = {SingularityKind::NonADE, 0, NonADEReason::TripleLineBadMilnor};
  } else {
    rec.type = {SingularityKind::D, mu, NonADEReason::None};
  }
  return rec;
}

namespace {

std::string residual_message(const std::vector<UniPoly>& residual) {
  std::string msg = "singular points over higher-degree extensions; eliminant factors:";
  for (const auto& r : residual) msg += " " + r.to_string();
  return msg;
}

}  // namespace

std::pair<bool, std::vector<SingularityRecord>> has_only_ade(const MultiPoly& F, int cap) {
  require_ternary(F);
  if (!is_reduced(F)) return {false, {}};
  SingularLocus locus = singular_points(F);
  if (!locus.residual.empty()) throw MathError(ErrorKind::UnclassifiedExtensionPoint, residual_message(locus.residual));
  std::vector<SingularityRecord> recs;
  bool ok = true;
  for (const auto& p : locus.points) {
    recs.push_back(classify_singularity(F, p, cap));
    ok = ok && recs.back().type.is_ade();
  }
  return {ok, recs};
}

int ternary_quadric_rank(const MultiPoly& q) {
  if (q.nvars() != 3 || q.total_degree() != 2 || !q.is_homogeneous())
    throw MathError(ErrorKind::InvalidArgument, "expected a ternary quadratic form");
  ScalarMatrix m(3, 3);
  for (const auto& [mono, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 3; ++i)
      for (int k = 0; k < mono.e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      m(idx[0], idx[0]) = c;
    } else {
      m(idx[0], idx[1]) = c / Scalar(2);
      m(idx[1], idx[0]) = c / Scalar(2);
    }
  }
  return static_cast<int>(rank(m));
}

bool double_smooth_conic_test(const MultiPoly& F) {
  require_ternary(F);
  if (F.total_degree() != 4) return false;
  auto parts = squarefree_decomposition(F);
  if (parts.size() != 1 || parts[0].multiplicity != 2 || parts[0].factor.total_degree() != 2) return false;
  return ternary_quadric_rank(parts[0].factor) == 3;
}

int contact_order(const MultiPoly& C, const std::array<Scalar, 3>& line, const PlanePoint& p) {
  // A second point q on the line: line x e_j for a suitable j.
  std::array<Scalar, 3> q{};
  for (std::size_t j = 0; j < 3; ++j) {
    std::array<Scalar, 3> e{};
    e[j] = Scalar(1);
    std::array<Scalar, 3> cand{line[1] * e[2] - line[2] * e[1], line[2] * e[0] - line[0] * e[2],
                               line[0] * e[1] - line[1] * e[0]};
    bool zero = cand[0].is_zero() && cand[1].is_zero() && cand[2].is_zero();
    bool parallel = (cand[0] * p.c[1] - cand[1] * p.c[0]).is_zero() && (cand[0] * p.c[2] - cand[2] * p.c[0]).is_zero() &&
                    (cand[1] * p.c[2] - cand[2] * p.c[1]).is_zero();
    if (!zero && !parallel) {
      q = cand;
      break;
    }
  }
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < 3; ++i)
    images.push_back(MultiPoly::constant(1, p.c[i]) + MultiPoly::variable(1, 0) * q[i]);
  UniPoly restricted = to_unipoly(C.compose(images), 0);
  if (restricted.is_zero()) return -1;  // line contained in the curve
  return restricted.valuation();
}

bool inflectional_tangent_quartic_test(const MultiPoly& F, int cap) {
  require_ternary(F);
  if (F.total_degree() != 4) return false;
  SingularLocus locus = singular_points(F);
  for (const auto& p : locus.points) {
    if (multiplicity_at(F, p) != 2) continue;
    TangentCone tc = tangent_cone(F, p);
    if (tc.shape != TangentShape::DoubleLine) continue;
    // Cone (alpha u + beta v)^2; recover alpha:beta from the square.
    const MultiPoly& cone = tc.form;
    Scalar cuu = cone.coeff(Monomial{{2, 0}}), cuv = cone.coeff(Monomial{{1, 1}}), cvv = cone.coeff(Monomial{{0, 2}});
    Scalar alpha, beta;
    if (!cuu.is_zero()) {
      alpha = Scalar(2) * cuu;
      beta = cuv;
    } else {
      alpha = Scalar(0);
      beta = Scalar(1);
      (void)cvv;
    }
    // Global line: alpha (x_i - p_i x_k) + beta (x_j - p_j x_k).
    std::size_t k = chart_of(p);
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < 3; ++i)
      if (i != k) others.push_back(i);
    std::array<Scalar, 3> line{};
    line[others[0]] = alpha;
    line[others[1]] = beta;
    line[k] = -(alpha * p.c[others[0]] + beta * p.c[others[1]]);
    MultiPoly L(3);
    for (std::size_t i = 0; i < 3; ++i) L += MultiPoly::variable(3, i) * line[i];
    MultiPoly C;
    if (!try_divide(F, L, C)) continue;
    if (multiplicity_at(C, p) != 1) continue;
    if (contact_order(C, line, p) == 3) return true;
  }
  (void)cap;
  return false;
}

QuarticVerdict decide_quartic_stability(const MultiPoly& F, int cap) {
  QuarticVerdict v;
  if (F.is_zero()) {
    v.status = Verdict::Unstable;
    v.reasons.push_back("zero-form");
    return v;
  }
  require_ternary(F);
  if (F.total_degree() != 4 || !F.is_homogeneous()) throw MathError(ErrorKind::InvalidArgument, "expected a quartic form");
  if (!is_reduced(F)) {
    if (double_smooth_conic_test(F)) {
      v.status = Verdict::StrictlySemistable;
      v.reasons.push_back("double-smooth-conic");
    } else {
      v.status = Verdict::Unstable;
      v.reasons.push_back("non-reduced");
    }
    return v;
  }
  SingularLocus locus = singular_points(F);
  for (const auto& p : locus.points) v.singularities.push_back(classify_singularity(F, p, cap));
  bool triple = std::any_of(v.singularities.begin(), v.singularities.end(),
                            [](const SingularityRecord& r) { return r.multiplicity >= 3; });
  if (triple) {
    v.status = Verdict::Unstable;
    v.reasons.push_back("point-of-multiplicity-at-least-3");
    return v;
  }
  if (inflectional_tangent_quartic_test(F, cap)) {
    v.status = Verdict::Unstable;
    v.reasons.push_back("cubic-with-inflectional-tangent");
    return v;
  }
  if (!locus.residual.empty()) throw MathError(ErrorKind::UnclassifiedExtensionPoint, residual_message(locus.residual));
  bool mild = std::all_of(v.singularities.begin(), v.singularities.end(), [](const SingularityRecord& r) {
    return r.type.kind == SingularityKind::A && r.type.n <= 2;
  });
  if (mild) {
    v.status = Verdict::Stable;
    v.reasons.push_back(v.singularities.empty() ? "smooth" : "at-worst-A2");
    return v;
  }
  v.status = Verdict::StrictlySemistable;
  v.reasons.push_back("double-points-only");
  return v;
}

}  // namespace quadnet
