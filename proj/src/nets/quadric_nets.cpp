#include "quadnet/nets/quadric_nets.hpp"

#include <algorithm>
#include <map>

#include "quadnet/algebra/elimination.hpp"
#include "quadnet/algebra/local_algebra.hpp"
#include "quadnet/error.hpp"

namespace quadnet {

Quadric4::Quadric4(ScalarMatrix a) : a_(std::move(a)) {
  if (a_.rows() != 4 || a_.cols() != 4) throw MathError(ErrorKind::LengthMismatch, "quadric matrix must be 4x4");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (!a_(i, j).is_rational()) throw MathError(ErrorKind::Unsupported, "quadric entries must be rational");
      if (a_(i, j) != a_(j, i)) throw MathError(ErrorKind::InvalidArgument, "quadric matrix must be symmetric");
    }
}

Quadric4 Quadric4::from_form(const MultiPoly& q) {
  if (q.nvars() != 4) throw MathError(ErrorKind::InvalidArgument, "quadric needs 4 variables");
  if (!q.is_zero() && (q.total_degree() != 2 || !q.is_homogeneous()))
    throw MathError(ErrorKind::InvalidArgument, "quadric must be a quadratic form");
  ScalarMatrix a(4, 4);
  for (const auto& [m, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 4; ++i)
      for (int k = 0; k < m.e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      a(idx[0], idx[0]) = c;
    } else {
      a(idx[0], idx[1]) = c / Scalar(2);
      a(idx[1], idx[0]) = c / Scalar(2);
    }
  }
  return Quadric4(std::move(a));
}

MultiPoly Quadric4::form() const {
  MultiPoly q(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      Monomial m;
      ++m.e[i];
      ++m.e[j];
      q.add_term(m, i == j ? a_(i, i) : Scalar(2) * a_(i, j));
    }
  return q;
}

bool Quadric4::is_zero() const {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!a_(i, j).is_zero()) return false;
  return true;
}

QuadricNet::QuadricNet(Quadric4 q1, Quadric4 q2, Quadric4 q3) : q_{std::move(q1), std::move(q2), std::move(q3)} {
  ScalarMatrix m(3, 10);
  for (std::size_t k = 0; k < 3; ++k) {
    std::size_t col = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) m(k, col++) = q_[k].matrix()(i, j);
  }
  if (rank(m) != 3) throw MathError(ErrorKind::Degenerate, "net generators are linearly dependent");
}

QuadricNet QuadricNet::from_forms(const MultiPoly& q1, const MultiPoly& q2, const MultiPoly& q3) {
  return QuadricNet(Quadric4::from_form(q1), Quadric4::from_form(q2), Quadric4::from_form(q3));
}

std::array<MultiPoly, 3> QuadricNet::forms() const { return {q_[0].form(), q_[1].form(), q_[2].form()}; }

Point3 Point3::make(const Scalar& x, const Scalar& y, const Scalar& z, const Scalar& w) {
  std::array<Scalar, 4> c{x, y, z, w};
  std::size_t k = 0;
  while (k < 4 && c[k].is_zero()) ++k;
  if (k == 4) throw MathError(ErrorKind::ZeroInput, "point with all coordinates zero");
  Scalar inv = c[k].inverse();
  for (auto& v : c) v *= inv;
  return Point3{c};
}

std::string Point3::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) s += ":";
    s += c[i].to_string();
  }
  return s + ")";
}

bool point_less(const Point3& a, const Point3& b) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (canonical_less(a.c[i], b.c[i])) return true;
    if (canonical_less(b.c[i], a.c[i])) return false;
  }
  return false;
}

TernaryForm discriminant(const QuadricNet& net) {
  PolyMatrix m(4, 4, MultiPoly(3));
  for (std::size_t k = 0; k < 3; ++k) {
    MultiPoly var = MultiPoly::variable(3, k);
    const auto& a = net.generators()[k].matrix();
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (!a(i, j).is_zero()) m(i, j) += var * a(i, j);
  }
  return TernaryForm(det_poly_matrix(m));
}

int quadric_rank(const Quadric4& q) {
  if (q.is_zero()) throw MathError(ErrorKind::ZeroInput, "rank of the zero quadric");
  return static_cast<int>(rank(q.matrix()));
}

std::vector<MultiPoly> localize_net(const QuadricNet& net, const Point3& p) {
  std::size_t k = 0;
  while (p.c[k].is_zero()) ++k;
  std::vector<MultiPoly> images;
  std::size_t next = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i == k)
      images.push_back(MultiPoly::constant(3, Scalar(1)));
    else
      images.push_back(MultiPoly::variable(3, next++) + MultiPoly::constant(3, p.c[i]));
  }
  std::vector<MultiPoly> out;
  for (const auto& f : net.forms()) out.push_back(f.compose(images));
  return out;
}

namespace {

/// Coordinate changes u = T v tried in order; integer entries, invertible.
constexpr int kCoordinateChanges[][6] = {
    {2, -3, 5, 1, -2, 3}, {-1, 4, 2, 3, 1, -2}, {3, 1, -4, -2, 5, 1}, {5, -2, 1, 2, 3, -3}, {-4, 7, 3, 1, -1, 2}};

ScalarMatrix coordinate_change(const int (&p)[6]) {
  ScalarMatrix t = identity_matrix(4);
  t(0, 3) = Scalar(p[0]);
  t(1, 3) = Scalar(p[1]);
  t(2, 3) = Scalar(p[2]);
  t(3, 0) = Scalar(p[3]);
  t(3, 1) = Scalar(p[4]);
  t(3, 2) = Scalar(p[5]);
  return t;
}

MultiPoly apply_linear(const MultiPoly& f, const ScalarMatrix& t) {
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < 4; ++i) {
    MultiPoly row(4);
    for (std::size_t j = 0; j < 4; ++j)
      if (!t(i, j).is_zero()) row += MultiPoly::variable(4, j) * t(i, j);
    images.push_back(row);
  }
  return f.compose(images);
}

MultiPoly safe_resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  if (f.is_zero() || g.is_zero()) return MultiPoly(f.nvars());
  if (f.degree_in(var) == 0 && g.degree_in(var) == 0) return MultiPoly(f.nvars());
  MultiPoly r = resultant(f, g, var);
  return r.is_zero() ? r : r.primitive();
}

struct Attempt {
  std::vector<Point3> points;
  std::vector<UniPoly> residual;
  bool positive_dimensional = false;
};

bool compatible(const std::array<Scalar, 3>& v) {
  long d = 0;
  for (const auto& s : v) {
    if (s.is_rational()) continue;
    if (d != 0 && s.radicand() != d) return false;
    d = s.radicand();
  }
  return true;
}

Attempt attempt_with(const std::array<MultiPoly, 3>& forms, const ScalarMatrix& t) {
  Attempt out;
  // Independent combinations of the generators, moved and restricted to w = 1.
  constexpr int kMix[3][3] = {{1, 2, 3}, {1, -1, 5}, {2, 3, -1}};
  std::array<MultiPoly, 3> g;
  for (std::size_t i = 0; i < 3; ++i) {
    MultiPoly s(4);
    for (std::size_t j = 0; j < 3; ++j) s += forms[j] * Scalar(kMix[i][j]);
    g[i] = apply_linear(s, t).substitute(3, Scalar(1)).primitive();
  }
  std::array<std::vector<Scalar>, 3> coords;
  for (std::size_t c = 0; c < 3; ++c) {
    std::size_t a = (c + 1) % 3, b = (c + 2) % 3;
    MultiPoly e(4);
    auto route = [&](const MultiPoly& p, const MultiPoly& q, const MultiPoly& r, std::size_t first, std::size_t second) {
      MultiPoly res = safe_resultant(safe_resultant(p, q, first), safe_resultant(p, r, first), second);
      if (!res.is_zero()) e = gcd_multivar(e, res);
    };
    route(g[0], g[1], g[2], a, b);
    route(g[1], g[2], g[0], a, b);
    route(g[0], g[1], g[2], b, a);
    route(g[2], g[0], g[1], b, a);
    if (e.is_zero()) {
      out.positive_dimensional = true;
      return out;
    }
    UniPoly u = to_unipoly(e, c);
    if (u.degree() <= 0) return out;  // no common zeros in this chart
    FieldRoots fr = roots_up_to_quadratic(u);
    coords[c] = fr.roots;
    for (auto& r : fr.residual) out.residual.push_back(r);
  }
  for (const auto& x : coords[0])
    for (const auto& y : coords[1])
      for (const auto& z : coords[2]) {
        if (!compatible({x, y, z})) continue;
        std::array<Scalar, 4> v{x, y, z, Scalar(1)};
        bool zero = true;
        for (const auto& q : g) {
          if (!q.evaluate(v).is_zero()) {
            zero = false;
            break;
          }
        }
        if (!zero) continue;
        std::array<Scalar, 4> u{};
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = 0; j < 4; ++j) u[i] += t(i, j) * v[j];
        Point3 p = Point3::make(u);
        if (std::find(out.points.begin(), out.points.end(), p) == out.points.end()) out.points.push_back(p);
      }
  return out;
}

}  // namespace

BaseLocusReport base_locus(const QuadricNet& net, int cap) {
  auto forms = net.forms();
  BaseLocusReport best;
  bool have = false;
  int positive = 0;
  for (const auto& params : kCoordinateChanges) {
    ScalarMatrix t = coordinate_change(params);
    if (determinant(t).is_zero()) continue;
    Attempt a = attempt_with(forms, t);
    if (a.positive_dimensional) {
      ++positive;
      continue;
    }
    BaseLocusReport r;
    for (const auto& p : a.points) {
      long m = local_algebra_dimension(localize_net(net, p), cap);
      r.points.push_back({p, m});
      r.accounted_length += m;
    }
    if (r.accounted_length < 8) r.residual = a.residual;
    std::sort(r.points.begin(), r.points.end(),
              [](const BasePoint& x, const BasePoint& y) { return point_less(x.point, y.point); });
    if (!have || r.accounted_length > best.accounted_length) {
      best = r;
      have = true;
    }
    if (best.accounted_length == 8) break;
  }
  if (!have) {
    if (positive > 0) {
      BaseLocusReport r;
      r.finite = false;
      return r;
    }
    throw MathError(ErrorKind::Degenerate, "no usable coordinate change");
  }
  return best;
}

bool is_good_net(const QuadricNet& net, int cap) {
  TernaryForm d = discriminant(net);
  if (d.is_zero()) return false;
  return has_only_ade(d.poly(), cap).first;
}

QuarticVerdict decide_net_stability(const QuadricNet& net, int cap) {
  TernaryForm d = discriminant(net);
  if (d.is_zero()) {
    QuarticVerdict v;
    v.status = Verdict::Unstable;
    v.reasons.push_back("discriminant-identically-zero");
    return v;
  }
  return decide_quartic_stability(d.poly(), cap);
}

QuadricNet net_congruence_transform(const QuadricNet& net, const ScalarMatrix& g) {
  if (g.rows() != 4 || g.cols() != 4) throw MathError(ErrorKind::LengthMismatch, "transform must be 4x4");
  if (determinant(g).is_zero()) throw MathError(ErrorKind::SingularMatrix, "transform is singular");
  ScalarMatrix gt = transpose(g);
  const auto& q = net.generators();
  return QuadricNet(Quadric4(gt * q[0].matrix() * g), Quadric4(gt * q[1].matrix() * g), Quadric4(gt * q[2].matrix() * g));
}

QuadricNet net_through_points(const std::vector<std::array<Rational, 4>>& points) {
  auto monos = monomials_of_degree(4, 2);
  ScalarMatrix m(points.size(), monos.size());
  for (std::size_t r = 0; r < points.size(); ++r)
    for (std::size_t c = 0; c < monos.size(); ++c) {
      Rational v = 1;
      for (std::size_t i = 0; i < 4; ++i)
        for (int k = 0; k < monos[c].e[i]; ++k) v *= points[r][i];
      m(r, c) = Scalar(v);
    }
  auto ker = kernel(m);
  if (ker.size() != 3) throw MathError(ErrorKind::Degenerate, "points do not impose independent conditions on quadrics");
  std::array<MultiPoly, 3> f;
  for (std::size_t k = 0; k < 3; ++k) {
    f[k] = MultiPoly(4);
    for (std::size_t c = 0; c < monos.size(); ++c) f[k].add_term(monos[c], ker[k][c]);
    f[k] = f[k].primitive();
  }
  return QuadricNet::from_forms(f[0], f[1], f[2]);
}

}  // namespace quadnet
