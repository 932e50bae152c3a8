#include "quadnet/gale/gale.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "quadnet/algebra/elimination.hpp"
#include "quadnet/algebra/unipoly.hpp"
#include "quadnet/error.hpp"

namespace quadnet {

ScalarMatrix projection_frame(const Point3& p) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    if (!p.c[i].is_rational()) throw MathError(ErrorKind::Unsupported, "projection point must be rational");
    if (abs(p.c[i].as_rational()) > abs(p.c[k].as_rational())) k = i;
  }
  if (!p.c[0].is_rational()) throw MathError(ErrorKind::Unsupported, "projection point must be rational");
  ScalarMatrix m(4, 4);
  std::size_t col = 0;
  for (std::size_t i = 0; i < 4; ++i)
    if (i != k) m(i, col++) = Scalar(1);
  for (std::size_t i = 0; i < 4; ++i) m(i, 3) = p.c[i];
  return m;
}

namespace {

std::vector<MultiPoly> frame_images(const ScalarMatrix& m) {
  std::vector<MultiPoly> img;
  for (std::size_t i = 0; i < 4; ++i) {
    MultiPoly r(4);
    for (std::size_t j = 0; j < 4; ++j)
      if (!m(i, j).is_zero()) r += MultiPoly::variable(4, j) * m(i, j);
    img.push_back(r);
  }
  return img;
}

/// Drops w from a polynomial that does not involve it.
MultiPoly to_plane(const MultiPoly& f) {
  MultiPoly out(3);
  for (const auto& [m, c] : f.terms()) {
    Monomial n;
    for (std::size_t i = 0; i < 3; ++i) n.e[i] = m.e[i];
    out.add_term(n, c);
  }
  return out;
}

bool independent(const std::array<MultiPoly, 3>& forms) {
  auto mons = monomials_of_degree(3, 3);
  ScalarMatrix m(3, mons.size());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < mons.size(); ++j) m(i, j) = forms[i].coeff(mons[j]);
  return rank(m) == 3;
}

}  // namespace

PointDecomposition decompose_at_point(const MultiPoly& quadric, const ScalarMatrix& frame) {
  auto img = frame_images(frame);
  MultiPoly moved = quadric.compose(img);
  auto co = moved.coefficients_in(3);
  if (co.size() > 2 && !co[2].is_zero())
    throw MathError(ErrorKind::PointNotOnQuadric, "quadric does not vanish at the projection point");
  PointDecomposition d{MultiPoly(3), MultiPoly(3)};
  if (co.size() > 1) d.l = to_plane(co[1]);
  if (!co.empty()) d.q = to_plane(co[0]);
  return d;
}

CubicNet gale_transform(const QuadricNet& net, const Point3& p) {
  CubicNet g;
  g.point = p;
  g.frame = projection_frame(p);
  auto forms = net.forms();
  for (std::size_t i = 0; i < 3; ++i) g.parts[i] = decompose_at_point(forms[i], g.frame);
  const std::array<std::pair<std::size_t, std::size_t>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (std::size_t k = 0; k < 3; ++k) {
    auto [i, j] = pairs[k];
    g.cubics[k] = g.parts[i].l * g.parts[j].q - g.parts[j].l * g.parts[i].q;
    if (g.cubics[k].is_zero() || g.cubics[k].total_degree() != 3)
      throw MathError(ErrorKind::DegenerateGale, "cubic C" + std::to_string(i + 1) + std::to_string(j + 1) + " vanishes");
  }
  if (!independent(g.cubics)) throw MathError(ErrorKind::DegenerateGale, "cubics span less than a net");
  return g;
}

bool gale_syzygy_holds(const CubicNet& g) {
  const auto& p = g.parts;
  return (p[0].l * g.cubics[2] - p[1].l * g.cubics[1] + p[2].l * g.cubics[0]).is_zero();
}

GaleVerification verify_gale(const QuadricNet& net, const Point3& p, int cap) {
  CubicNet g = gale_transform(net, p);
  BaseLocusReport bl = base_locus(net, cap);
  if (!bl.finite) throw MathError(ErrorKind::Degenerate, "base locus is not finite");
  ScalarMatrix inv = inverse(g.frame);
  GaleVerification out;
  out.syzygy = gale_syzygy_holds(g);
  out.accounted = bl.accounted_length - 1;
  for (const auto& bp : bl.points) {
    if (bp.point == p) continue;
    std::array<Scalar, 3> u{};
    for (std::size_t i = 0; i < 3; ++i) {
      Scalar s;
      for (std::size_t j = 0; j < 4; ++j) s += inv(i, j) * bp.point.c[j];
      u[i] = s;
    }
    PlanePoint img = PlanePoint::make(u[0], u[1], u[2]);
    bool zero = true;
    for (const auto& c : g.cubics)
      if (!c.evaluate(std::span<const Scalar>(img.c.data(), 3)).is_zero()) zero = false;
    out.all_common_zeros = out.all_common_zeros && zero;
    out.projected.push_back({bp, img, zero});
  }
  return out;
}

std::vector<PlanePoint> common_rational_zeros(const std::vector<MultiPoly>& forms) {
  std::vector<MultiPoly> fs;
  for (const auto& f : forms)
    if (!f.is_zero()) fs.push_back(f);
  std::vector<PlanePoint> pts;
  if (fs.empty()) return pts;
  const std::array<std::array<long, 2>, 4> centers{{{3, -2}, {-5, 7}, {2, 11}, {-7, -3}}};
  for (const auto& [a, b] : centers) {
    std::array<Scalar, 3> ctr{Scalar(a), Scalar(b), Scalar(1)};
    bool on_all = true, on_any = false;
    for (const auto& f : fs) {
      bool z = f.evaluate(std::span<const Scalar>(ctr.data(), 3)).is_zero();
      on_any = on_any || z;
      on_all = on_all && z;
    }
    if (on_any) continue;
    std::vector<MultiPoly> img{MultiPoly::variable(3, 0) + MultiPoly::variable(3, 2) * Scalar(a),
                               MultiPoly::variable(3, 1) + MultiPoly::variable(3, 2) * Scalar(b),
                               MultiPoly::variable(3, 2)};
    std::vector<MultiPoly> moved;
    for (const auto& f : fs) moved.push_back(f.compose(img));
    MultiPoly r(3);
    bool have = false;
    if (moved.size() == 1) return pts;  // a single curve has infinitely many zeros
    for (std::size_t i = 0; i < moved.size(); ++i)
      for (std::size_t j = i + 1; j < moved.size(); ++j) {
        MultiPoly res = resultant(moved[i], moved[j], 2);
        r = have ? gcd_multivar(r, res) : res;
        have = true;
      }
    if (r.is_zero()) return pts;  // common component
    // binary form in (x, y): roots (t:1) and possibly (1:0)
    std::vector<std::array<Scalar, 2>> xy;
    UniPoly rt = to_unipoly(r.substitute(1, Scalar(1)), 0);
    for (const auto& t : rational_roots(rt)) xy.push_back({Scalar(t), Scalar(1)});
    if (rt.degree() < r.total_degree()) xy.push_back({Scalar(1), Scalar(0)});
    for (const auto& [x0, y0] : xy) {
      UniPoly gz;
      for (const auto& f : moved) gz = gcd(gz, to_unipoly(f.substitute(0, x0).substitute(1, y0), 2));
      std::vector<Scalar> zs;
      if (gz.is_zero()) continue;
      for (const auto& z : rational_roots(gz)) zs.push_back(Scalar(z));
      for (const auto& z0 : zs) {
        std::array<Scalar, 3> q{x0 + Scalar(a) * z0, y0 + Scalar(b) * z0, z0};
        bool ok = true;
        for (const auto& f : fs)
          if (!f.evaluate(std::span<const Scalar>(q.data(), 3)).is_zero()) ok = false;
        PlanePoint pp = PlanePoint::make(q[0], q[1], q[2]);
        if (ok && std::find(pts.begin(), pts.end(), pp) == pts.end()) pts.push_back(pp);
      }
    }
    // the point (0:0:1) in moved coordinates is the center itself, excluded above
    return pts;
  }
  return pts;
}

const char* to_string(CubicVerdict v) {
  switch (v) {
    case CubicVerdict::Stable: return "Stable";
    case CubicVerdict::StrictlySemistable: return "StrictlySemistable";
    case CubicVerdict::Unstable: return "Unstable";
    case CubicVerdict::Undecided: return "Undecided";
  }
  return "?";
}

namespace {

std::vector<ScalarMatrix> frame_library(const std::vector<PlanePoint>& zeros) {
  std::vector<ScalarMatrix> frames;
  std::array<std::size_t, 3> perm{0, 1, 2};
  do {
    ScalarMatrix g(3, 3);
    for (std::size_t i = 0; i < 3; ++i) g(perm[i], i) = Scalar(1);
    frames.push_back(g);
  } while (std::next_permutation(perm.begin(), perm.end()));
  auto complete = [&](std::vector<std::array<Scalar, 3>> cols) {
    for (std::size_t e = 0; e < 3 && cols.size() < 3; ++e) {
      std::array<Scalar, 3> v{0, 0, 0};
      v[e] = 1;
      auto trial = cols;
      trial.push_back(v);
      ScalarMatrix m(3, trial.size());
      for (std::size_t j = 0; j < trial.size(); ++j)
        for (std::size_t i = 0; i < 3; ++i) m(i, j) = trial[j][i];
      if (rank(m) == trial.size()) cols = trial;
    }
    if (cols.size() < 3) return;
    // every ordering of the columns, so the zeros can land on each coordinate point
    std::array<std::size_t, 3> p{0, 1, 2};
    do {
      ScalarMatrix g(3, 3);
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i) g(i, j) = cols[p[j]][i];
      frames.push_back(g);
    } while (std::next_permutation(p.begin(), p.end()));
  };
  for (const auto& z : zeros) complete({z.c});
  for (std::size_t i = 0; i < zeros.size(); ++i)
    for (std::size_t j = i + 1; j < zeros.size(); ++j) complete({zeros[i].c, zeros[j].c});
  return frames;
}

}  // namespace

CubicNetStability cubic_net_stability(const std::array<MultiPoly, 3>& cubics, const std::optional<MultiPoly>& provenance,
                                      int cap) {
  LinearSystemOfForms system({cubics[0], cubics[1], cubics[2]});
  if (system.nvars() != 3 || system.degree() != 3)
    throw MathError(ErrorKind::InvalidArgument, "a net of plane cubics is required");
  CubicNetStability out;
  if (provenance) {
    if (!is_reduced(*provenance) || !has_only_ade(*provenance, cap).first)
      throw MathError(ErrorKind::ProvenanceInvalid, "discriminant is not reduced with only ADE singularities");
    auto v = decide_quartic_stability(*provenance, cap);
    out.route = "provenance";
    switch (v.status) {
      case Verdict::Stable: out.status = CubicVerdict::Stable; break;
      case Verdict::StrictlySemistable: out.status = CubicVerdict::StrictlySemistable; break;
      case Verdict::Unstable: out.status = CubicVerdict::Unstable; break;
    }
    return out;
  }
  out.route = "certificate-search";
  // primitive weight vectors only; the best certificate minimizes value / |lambda|
  std::vector<OneParamSubgroup> lambdas;
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b) {
      long c = -a - b;
      if (c < -6 || c > 6 || (a == 0 && b == 0)) continue;
      if (std::gcd(std::gcd(std::labs(a), std::labs(b)), std::labs(c)) != 1) continue;
      lambdas.push_back(OneParamSubgroup({a, b, c}));
    }
  auto norm2 = [](const OneParamSubgroup& l) {
    long n = 0;
    for (long r : l.weights()) n += r * r;
    return n;
  };
  for (const auto& g : frame_library(common_rational_zeros({cubics[0], cubics[1], cubics[2]}))) {
    LinearSystemOfForms moved = act(g, system);
    for (const auto& l : lambdas) {
      long v = pivot_weight_sum(moved, l);
      if (v >= 0) continue;
      bool better = !out.certificate ||
                    v * v * norm2(out.certificate->lambda) > out.value * out.value * norm2(l);
      if (better) {
        out.status = CubicVerdict::Unstable;
        out.certificate = Certificate{g, l};
        out.value = v;
      }
    }
  }
  return out;
}

}  // namespace quadnet
