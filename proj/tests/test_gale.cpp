#include <doctest.h>

#include "quadnet/cli/corpus.hpp"
#include "quadnet/error.hpp"
#include "quadnet/gale/gale.hpp"
#include "support.hpp"

using namespace quadnet;
using namespace quadnet::test;

namespace {

Point3 pt(long a, long b, long c, long d) { return Point3::make(a, b, c, d); }

/// Random quadric through p: subtract a multiple of x_k^2 with p_k != 0.
MultiPoly quadric_through(std::mt19937_64& rng, const std::array<long, 4>& p) {
  MultiPoly q = random_form(rng, 4, 2, 5);
  std::size_t k = 0;
  while (p[k] == 0) ++k;
  std::array<Scalar, 4> v{p[0], p[1], p[2], p[3]};
  Scalar val = q.evaluate(std::span<const Scalar>(v.data(), 4));
  return q - MultiPoly::variable(4, k).pow(2) * (val * Scalar(p[k] * p[k]).inverse());
}

std::vector<std::array<Rational, 4>> random_points(std::mt19937_64& rng) {
  std::vector<std::array<Rational, 4>> pts;
  for (int i = 0; i < 7; ++i)
    pts.push_back({Rational(uniform(rng, -6, 6)), Rational(uniform(rng, -6, 6)), Rational(uniform(rng, -6, 6)),
                   Rational(uniform(rng, 1, 6))});
  return pts;
}

}  // namespace

TEST_CASE("decomposition at a point") {
  auto id = projection_frame(pt(0, 0, 0, 1));
  CHECK(id == identity_matrix(4));
  auto d = decompose_at_point(p3("x*w + y^2 + z^2"), id);
  CHECK(d.l == p2("x"));
  CHECK(d.q == p2("y^2 + z^2"));
  d = decompose_at_point(p3("y*w + x^2"), id);
  CHECK(d.l == p2("y"));
  CHECK(d.q == p2("x^2"));
  d = decompose_at_point(p3("w*(y + x) + x*y"), id);
  CHECK(d.l == p2("x + y"));
  CHECK(d.q == p2("x*y"));
  try {
    decompose_at_point(p3("w^2 + x*y"), id);
    FAIL("expected PointNotOnQuadric");
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::PointNotOnQuadric);
  }
}

TEST_CASE("gale transform: reference net") {
  auto net = QuadricNet::from_forms(p3("x*w + y^2 + z^2"), p3("y*w + x^2"), p3("z*w + x*y"));
  auto g = gale_transform(net, pt(0, 0, 0, 1));
  CHECK(g.cubics[0] == p2("x^3 - y^3 - y*z^2"));
  CHECK(g.cubics[1] == p2("x^2*y - y^2*z - z^3"));
  CHECK(g.cubics[2] == p2("x*y^2 - x^2*z"));
  CHECK(gale_syzygy_holds(g));
  CHECK_THROWS_AS(gale_transform(net, pt(1, 0, 0, 0)), MathError);
}

TEST_CASE("gale transform: example nets") {
  auto e7 = example_net("E7").net();
  auto g = gale_transform(e7, pt(0, 0, 0, 1));
  CHECK(gale_syzygy_holds(g));

  auto a4 = example_net("A4").net();
  auto v = verify_gale(a4, pt(2, 1, 0, 0));
  CHECK(v.all_common_zeros);
  CHECK(v.projected.size() == 3);
  CHECK(v.accounted == 7);

  auto bad = QuadricNet::from_forms(p3("x*y"), p3("x*z"), p3("x*w"));
  CHECK_THROWS_AS(verify_gale(bad, pt(0, 1, 0, 0)), MathError);
}

TEST_CASE("seven-point nets: projections of the other base points") {
  std::mt19937_64 rng(0);
  int done = 0;
  while (done < 10) {
    auto pts = random_points(rng);
    std::optional<QuadricNet> maybe;
    try {
      maybe = net_through_points(pts);
    } catch (const MathError&) {
      continue;
    }
    const QuadricNet& net = *maybe;
    auto bl = base_locus(net);
    if (!bl.finite || bl.points.size() != 8) continue;
    // projection from the eighth point
    std::optional<Point3> eighth;
    for (const auto& bp : bl.points) {
      bool given = false;
      for (const auto& q : pts)
        if (Point3::make(q[0], q[1], q[2], q[3]) == bp.point) given = true;
      if (!given) eighth = bp.point;
    }
    if (!eighth || !eighth->c[0].is_rational()) continue;
    try {
      auto v = verify_gale(net, *eighth);
      CHECK(v.all_common_zeros);
      CHECK(v.projected.size() == 7);
      CHECK(v.accounted == 7);
      ++done;
    } catch (const MathError& e) {
      CHECK(e.kind() == ErrorKind::DegenerateGale);
    }
  }
}

TEST_CASE("property: syzygy on random pointed nets") {
  std::mt19937_64 rng(0);
  int ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::array<long, 4> p{uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3), nonzero(rng, 3)};
    try {
      auto net = QuadricNet::from_forms(quadric_through(rng, p), quadric_through(rng, p), quadric_through(rng, p));
      auto g = gale_transform(net, pt(p[0], p[1], p[2], p[3]));
      CHECK(gale_syzygy_holds(g));
      for (const auto& c : g.cubics) CHECK(c.total_degree() == 3);
      ++ok;
    } catch (const MathError& e) {
      CHECK((e.kind() == ErrorKind::DegenerateGale || e.kind() == ErrorKind::Degenerate));
    }
  }
  CHECK(ok >= 95);
}

TEST_CASE("property: swapping generators negates the cubic") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    std::array<long, 4> p{uniform(rng, -3, 3), uniform(rng, -3, 3), nonzero(rng, 3), uniform(rng, -3, 3)};
    auto a = quadric_through(rng, p), b = quadric_through(rng, p), c = quadric_through(rng, p);
    auto g = gale_transform(QuadricNet::from_forms(a, b, c), pt(p[0], p[1], p[2], p[3]));
    auto h = gale_transform(QuadricNet::from_forms(b, a, c), pt(p[0], p[1], p[2], p[3]));
    CHECK(h.cubics[0] == -g.cubics[0]);
    CHECK(h.cubics[1] == g.cubics[2]);
    CHECK(h.cubics[2] == g.cubics[1]);
  }
}

TEST_CASE("property: equivariance under the plane action") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    std::array<long, 4> p{0, 0, 0, 1};
    std::array<MultiPoly, 3> q{quadric_through(rng, p), quadric_through(rng, p), quadric_through(rng, p)};
    ScalarMatrix h(3, 3);
    do {
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) h(i, j) = Scalar(uniform(rng, -3, 3));
    } while (determinant(h).is_zero());
    std::vector<MultiPoly> lift, plane;
    for (std::size_t i = 0; i < 3; ++i) {
      MultiPoly r4(4), r3(3);
      for (std::size_t j = 0; j < 3; ++j) {
        r4 += MultiPoly::variable(4, j) * h(i, j);
        r3 += MultiPoly::variable(3, j) * h(i, j);
      }
      lift.push_back(r4);
      plane.push_back(r3);
    }
    lift.push_back(MultiPoly::variable(4, 3));
    auto g = gale_transform(QuadricNet::from_forms(q[0], q[1], q[2]), pt(0, 0, 0, 1));
    auto gh = gale_transform(QuadricNet::from_forms(q[0].compose(lift), q[1].compose(lift), q[2].compose(lift)),
                             pt(0, 0, 0, 1));
    for (std::size_t k = 0; k < 3; ++k) CHECK(gh.cubics[k] == g.cubics[k].compose(plane));
  }
}

TEST_CASE("cubic net stability") {
  auto r = cubic_net_stability({p2("x^3"), p2("x^2*y"), p2("x^2*z")}, std::nullopt);
  CHECK(r.status == CubicVerdict::Unstable);
  REQUIRE(r.certificate);
  CHECK(r.certificate->g == identity_matrix(3));
  CHECK(r.certificate->lambda == OneParamSubgroup({-2, 1, 1}));
  CHECK(r.value == -12);

  const auto& e7 = example_net("E7");
  auto g = gale_transform(e7.net(), pt(0, 0, 0, 1));
  auto v = cubic_net_stability(g.cubics, discriminant(e7.net()).poly());
  CHECK(v.status == CubicVerdict::Unstable);
  CHECK(v.route == "provenance");

  // a non-reduced discriminant cannot serve as provenance
  CHECK_THROWS_AS(cubic_net_stability(g.cubics, plmn("l^2*m*n")), MathError);

  std::vector<std::array<Rational, 4>> pts{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
                                           {1, 1, 1, 1}, {1, 2, 3, 4}, {2, -1, 3, 5}};
  auto net = net_through_points(pts);
  auto bl = base_locus(net);
  Point3 p = bl.points.front().point;
  auto gt = gale_transform(net, p);
  auto delta = discriminant(net).poly();
  CHECK(cubic_net_stability(gt.cubics, delta).status == CubicVerdict::Stable);
  // without provenance nothing positive is claimed
  CHECK(cubic_net_stability(gt.cubics, std::nullopt).status != CubicVerdict::Stable);
}

TEST_CASE("common rational zeros") {
  auto z = common_rational_zeros({p2("x^3"), p2("x^2*y"), p2("x^2*z")});
  CHECK(z.empty());  // common component x
  std::vector<MultiPoly> fs{p2("(3*x - z)*x*y"), p2("(2*x - y)*z*(x + z)"), p2("(3*y - 2*z)*x*(x + y + z)")};
  z = common_rational_zeros(fs);
  CHECK(std::find(z.begin(), z.end(), PlanePoint::make(1, 2, 3)) != z.end());
  CHECK(std::find(z.begin(), z.end(), PlanePoint::make(0, 1, 0)) != z.end());
  for (const auto& p : z)
    for (const auto& f : fs) CHECK(f.evaluate(std::span<const Scalar>(p.c.data(), 3)).is_zero());
}
