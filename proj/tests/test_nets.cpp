#include <doctest.h>

#include <random>

#include "quadnet/cli/corpus.hpp"
#include "quadnet/error.hpp"
#include "quadnet/nets/quadric_nets.hpp"
#include "support.hpp"

using namespace quadnet;
using namespace quadnet::test;

namespace {

Point3 parse_point(const std::string& text) {
  std::array<Scalar, 4> v;
  std::size_t pos = 1;
  for (int i = 0; i < 4; ++i) {
    std::size_t end = text.find_first_of(":)", pos);
    v[static_cast<std::size_t>(i)] = Scalar(parse_rational(text.substr(pos, end - pos)));
    pos = end + 1;
  }
  return Point3::make(v);
}

std::vector<long> sorted_multiplicities(const BaseLocusReport& r) {
  std::vector<long> m;
  for (const auto& b : r.points) m.push_back(b.multiplicity);
  std::sort(m.begin(), m.end());
  return m;
}

ScalarMatrix random_invertible(std::mt19937_64& rng) {
  while (true) {
    ScalarMatrix g(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) g(i, j) = Scalar(uniform(rng, -3, 3));
    if (!determinant(g).is_zero()) return g;
  }
}

QuadricNet random_net(std::mt19937_64& rng) {
  while (true) {
    try {
      return QuadricNet::from_forms(random_form(rng, 4, 2, 5), random_form(rng, 4, 2, 5), random_form(rng, 4, 2, 5));
    } catch (const MathError&) {
    }
  }
}

QuadricNet seven_point_net(std::mt19937_64& rng) {
  while (true) {
    std::vector<std::array<Rational, 4>> pts;
    for (int k = 0; k < 7; ++k)
      pts.push_back({Rational(uniform(rng, -9, 9)), Rational(uniform(rng, -9, 9)), Rational(uniform(rng, -9, 9)),
                     Rational(uniform(rng, 1, 9))});
    try {
      return net_through_points(pts);
    } catch (const MathError&) {
    }
  }
}

}  // namespace

TEST_CASE("quadric matrix convention round-trips") {
  Quadric4 q = Quadric4::from_form(p3("x0^2 - 2*x0*x1"));
  CHECK(q.matrix()(0, 0) == Scalar(1));
  CHECK(q.matrix()(0, 1) == Scalar(-1));
  CHECK(q.matrix()(1, 0) == Scalar(-1));
  CHECK(q.form() == p3("x^2 - 2*x*y"));
  Quadric4 r = Quadric4::from_form(p3("1/4*x^2 - x*y + 2*x*z + y^2 + 2*y*w"));
  CHECK(r.matrix()(0, 0) == Scalar(make_rational(1, 4)));
  CHECK(r.matrix()(0, 1) == Scalar(make_rational(-1, 2)));
  CHECK(r.matrix()(1, 3) == Scalar(1));
  CHECK(r.form() == p3("1/4*x^2 - x*y + 2*x*z + y^2 + 2*y*w"));
  CHECK_THROWS_AS(QuadricNet::from_forms(p3("x^2"), p3("2*x^2"), p3("y^2")), MathError);
}

TEST_CASE("example discriminants") {
  for (const auto& ex : example_nets()) {
    CAPTURE(ex.name);
    CHECK(discriminant(ex.net()).poly() == plmn(ex.discriminant));
  }
  auto diag = QuadricNet::from_forms(p3("x^2 + y^2"), p3("z^2 + w^2"), p3("x^2 + z^2"));
  CHECK(discriminant(diag).poly() == plmn("l*m*(l + n)*(m + n)"));
}

TEST_CASE("quadric ranks") {
  CHECK(quadric_rank(Quadric4::from_form(p3("x^2"))) == 1);
  CHECK(quadric_rank(Quadric4::from_form(p3("x*y"))) == 2);
  CHECK(quadric_rank(Quadric4::from_form(p3("x*w + y*z"))) == 4);
  CHECK_THROWS_AS(quadric_rank(Quadric4()), MathError);
}

TEST_CASE("example base loci") {
  for (const auto& ex : example_nets()) {
    CAPTURE(ex.name);
    BaseLocusReport r = base_locus(ex.net());
    CHECK(r.finite);
    CHECK(r.accounted_length == 8);
    CHECK(r.residual.empty());
    REQUIRE(r.points.size() == ex.base_points.size());
    for (const auto& [text, mult] : ex.base_points) {
      Point3 p = parse_point(text);
      auto it = std::find_if(r.points.begin(), r.points.end(), [&](const BasePoint& b) { return b.point == p; });
      REQUIRE(it != r.points.end());
      CHECK(it->multiplicity == mult);
    }
  }
  CHECK(sorted_multiplicities(base_locus(example_net("A4").net())) == std::vector<long>{1, 2, 2, 3});
}

TEST_CASE("base locus multiplicity at a single example point") {
  auto net = example_net("A4").net();
  CHECK(local_algebra_dimension(localize_net(net, parse_point("(0:0:1:0)")), kBaseLocusCap) == 3);
}

TEST_CASE("positive-dimensional base locus is reported") {
  auto net = QuadricNet::from_forms(p3("x*y"), p3("x*z"), p3("x*w"));
  BaseLocusReport r = base_locus(net);
  CHECK_FALSE(r.finite);
  CHECK(r.points.empty());
}

TEST_CASE("good nets and verdicts") {
  CHECK(is_good_net(example_net("E7").net()));
  CHECK_FALSE(is_good_net(QuadricNet::from_forms(p3("x^2"), p3("y^2"), p3("z^2"))));
  // Two generators singular at the common base point (0:0:0:1).
  CHECK_FALSE(is_good_net(QuadricNet::from_forms(p3("x^2 + y^2 - z^2"), p3("x*y + y*z"), p3("x*w + y^2 + z^2"))));
  for (const auto& ex : example_nets()) {
    CAPTURE(ex.name);
    CHECK(decide_net_stability(ex.net()).status == ex.verdict);
  }
  std::mt19937_64 rng(0);
  CHECK(decide_net_stability(seven_point_net(rng)).status == Verdict::Stable);
}

TEST_CASE("congruence transforms") {
  auto net = example_net("A4").net();
  auto same = net_congruence_transform(net, identity_matrix(4));
  CHECK(same.forms() == net.forms());
  ScalarMatrix perm(4, 4);
  perm(0, 1) = perm(1, 0) = perm(2, 2) = perm(3, 3) = Scalar(1);
  auto swapped = net_congruence_transform(QuadricNet::from_forms(p3("x^2"), p3("z*w"), p3("y*z")), perm);
  CHECK(swapped.forms()[0] == p3("y^2"));
  CHECK_THROWS_AS(net_congruence_transform(net, ScalarMatrix(4, 4)), MathError);
}

TEST_CASE("discriminant scales by det(g)^2 under congruence") {
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 20; ++trial) {
    QuadricNet net = random_net(rng);
    ScalarMatrix g = random_invertible(rng);
    Scalar d = determinant(g);
    CHECK(discriminant(net_congruence_transform(net, g)).poly() == discriminant(net).poly() * (d * d));
  }
}

TEST_CASE("discriminant has degree 4 or vanishes") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    QuadricNet net = random_net(rng);
    int deg = discriminant(net).degree();
    CHECK((deg == 4 || deg == -1));
  }
  CHECK(discriminant(QuadricNet::from_forms(p3("x*y"), p3("x*z"), p3("x*w"))).is_zero());
}

TEST_CASE("quadric rank is invariant under congruence") {
  std::mt19937_64 rng(2);
  for (const char* f : {"x^2", "x*y", "x^2 + y^2 - z^2", "x*w + y*z", "x^2 + x*y"}) {
    Quadric4 q = Quadric4::from_form(p3(f));
    ScalarMatrix g = random_invertible(rng);
    CHECK(quadric_rank(Quadric4(transpose(g) * q.matrix() * g)) == quadric_rank(q));
  }
}

TEST_CASE("finite base loci account for length 8") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    BaseLocusReport r = base_locus(seven_point_net(rng));
    REQUIRE(r.finite);
    if (r.residual.empty())
      CHECK(r.accounted_length == 8);
    else
      CHECK(r.accounted_length < 8);
    CHECK(r.points.size() >= 7);
  }
}
