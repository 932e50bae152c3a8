#include <doctest.h>

#include <random>

#include "quadnet/algebra/matrix.hpp"
#include "quadnet/curves/plane_curves.hpp"
#include "quadnet/error.hpp"
#include "support.hpp"

using namespace quadnet;
using namespace quadnet::test;

namespace {

const char* kDeltaA4 = "x^2*z^2 + 2*x*y^2*z + y^4 + y^3*z";
const char* kDeltaA5a0 = "x^2*z^2 + 2*x*y^2*z + y^4 + y^2*z^2";
const char* kDeltaA5m4 = "x^2*z^2 + 2*x*y^2*z + y^4 + y^2*z^2 - 4*z^4";
const char* kDeltaA6 = "x^2*z^2 + 2*x*y^2*z + y^4 + y*z^3";
const char* kDeltaE7 = "y*(4*x*y^2 + z^2*(y + 4*z))";

PlanePoint pt(long a, long b, long c) { return PlanePoint::make(Scalar(a), Scalar(b), Scalar(c)); }

std::vector<std::string> types_of(const MultiPoly& F) {
  std::vector<std::string> out;
  for (const auto& p : singular_points(F).points) out.push_back(classify_singularity(F, p).type.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

/// Substitution v -> T v with T fixing (0:0:1).
MultiPoly transform_fixing_origin(const MultiPoly& F, std::mt19937_64& rng) {
  long a = 1, b = uniform(rng, -3, 3), c = 0, d = 1;
  if (uniform(rng, 0, 1)) std::swap(b, c);
  long e = uniform(rng, -3, 3), f = uniform(rng, -3, 3);
  MultiPoly x = MultiPoly::variable(3, 0), y = MultiPoly::variable(3, 1), z = MultiPoly::variable(3, 2);
  std::vector<MultiPoly> images{Scalar(a) * x + Scalar(b) * y, Scalar(c) * x + Scalar(d) * y,
                                Scalar(e) * x + Scalar(f) * y + z};
  return F.compose(images);
}

}  // namespace

TEST_CASE("smooth and simple singular points") {
  auto s = singular_points(p2("x^4 + y^4 + z^4"));
  CHECK(s.points.empty());
  CHECK(s.residual.empty());
  CHECK_FALSE(s.non_isolated);
  CHECK(singular_points(p2("(x*y - z^2)^2")).non_isolated);
  auto a4 = singular_points(p2(kDeltaA4));
  REQUIRE(a4.points.size() == 2);
  CHECK(a4.points[0] == pt(0, 0, 1));
  CHECK(a4.points[1] == pt(1, 0, 0));
}

TEST_CASE("singular points over a quadratic field") {
  // Two nodes at (1 : +-sqrt(2) : 0) from the conic pair.
  MultiPoly F = p2("(x^2 - 2*y^2 + x*z)*(x^2 - 2*y^2 - y*z + 3*z^2)");
  auto s = singular_points(F);
  CHECK(s.residual.empty());
  bool found_irrational = false;
  for (const auto& p : s.points) found_irrational |= !p.c[1].is_rational();
  CHECK(found_irrational);
  for (const auto& p : s.points) CHECK(classify_singularity(F, p).type.to_string() == "A1");
}

TEST_CASE("multiplicity, Milnor number and tangent cone") {
  CHECK(multiplicity_at(p2("x*y*z^2 + x^4 + y^4"), pt(0, 0, 1)) == 2);
  CHECK(multiplicity_at(p2("x^4 + x^2*y^2 + z*(x^3 + y^3)"), pt(0, 0, 1)) >= 3);
  CHECK(multiplicity_at(p2(kDeltaE7), pt(1, 0, 0)) == 3);
  CHECK(multiplicity_at(p2(kDeltaE7), pt(1, 1, 1)) == 0);
  CHECK(milnor_number(p2("y^2*z - x^3"), pt(0, 0, 1)) == 2);
  CHECK(milnor_number(p2("x^2*y + y^3"), pt(0, 0, 1)) == 4);
  CHECK(milnor_number(p2(kDeltaE7), pt(1, 0, 0)) == 7);
  CHECK(tangent_cone(p2("x*y*z^2 + x^4 + y^4"), pt(0, 0, 1)).shape == TangentShape::DistinctLines);
  CHECK(tangent_cone(p2("x^2*y*z + y^4 + x^4"), pt(0, 0, 1)).shape == TangentShape::DoublePlusSimple);
  CHECK(tangent_cone(p2(kDeltaE7), pt(1, 0, 0)).shape == TangentShape::TripleLine);
  CHECK_FALSE(milnor_number(p2("x^2*(y*z - x^2)"), pt(0, 0, 1)).has_value());
}

TEST_CASE("example discriminants classify as printed") {
  CHECK(types_of(p2(kDeltaA4)) == std::vector<std::string>{"A2", "A4"});
  CHECK(types_of(p2(kDeltaA5a0)) == std::vector<std::string>{"A1", "A5"});
  CHECK(types_of(p2(kDeltaA5m4)) == std::vector<std::string>{"A5"});
  CHECK(types_of(p2(kDeltaA6)) == std::vector<std::string>{"A6"});
  CHECK(types_of(p2(kDeltaE7)) == std::vector<std::string>{"E7"});
  CHECK(classify_singularity(p2(kDeltaA4), pt(1, 0, 0)).type.to_string() == "A4");
  CHECK(classify_singularity(p2(kDeltaE7), pt(1, 0, 0)).type.to_string() == "E7");
}

TEST_CASE("normal forms classify to their own type") {
  auto check = [](const std::string& affine, const std::string& expected) {
    MultiPoly f = p2(affine);
    int d = f.total_degree();
    MultiPoly F(3);
    for (const auto& [m, c] : f.terms()) {
      Monomial h = m;
      h.e[2] = static_cast<std::uint16_t>(d - m.degree());
      F.add_term(h, c);
    }
    CAPTURE(affine);
    CHECK(classify_singularity(F, pt(0, 0, 1)).type.to_string() == expected);
  };
  for (int n = 1; n <= 8; ++n) check("x^2 + y^" + std::to_string(n + 1), "A" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) check("x^2*y + y^" + std::to_string(n - 1), "D" + std::to_string(n));
  check("x^3 + y^4", "E6");
  check("x^3 + x*y^3", "E7");
  check("x^3 + y^5", "E8");
  check("x^3 + y^6", "NonADE(TripleLineBadMilnor)");
  check("x^4 + y^4", "NonADE(MultiplicityAtLeast4)");
}

TEST_CASE("Euler relation") {
  std::mt19937_64 rng(0);
  MultiPoly x = MultiPoly::variable(3, 0), y = MultiPoly::variable(3, 1), z = MultiPoly::variable(3, 2);
  for (int trial = 0; trial < 50; ++trial) {
    int d = static_cast<int>(uniform(rng, 1, 5));
    MultiPoly F = random_form(rng, 3, d, 7);
    CHECK(x * F.derivative(0) + y * F.derivative(1) + z * F.derivative(2) == Scalar(d) * F);
  }
}

TEST_CASE("multiplicity and Milnor number are coordinate invariant") {
  std::mt19937_64 rng(0);
  std::vector<std::string> samples{kDeltaA6, "x^2*y*z + y^4 + x^4", "x^3*z + x*y^3 + y^4", "x^2*z^2 + y^3*z + x^4"};
  for (const auto& s : samples) {
    MultiPoly F = p2(s);
    if (s == kDeltaA6) F = F.compose(std::vector<MultiPoly>{p2("z"), p2("y"), p2("x")});  // point to (0:0:1)
    int m = multiplicity_at(F, pt(0, 0, 1));
    auto mu = milnor_number(F, pt(0, 0, 1));
    for (int k = 0; k < 5; ++k) {
      MultiPoly G = transform_fixing_origin(F, rng);
      CHECK(multiplicity_at(G, pt(0, 0, 1)) == m);
      CHECK(milnor_number(G, pt(0, 0, 1)) == mu);
    }
  }
}

TEST_CASE("double points classify as A of their Milnor number") {
  std::mt19937_64 rng(0);
  int seen = 0;
  for (int trial = 0; trial < 30; ++trial) {
    // Quartics singular at (0:0:1): no z^4, z^3 x, z^3 y terms.
    MultiPoly F = random_form(rng, 3, 4, 4, 60);
    MultiPoly G(3);
    for (const auto& [m, c] : F.terms())
      if (m.e[2] <= 2) G.add_term(m, c);
    G.add_term(Monomial{{0, 2, 2}}, Scalar(nonzero(rng, 3)));
    if (multiplicity_at(G, pt(0, 0, 1)) != 2 || !is_reduced(G)) continue;
    auto rec = classify_singularity(G, pt(0, 0, 1));
    REQUIRE(rec.milnor.has_value());
    CHECK(rec.type.to_string() == "A" + std::to_string(*rec.milnor));
    ++seen;
  }
  CHECK(seen > 10);
}

TEST_CASE("reducedness and ADE check") {
  auto [ok, recs] = has_only_ade(p2(kDeltaA5a0));
  CHECK(ok);
  CHECK(recs.size() == 2);
  CHECK_FALSE(is_reduced(p2("x^2*(x^2 + y*z)")));
  CHECK(has_only_ade(p2("x^4 + y^4 + z^4")).second.empty());
  CHECK(has_only_ade(p2("x^4 + y^4 + z^4")).first);
}

TEST_CASE("double smooth conic test") {
  CHECK(double_smooth_conic_test(p2("(x*y - z^2)^2")));
  CHECK_FALSE(double_smooth_conic_test(p2("(x*y)^2")));
  CHECK_FALSE(double_smooth_conic_test(p2(kDeltaA4)));
  CHECK(double_smooth_conic_test(p2("3*(x^2 + y^2 - z^2)^2")));
}

TEST_CASE("inflectional tangent test") {
  CHECK(inflectional_tangent_quartic_test(p2("z*(y^2*z - x^3 - x*z^2)")));
  CHECK_FALSE(inflectional_tangent_quartic_test(p2("(x - 2*y + 5*z)*(y^2*z - x^3 - x*z^2)")));
  CHECK_FALSE(inflectional_tangent_quartic_test(p2("x^4 + y^4 + z^4")));
  // Tangent but not inflectional: contact order 2.
  CHECK_FALSE(inflectional_tangent_quartic_test(p2("(x - z)*(y^2*z - x^3 + x*z^2 + z^3 - z^3)")));
}

TEST_CASE("quartic verdicts") {
  CHECK(decide_quartic_stability(p2("x^4 + y^4 + z^4")).status == Verdict::Stable);
  CHECK(decide_quartic_stability(p2(kDeltaE7)).status == Verdict::Unstable);
  CHECK(decide_quartic_stability(p2(kDeltaA4)).status == Verdict::StrictlySemistable);
  CHECK(decide_quartic_stability(p2("(x*y - z^2)^2")).status == Verdict::StrictlySemistable);
  CHECK(decide_quartic_stability(p2("0")).status == Verdict::Unstable);
  CHECK(decide_quartic_stability(p2("z*(y^2*z - x^3 - x*z^2)")).status == Verdict::Unstable);
  CHECK(decide_quartic_stability(p2("x*y*z*(x + y + z)")).status == Verdict::Stable);
  CHECK(decide_quartic_stability(p2("(y^2*z - x^3)*(x - z)")).status == Verdict::Stable);
  CHECK(decide_quartic_stability(p2("x^2*(y^2 + z^2)")).status == Verdict::Unstable);
}

TEST_CASE("stable quartics have only A1 and A2 points") {
  std::mt19937_64 rng(0);
  std::vector<MultiPoly> samples;
  for (int k = 0; k < 10; ++k) {
    MultiPoly a = random_form(rng, 3, 1, 3), b = random_form(rng, 3, 3, 3);
    MultiPoly c = random_form(rng, 3, 2, 3), d = random_form(rng, 3, 2, 3);
    if (!a.is_zero() && !b.is_zero()) samples.push_back(a * b);
    if (!c.is_zero() && !d.is_zero()) samples.push_back(c * d);
  }
  for (const auto& F : samples) {
    QuarticVerdict v;
    try {
      v = decide_quartic_stability(F);
    } catch (const MathError& e) {
      CHECK(e.kind() == ErrorKind::UnclassifiedExtensionPoint);
      continue;
    }
    if (v.status == Verdict::Stable) {
      auto [ok, recs] = has_only_ade(F);
      CHECK(ok);
      for (const auto& r : recs) CHECK((r.type.to_string() == "A1" || r.type.to_string() == "A2"));
    }
  }
}
