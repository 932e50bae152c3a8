#include <doctest.h>

#include "quadnet/error.hpp"
#include "quadnet/nets/segre.hpp"
#include "support.hpp"

using namespace quadnet;
using namespace quadnet::test;

namespace {

PencilOfQuadrics pencil(const std::string& a, const std::string& b) {
  return {Quadric4::from_form(p3(a)), Quadric4::from_form(p3(b))};
}

std::string symbol(const std::string& a, const std::string& b) { return segre_symbol(pencil(a, b)).to_string(); }

ScalarMatrix random_invertible(std::mt19937_64& rng) {
  while (true) {
    ScalarMatrix g(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) g(i, j) = Scalar(uniform(rng, -3, 3));
    if (!determinant(g).is_zero()) return g;
  }
}

Quadric4 congruent(const ScalarMatrix& g, const Quadric4& q) { return Quadric4(transpose(g) * q.matrix() * g); }

}  // namespace

TEST_CASE("segre symbols of normal-form pencils") {
  CHECK(symbol("z^2 + 2*w^2", "x^2 + y^2 + z^2 + w^2") == "[(1,1),1,1]");
  CHECK(symbol("y^2 + 2*z*w + w^2", "2*x*y + 2*z*w") == "[2,2]");
  CHECK(symbol("y^2 + w^2", "2*x*y + z^2 + w^2") == "[(2,1),1]");
  CHECK(symbol("x^2", "x^2 + y^2 + z^2 + w^2") == "[(1,1,1),1]");
  CHECK(symbol("z^2 + w^2", "x^2 + y^2 + z^2 + w^2") == "[(1,1),(1,1)]");
  CHECK(symbol("y^2 + w^2", "2*x*y + 2*z*w") == "[(2,2)]");
  CHECK(symbol("2*y*z", "2*x*z + y^2 + w^2") == "[(3,1)]");
  CHECK(symbol("x^2 + 2*y^2 + 3*z^2 + 4*w^2", "x^2 + y^2 + z^2 + w^2") == "[1,1,1,1]");
  // irreducible quadratic factor: two conjugate roots
  CHECK(symbol("x^2 + 2*x*y - y^2 + z^2 + 3*w^2", "x^2 + y^2 + z^2 + w^2") == "[1,1,1,1]");
  CHECK(symbol("x^2 + 2*x*y - y^2 + z^2 + 3*z*w + w^2", "x^2 + y^2 + z^2 + w^2") == "[1,1,1,1]");
}

TEST_CASE("smooth member search") {
  CHECK(smooth_member_search(pencil("x^2", "x^2 + y^2 + z^2 + w^2")) == 1);
  CHECK(smooth_member_search(pencil("x^2 + y^2 + z^2 + w^2", "x^2")) == 0);
  CHECK_THROWS_AS(smooth_member_search(pencil("x^2", "x*y")), MathError);
  try {
    smooth_member_search(pencil("x^2 + y^2", "x*y + z^2"));
    FAIL("expected NoSmoothMember");
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::NoSmoothMember);
  }
}

TEST_CASE("canonical Segre text and lookup") {
  CHECK(canonical_segre_text("[1,(1,2)]") == "[(2,1),1]");
  CHECK(canonical_segre_text("[1,1,(1,1)]") == "[(1,1),1,1]");
  CHECK(canonical_segre_text("[(1,3)]") == "[(3,1)]");
  CHECK(intersection_type_lookup("[1,(1,1),1]") == "two A1 points");
  CHECK(intersection_type_lookup("[2,2]") == "two A1 points");
  CHECK(intersection_type_lookup("[1,(2,1)]") == "one A3 point");
  CHECK(intersection_type_lookup("[(2,2)]") == "double line plus two lines");
  CHECK(intersection_type_lookup("[(3,1)]") == "D4 point");
  CHECK(intersection_type_lookup("[1,(1,1,1)]") == "double-conic contact case");
  CHECK(intersection_type_lookup("[1,1,1,1]") == "Unknown");
  CHECK(intersection_type_lookup(segre_symbol(pencil("z^2 + 2*w^2", "x^2 + y^2 + z^2 + w^2"))) == "two A1 points");
}

TEST_CASE("property: invariant factors form a divisibility chain of total degree 4") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = pencil("0", "0");
    p.first = Quadric4::from_form(random_form(rng, 4, 2, 3, 40));
    p.second = Quadric4::from_form(random_form(rng, 4, 2, 3, 40));
    std::vector<UniPoly> s;
    try {
      s = invariant_factors(p);
    } catch (const MathError& e) {
      CHECK(e.kind() == ErrorKind::NoSmoothMember);
      continue;
    }
    int total = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      total += s[k].degree();
      if (k + 1 < 4) {
        UniPoly q, r;
        divmod(s[k + 1], s[k], q, r);
        CHECK(r.is_zero());
      }
    }
    CHECK(total == 4);
    CHECK(segre_symbol(p).weight() == 4);
  }
}

TEST_CASE("property: Segre symbol invariant under congruence and reparametrization") {
  std::mt19937_64 rng(5);
  const std::vector<std::pair<std::string, std::string>> seeds{
      {"z^2 + 2*w^2", "x^2 + y^2 + z^2 + w^2"}, {"y^2 + 2*z*w + w^2", "2*x*y + 2*z*w"},
      {"y^2 + w^2", "2*x*y + z^2 + w^2"},       {"x^2", "x^2 + y^2 + z^2 + w^2"},
      {"y^2 + w^2", "2*x*y + 2*z*w"},           {"2*y*z", "2*x*z + y^2 + w^2"},
  };
  for (int trial = 0; trial < 10; ++trial) {
    const auto& [a, b] = seeds[static_cast<std::size_t>(trial) % seeds.size()];
    auto p = pencil(a, b);
    std::string expected = segre_symbol(p).to_string();
    auto g = random_invertible(rng);
    PencilOfQuadrics moved{congruent(g, p.first), congruent(g, p.second)};
    CHECK(segre_symbol(moved).to_string() == expected);
    PencilOfQuadrics swapped{p.second, p.first};
    CHECK(segre_symbol(swapped).to_string() == expected);
    // other basis of the same pencil
    long c = nonzero(rng, 4), d = nonzero(rng, 4);
    ScalarMatrix mixed(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        mixed(i, j) = Scalar(c) * p.first.matrix()(i, j) + Scalar(d) * p.second.matrix()(i, j);
    PencilOfQuadrics rebased{Quadric4(mixed), p.second};
    CHECK(segre_symbol(rebased).to_string() == expected);
  }
}
