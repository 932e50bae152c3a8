#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "quadnet/error.hpp"
#include "quadnet/hm/hilbert_mumford.hpp"
#include "support.hpp"

using namespace quadnet;
using namespace quadnet::test;

namespace {

LinearSystemOfForms random_system(std::mt19937_64& rng, std::size_t nvars, int degree, std::size_t dim) {
  while (true) {
    std::vector<MultiPoly> b;
    for (std::size_t i = 0; i < dim; ++i) b.push_back(random_form(rng, nvars, degree, 4, 50));
    try {
      return LinearSystemOfForms(b);
    } catch (const MathError&) {
    }
  }
}

OneParamSubgroup random_lambda(std::mt19937_64& rng, std::size_t n) {
  std::vector<long> r(n);
  long sum = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) sum += (r[i] = uniform(rng, -5, 5));
  r[n - 1] = -sum;
  return OneParamSubgroup(r);
}

}  // namespace

TEST_CASE("one-parameter subgroups") {
  CHECK_THROWS_AS(OneParamSubgroup({1, 1, 1, 0}), MathError);
  OneParamSubgroup l({-3, 1, 1, 1});
  CHECK(l.bar() == OneParamSubgroup({-1, -1, -1, 3}));
  CHECK(l.to_string() == "(-3,1,1,1)");
  CHECK(monomial_weight(p3("x*y").leading_monomial(), l) == -2);
  CHECK(max_weight(p3("x^2 + x*w"), l) == -2);
}

TEST_CASE("pivot weight sums: anchor values") {
  std::mt19937_64 rng(3);
  auto generic = [&]() { return random_form(rng, 4, 2, 9, 100); };
  LinearSystemOfForms v({p3("x^2"), generic(), generic()});
  CHECK(pivot_weight_sum(v, OneParamSubgroup({-3, 1, 1, 1})) == -2);

  LinearSystemOfForms single({p3("x*w + y*z")});
  CHECK(pivot_weight_sum(single, OneParamSubgroup({1, 1, -1, -1})) == 0);

  LinearSystemOfForms cubics({p2("x^3"), p2("x^2*y"), p2("x^2*z")});
  CHECK(pivot_weight_sum(cubics, OneParamSubgroup({-2, 1, 1})) == -12);
}

TEST_CASE("linear systems validate input") {
  CHECK_THROWS_AS(LinearSystemOfForms({p3("x^2"), p3("2*x^2")}), MathError);
  CHECK_THROWS_AS(LinearSystemOfForms({p3("x^2"), p3("x")}), MathError);
  CHECK_THROWS_AS(LinearSystemOfForms({p3("x^2"), p3("0")}), MathError);
  LinearSystemOfForms v({p3("x^2")});
  CHECK_THROWS_AS(pivot_weight_sum(v, OneParamSubgroup({1, -1, 0})), MathError);
}

TEST_CASE("certificates") {
  LinearSystemOfForms v({p3("x^2"), p3("x*y"), p3("x*z")});
  Certificate c{identity_matrix(4), OneParamSubgroup({-3, 1, 1, 1})};
  auto chk = verify_unstable_certificate(v, c, true);
  CHECK(chk.destabilizing);
  CHECK(chk.value == -6 - 2 - 2);
  // moving x to w first: the same subgroup must act on w
  ScalarMatrix swap(4, 4);
  swap(0, 3) = swap(3, 0) = swap(1, 1) = swap(2, 2) = Scalar(1);
  LinearSystemOfForms moved({p3("w^2"), p3("w*y"), p3("w*z")});
  CHECK(verify_unstable_certificate(moved, Certificate{swap, OneParamSubgroup({-3, 1, 1, 1})}, true).value == -10);
  LinearSystemOfForms quad({p3("x*w + y*z")});
  Certificate zero{identity_matrix(4), OneParamSubgroup({1, 1, -1, -1})};
  CHECK(verify_unstable_certificate(quad, zero, false).destabilizing);
  CHECK_FALSE(verify_unstable_certificate(quad, zero, true).destabilizing);
}

TEST_CASE("property: pivot weight sum independent of basis") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    auto v = random_system(rng, 4, 2, 3);
    auto l = random_lambda(rng, 4);
    std::vector<MultiPoly> mixed;
    ScalarMatrix m(3, 3);
    do {
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = Scalar(uniform(rng, -3, 3));
    } while (determinant(m).is_zero());
    for (std::size_t i = 0; i < 3; ++i) {
      MultiPoly f(4);
      for (std::size_t j = 0; j < 3; ++j) f += v.basis()[j] * m(i, j);
      mixed.push_back(f);
    }
    CHECK(pivot_weight_sum(LinearSystemOfForms(mixed), l) == pivot_weight_sum(v, l));
    CHECK(pivot_weight_sum(v, l) == pivot_weight_sum_serial(v, l));
  }
}

TEST_CASE("property: diagonal and permutation actions") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    auto v = random_system(rng, 4, 2, 3);
    auto l = random_lambda(rng, 4);
    ScalarMatrix d(4, 4);
    for (std::size_t i = 0; i < 4; ++i) d(i, i) = Scalar(nonzero(rng, 5));
    CHECK(pivot_weight_sum(act(d, v), l) == pivot_weight_sum(v, l));

    std::vector<std::size_t> perm{0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    // (P f)(x) = f(x_perm): variable i of f becomes variable perm[i]
    ScalarMatrix p(4, 4);
    for (std::size_t i = 0; i < 4; ++i) p(i, perm[i]) = Scalar(1);
    std::vector<long> moved(4);
    for (std::size_t i = 0; i < 4; ++i) moved[perm[i]] = l[i];
    CHECK(pivot_weight_sum(act(p, v), OneParamSubgroup(moved)) == pivot_weight_sum(v, l));
  }
}

TEST_CASE("property: pivot sum bounded by maximal weights; single forms") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    auto v = random_system(rng, 3, 3, 3);
    auto l = random_lambda(rng, 3);
    long bound = 0;
    for (const auto& f : v.basis()) bound += max_weight(f, l);
    CHECK(pivot_weight_sum(v, l) <= bound);
    LinearSystemOfForms one({v.basis()[0]});
    CHECK(pivot_weight_sum(one, l) == max_weight(v.basis()[0], l));
  }
}
