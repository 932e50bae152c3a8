#include <doctest.h>

#include <algorithm>

#include "quadnet/atlas/atlas.hpp"
#include "quadnet/error.hpp"
#include "support.hpp"

using namespace quadnet;
using namespace quadnet::test;

namespace {

std::vector<std::string> names(const std::vector<Monomial>& set) {
  std::vector<std::string> out;
  for (const auto& m : set) out.push_back(monomial_name(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> names_of(std::initializer_list<const char*> list) {
  std::vector<std::string> out;
  for (const char* s : list) out.push_back(monomial_name(parse_quadric_monomial(s)));
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<std::string>& all_quadrics() {
  static const auto v = names(quadric_monomials());
  return v;
}

}  // namespace

TEST_CASE("subgroup catalog") {
  const auto& cat = lambda_catalog();
  CHECK(cat.size() == 18);
  auto has = [&](std::vector<long> r) {
    return std::any_of(cat.begin(), cat.end(), [&](const NamedSubgroup& e) { return e.lambda.weights() == r; });
  };
  CHECK(has({5, 1, -3, -3}));
  CHECK(has({7, 3, -1, -9}));
  CHECK(catalog_entry("lambda2-bar").lambda == OneParamSubgroup({7, 3, -1, -9}));
  CHECK_THROWS_AS(catalog_entry("lambda10"), MathError);
}

TEST_CASE("monomial names") {
  CHECK(monomial_name(parse_quadric_monomial("x0^2")) == "x0^2");
  CHECK(monomial_name(parse_quadric_monomial("x1x3")) == "x1*x3");
  CHECK(monomial_name(parse_quadric_monomial("x1*x3")) == "x1*x3");
  CHECK_THROWS_AS(parse_quadric_monomial("x0"), MathError);
  CHECK_THROWS_AS(parse_quadric_monomial("x4^2"), MathError);
  CHECK(monomial_weight(parse_quadric_monomial("x0^2"), catalog_entry("lambda1").lambda) == 42);
  CHECK(monomial_weight(parse_quadric_monomial("x3^2"), catalog_entry("lambda1").lambda) == -86);
  CHECK(monomial_weight(parse_quadric_monomial("x0*x3"), catalog_entry("lambda1").lambda) == -22);
}

TEST_CASE("maximal sets: reference triples") {
  auto m = parse_quadric_monomial;
  auto t1 = maximal_set(catalog_entry("lambda1").lambda, m("x0^2"), m("x0^2"));
  CHECK(names(t1.sets[0]) == names_of({"x3^2"}));
  CHECK(names(t1.sets[1]) == all_quadrics());
  CHECK(names(t1.sets[2]) == all_quadrics());
  CHECK(t1.maximal);

  auto t4 = maximal_set(catalog_entry("lambda4").lambda, m("x2^2"), m("x0^2"));
  CHECK(names(t4.sets[0]) == names_of({"x2^2", "x2*x3", "x3^2"}));
  CHECK(names(t4.sets[1]) == names_of({"x2^2", "x2*x3", "x3^2"}));
  CHECK(names(t4.sets[2]) == all_quadrics());

  auto t9 = maximal_set(catalog_entry("lambda9").lambda, m("x1^2"), m("x0*x2"));
  CHECK(names(t9.sets[0]) == names_of({"x2^2", "x2*x3", "x3^2"}));
  auto bc = names_of({"x0*x2", "x0*x3", "x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"});
  CHECK(names(t9.sets[1]) == bc);
  CHECK(names(t9.sets[2]) == bc);
  CHECK(t9.threshold_ties);
}

TEST_CASE("property: maximal triples are negative and cannot grow") {
  const auto& mons = quadric_monomials();
  for (const auto& entry : lambda_catalog())
    for (const auto& I : mons)
      for (const auto& J : mons) {
        auto t = maximal_set(entry.lambda, I, J);
        if (t.sets[0].empty()) continue;
        CHECK(t.all_sums_negative());
        if (!t.maximal) continue;
        for (std::size_t f = 0; f < 3; ++f)
          for (const auto& k : mons) {
            if (std::find(t.sets[f].begin(), t.sets[f].end(), k) != t.sets[f].end()) continue;
            auto grown = t;
            grown.sets[f].push_back(k);
            CHECK_FALSE(grown.all_sums_negative());
          }
      }
}

TEST_CASE("atlas enumeration") {
  auto e = enumerate_atlas();
  auto m = parse_quadric_monomial;
  auto key2 = maximal_set(catalog_entry("lambda1").lambda, m("x0*x3"), m("x0^2")).key();
  auto key8 = maximal_set(catalog_entry("lambda2-bar").lambda, m("x0*x3"), m("x0*x2")).key();
  auto has = [&](const TripleKey& k) {
    return std::any_of(e.entries.begin(), e.entries.end(), [&](const AtlasEntry& a) { return a.key == k; });
  };
  CHECK(has(key2));
  CHECK(has(key8));
  CHECK(e.entries.size() == 65);
  CHECK(e.maximal_count() == 9);
  CHECK(e.unmatched.empty());
  CHECK(e.rows_maximal == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 12});
  REQUIRE(e.rows_contained.size() == 3);
  CHECK(e.rows_contained[0].first == 9);
  CHECK(e.entries[e.rows_contained[0].second].named_row == 12);
  CHECK(e.rows_contained[1].first == 10);
  CHECK(e.entries[e.rows_contained[1].second].named_row == 7);
  CHECK(e.rows_contained[2].first == 11);
  CHECK(e.entries[e.rows_contained[2].second].named_row == 2);
  CHECK(e.rows_missing.empty());
  CHECK_FALSE(e.exactly_named());
  for (const auto& entry : e.entries) CHECK(!entry.sources.empty());
}

TEST_CASE("enumeration is deterministic: parallel equals serial") {
  auto a = enumerate_atlas();
  auto b = enumerate_atlas_serial();
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].key == b.entries[i].key);
    CHECK(a.entries[i].sources.size() == b.entries[i].sources.size());
    CHECK(a.entries[i].globally_maximal == b.entries[i].globally_maximal);
    CHECK(a.entries[i].named_row == b.entries[i].named_row);
  }
  CHECK(a.rows_maximal == b.rows_maximal);
}

TEST_CASE("generic instances") {
  for (int seed = 0; seed < 5; ++seed) {
    auto rng = trial_rng(static_cast<std::uint64_t>(seed), 1, 0);
    auto net = instantiate_generic(atlas_row(1).triple(), rng);
    auto f = net.forms();
    CHECK(f[2].size() == 1);
    CHECK(f[2].leading_monomial() == parse_quadric_monomial("x3^2"));
    CHECK(pivot_weight_sum(LinearSystemOfForms({f[0], f[1], f[2]}), catalog_entry("lambda1").lambda) == -6);

    auto rng5 = trial_rng(static_cast<std::uint64_t>(seed), 5, 0);
    auto f5 = instantiate_generic(atlas_row(5).triple(), rng5).forms();
    int binary = 0;
    for (const auto& q : f5)
      if (!q.involves(0) && !q.involves(1)) ++binary;
    CHECK(binary == 2);
  }
}

TEST_CASE("delta shape predicates") {
  CHECK(check_delta_shape(plmn("l^4 + m^4 + n*l^3 - n*m^3"), DeltaShape::BinaryQuarticPlusLinearInThird));
  CHECK_FALSE(check_delta_shape(plmn("l^4 + m^4 + n^4"), DeltaShape::BinaryQuarticPlusLinearInThird));
  CHECK(check_delta_shape(plmn("m^2*(l^2 + n^2 - 2*m^2 + l*n)"), DeltaShape::SquareOfLineTimesConic));
  CHECK_FALSE(check_delta_shape(plmn("(l^2 + m^2 - n^2)^2"), DeltaShape::SquareOfLineTimesConic));
  CHECK(check_delta_shape(plmn("(m + 2*l)^2*(l^2 + m*n - n^2)"), DeltaShape::SquareOfBinaryLineTimesConic));
  CHECK(check_delta_shape(plmn("m^2*(l + 3*m - n)^2"), DeltaShape::SquareOfLineTimesSquaredLine));
  CHECK_FALSE(check_delta_shape(plmn("m^2*(l + n)*(l - n)"), DeltaShape::SquareOfLineTimesSquaredLine));
  CHECK(check_delta_shape(plmn("n*(n*(l^2 + m*n) + m^3)"), DeltaShape::LineTimesCuspidalCubic));
  CHECK_FALSE(check_delta_shape(plmn("n*(n*(l^2 + m*n) + m^3 + l^3)"), DeltaShape::LineTimesCuspidalCubic));
  CHECK(check_delta_shape(plmn("m*(l^3 + m^3 + l*m*n + 2*m^2*n + m*n^2)"), DeltaShape::LineTimesSpecialCubic));
  CHECK_FALSE(check_delta_shape(plmn("m*(l^3 + m^3 + n^3)"), DeltaShape::LineTimesSpecialCubic));
  CHECK(check_delta_shape(plmn("l^4 - m^4 + l*n*(l^2 + m^2)"), DeltaShape::BinaryQuarticPlusMixedTerm));
  CHECK_FALSE(check_delta_shape(plmn("l^4 + m^4 + n^4 + l*m*n^2"), DeltaShape::BinaryQuarticPlusMixedTerm));
}

TEST_CASE("row verification: small trial counts") {
  for (const auto& row : atlas_rows()) {
    auto rep = verify_atlas_row(row.index, 2, 0);
    CHECK(rep.passed() == 2);
    for (const auto& t : rep.trials) {
      INFO("row " << row.index << " trial " << t.trial << " " << t.error << " delta " << t.delta.to_string({"l", "m", "n"}));
      CHECK(t.error.empty());
      CHECK(t.destabilized);
      CHECK(t.shape_ok);
      CHECK(t.unstable);
      CHECK(t.segre_ok);
    }
  }
  CHECK_THROWS_AS(verify_atlas_row(13, 1, 0), MathError);
}

TEST_CASE("row verification: parallel equals serial") {
  auto a = verify_atlas_row(6, 4, 7);
  auto b = verify_atlas_row_serial(6, 4, 7);
  REQUIRE(a.trials.size() == b.trials.size());
  for (std::size_t i = 0; i < a.trials.size(); ++i) {
    CHECK(a.trials[i].forms == b.trials[i].forms);
    CHECK(a.trials[i].delta == b.trials[i].delta);
    CHECK(a.trials[i].hm_value == b.trials[i].hm_value);
  }
}
