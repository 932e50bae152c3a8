#include "quadnet/cli/suite.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "quadnet/algebra/elimination.hpp"
#include "quadnet/atlas/atlas.hpp"
#include "quadnet/cli/app.hpp"
#include "quadnet/cli/corpus.hpp"
#include "quadnet/cli/document.hpp"
#include "quadnet/cli/parse.hpp"
#include "quadnet/curves/plane_curves.hpp"
#include "quadnet/error.hpp"
#include "quadnet/gale/gale.hpp"
#include "quadnet/hm/hilbert_mumford.hpp"
#include "quadnet/nets/segre.hpp"

namespace quadnet {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

long nonzero(std::mt19937_64& rng, long bound) {
  long v = uniform(rng, 1, bound);
  return uniform(rng, 0, 1) ? v : -v;
}

MultiPoly random_form(std::mt19937_64& rng, std::size_t nvars, int degree, long bound) {
  MultiPoly p(nvars);
  for (const auto& m : monomials_of_degree(nvars, degree)) p.add_term(m, Scalar(uniform(rng, -bound, bound)));
  return p;
}

MultiPoly random_poly(std::mt19937_64& rng, std::size_t nvars, int degree, long bound) {
  MultiPoly p(nvars);
  for (int d = 0; d <= degree; ++d) p += random_form(rng, nvars, d, bound);
  return p;
}

ScalarMatrix random_invertible(std::mt19937_64& rng, std::size_t n, long bound) {
  while (true) {
    ScalarMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = Scalar(uniform(rng, -bound, bound));
    if (!determinant(g).is_zero()) return g;
  }
}

std::vector<MultiPoly> linear_images(const ScalarMatrix& g) {
  std::vector<MultiPoly> img;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    MultiPoly r(g.cols());
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (!g(i, j).is_zero()) r += MultiPoly::variable(g.cols(), j) * g(i, j);
    img.push_back(r);
  }
  return img;
}

/// Quadric through p: subtract a multiple of x_k^2 with p_k nonzero.
MultiPoly quadric_through(std::mt19937_64& rng, const std::array<long, 4>& p) {
  MultiPoly q = random_form(rng, 4, 2, 5);
  std::size_t k = 0;
  while (p[k] == 0) ++k;
  std::array<Scalar, 4> v{p[0], p[1], p[2], p[3]};
  Scalar val = q.evaluate(std::span<const Scalar>(v.data(), 4));
  return q - MultiPoly::variable(4, k).pow(2) * (val * Scalar(p[k] * p[k]).inverse());
}

std::vector<std::string> singularity_names(const MultiPoly& f, int cap) {
  std::vector<std::string> out;
  auto locus = singular_points(f);
  for (const auto& p : locus.points) out.push_back(classify_singularity(f, p, cap).type.to_string());
  if (!locus.residual.empty()) out.push_back("residual");
  std::sort(out.begin(), out.end());
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s + "}";
}

std::string join(std::vector<long> v) {
  std::sort(v.rbegin(), v.rend());
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

/// "(a:b:c:d)" with rational entries.
Point3 point_from_text(std::string text) {
  text = text.substr(1, text.size() - 2);
  std::replace(text.begin(), text.end(), ':', ',');
  auto q = parse_rational_list(text);
  return Point3::make(Scalar(q.at(0)), Scalar(q.at(1)), Scalar(q.at(2)), Scalar(q.at(3)));
}

MultiPoly parse_lmn(const std::string& s) { return parse_form(s, Ambient::net_plane(), 4); }

/// Counts passes of a sampled property.
struct Tally {
  std::string name;
  int passed = 0, total = 0;
  void record(bool ok) {
    ++total;
    if (ok) ++passed;
  }
  bool ok() const { return passed == total && total > 0; }
  std::string text() const { return name + ": " + std::to_string(passed) + "/" + std::to_string(total); }
};

}  // namespace

SevenPointNet random_seven_point_net(std::mt19937_64& rng) {
  while (true) {
    std::vector<std::array<Rational, 4>> pts;
    for (int i = 0; i < 7; ++i)
      pts.push_back({Rational(uniform(rng, -6, 6)), Rational(uniform(rng, -6, 6)), Rational(uniform(rng, -6, 6)),
                     Rational(uniform(rng, 1, 6))});
    try {
      QuadricNet net = net_through_points(pts);
      auto bl = base_locus(net);
      if (!bl.finite || bl.points.size() != 8 || bl.accounted_length != 8) continue;
      bool rational = std::all_of(bl.points.begin(), bl.points.end(), [](const BasePoint& b) {
        return std::all_of(b.point.c.begin(), b.point.c.end(), [](const Scalar& s) { return s.is_rational(); });
      });
      if (!rational) continue;
      return {net, pts};
    } catch (const MathError&) {
    }
  }
}

CriterionResult check_discriminants(const SuiteOptions&) {
  CriterionResult r{"AC1", "discriminant exactness", false, {}, 0};
  auto t0 = Clock::now();
  r.passed = true;
  for (const auto& e : example_nets()) {
    auto t = Clock::now();
    MultiPoly d = discriminant(e.net()).poly();
    bool ok = d == parse_lmn(e.discriminant);
    bool fast = since(t) < 1.0;
    r.passed = r.passed && ok && fast;
    r.details.push_back(e.name + ": " + (ok ? "exact match" : "MISMATCH " + d.to_string({"l", "m", "n"})) +
                        (fast ? "" : " (over 1 s)"));
  }
  r.seconds = since(t0);
  return r;
}

CriterionResult check_singularities(const SuiteOptions& opt) {
  CriterionResult r{"AC2", "singularity classification", false, {}, 0};
  auto t0 = Clock::now();
  r.passed = true;
  for (const auto& e : example_nets()) {
    auto t = Clock::now();
    auto got = singularity_names(parse_lmn(e.discriminant), opt.cap);
    auto want = e.singularities;
    std::sort(want.begin(), want.end());
    bool ok = got == want;
    bool fast = since(t) < 2.0;
    r.passed = r.passed && ok && fast;
    r.details.push_back(e.name + ": " + join(got) + (ok ? "" : " expected " + join(want)) + (fast ? "" : " (over 2 s)"));
  }
  r.seconds = since(t0);
  return r;
}

CriterionResult check_base_loci(const SuiteOptions&) {
  CriterionResult r{"AC3", "base loci", false, {}, 0};
  auto t0 = Clock::now();
  r.passed = true;
  const std::vector<std::pair<std::string, std::vector<long>>> multisets{
      {"A4", {3, 2, 1, 2}}, {"A5-a0", {4, 2, 2}}, {"A5-a-4", {4, 2, 1, 1}}, {"A6", {3, 4, 1}}, {"E7", {8}}};
  for (const auto& [name, want] : multisets) {
    const auto& e = example_net(name);
    auto t = Clock::now();
    auto bl = base_locus(e.net());
    std::vector<long> got;
    bool points_ok = bl.finite && bl.points.size() == e.base_points.size();
    for (const auto& p : bl.points) {
      got.push_back(p.multiplicity);
      auto it = std::find_if(e.base_points.begin(), e.base_points.end(),
                             [&](const auto& bp) { return point_from_text(bp.first) == p.point; });
      if (it == e.base_points.end() || it->second != p.multiplicity) points_ok = false;
    }
    auto a = got, b = want;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    bool ok = bl.finite && a == b && bl.accounted_length == 8 && bl.residual.empty() && points_ok;
    bool fast = since(t) < 5.0;
    r.passed = r.passed && ok && fast;
    r.details.push_back(name + ": " + join(got) + " total " + std::to_string(bl.accounted_length) +
                        (ok ? "" : " expected " + join(want)) + (fast ? "" : " (over 5 s)"));
  }
  r.seconds = since(t0);
  return r;
}

CriterionResult check_verdicts(const SuiteOptions& opt) {
  CriterionResult r{"AC4", "stability verdicts", false, {}, 0};
  auto t0 = Clock::now();
  r.passed = true;
  for (const auto& e : example_nets()) {
    auto v = decide_net_stability(e.net(), opt.cap);
    bool ok = v.status == e.verdict;
    r.passed = r.passed && ok;
    r.details.push_back(e.name + ": " + to_string(v.status) + (ok ? "" : std::string(" expected ") + to_string(e.verdict)));
  }
  std::mt19937_64 rng(opt.seed);
  auto typical = random_seven_point_net(rng);
  auto v = decide_net_stability(typical.net, opt.cap);
  bool ok = v.status == Verdict::Stable;
  r.passed = r.passed && ok;
  r.details.push_back(std::string("seven-point net: ") + to_string(v.status));
  r.seconds = since(t0);
  return r;
}

CriterionResult check_atlas(const SuiteOptions& opt) {
  CriterionResult r{"AC5", "atlas reproduction", false, {}, 0};
  auto t0 = Clock::now();
  auto e = enumerate_atlas();
  std::ostringstream s;
  s << "enumerate: " << e.entries.size() << " distinct triples, " << e.maximal_count() << " maximal, rows maximal {";
  for (std::size_t i = 0; i < e.rows_maximal.size(); ++i) s << (i ? "," : "") << e.rows_maximal[i];
  s << "}, unmatched " << e.unmatched.size();
  r.details.push_back(s.str());
  for (const auto& [row, idx] : e.rows_contained)
    r.details.push_back("row " + std::to_string(row) + " is contained in the row " +
                        std::to_string(e.entries[idx].named_row) + " triple, not maximal");
  for (int row : e.rows_missing) r.details.push_back("row " + std::to_string(row) + " not found");
  int total = 0, passed = 0, segre_misses = 0;
  for (const auto& row : atlas_rows()) {
    auto rep = verify_atlas_row(row.index, opt.trials, opt.seed);
    int core = 0;
    for (const auto& t : rep.trials) {
      ++total;
      if (t.error.empty() && t.destabilized && t.shape_ok && t.unstable) {
        ++passed;
        ++core;
      }
      if (t.error.empty() && !t.segre_ok) {
        ++segre_misses;
        std::string found;
        for (const auto& s : t.segre_found) found += (found.empty() ? "" : " ") + s;
        r.details.push_back("row " + std::to_string(row.index) + " trial " + std::to_string(t.trial) +
                            ": subpencil Segre symbols " + found + " differ from the generic ones");
      }
    }
    if (core != static_cast<int>(rep.trials.size()))
      r.details.push_back("row " + std::to_string(row.index) + ": " + std::to_string(core) + "/" +
                          std::to_string(rep.trials.size()) + " instances destabilized, shaped and unstable");
  }
  r.details.push_back("verify: " + std::to_string(passed) + "/" + std::to_string(total) +
                      " instances destabilized, shaped and unstable; " + std::to_string(segre_misses) +
                      " with non-generic subpencils");
  r.seconds = since(t0);
  bool fast = r.seconds < 120.0;
  if (!fast) r.details.push_back("over 120 s");
  r.passed = e.exactly_named() && passed == total && total == 12 * opt.trials && fast;
  return r;
}

CriterionResult check_hm_anchor(const SuiteOptions& opt) {
  CriterionResult r{"AC6", "Hilbert-Mumford anchor", false, {}, 0};
  auto t0 = Clock::now();
  auto triple = atlas_row(1).triple();
  const auto& lambda = catalog_entry("lambda1").lambda;
  Tally t{"row-1 instances with value -6 under lambda1"};
  for (int k = 0; k < opt.trials; ++k) {
    auto rng = trial_rng(opt.seed, 1, k);
    auto f = instantiate_generic(triple, rng).forms();
    t.record(pivot_weight_sum(LinearSystemOfForms({f[0], f[1], f[2]}), lambda) == -6);
  }
  r.details.push_back(t.text());
  r.passed = t.ok();
  r.seconds = since(t0);
  return r;
}

CriterionResult check_segre_anchors(const SuiteOptions& opt) {
  CriterionResult r{"AC7", "Segre anchors", false, {}, 0};
  auto t0 = Clock::now();
  auto amb = Ambient::projective3();
  auto q = [&](const std::string& s) { return Quadric4::from_form(parse_form(s, amb, 2)); };
  std::mt19937_64 rng(opt.seed);
  auto smooth = [&]() {
    while (true) {
      auto f = random_form(rng, 4, 2, 9);
      auto c = Quadric4::from_form(f);
      if (quadric_rank(c) == 4 && f.size() == 10) return c;
    }
  };
  struct Anchor {
    std::string label;
    PencilOfQuadrics pencil;
    std::string expected;
  };
  std::vector<Anchor> anchors{
      {"double plane with a smooth quadric", {q("x0^2"), smooth()}, "[(1,1,1),1]"},
      {"generic pencil", {smooth(), smooth()}, "[1,1,1,1]"},
      {"cone with a tangent smooth quadric", {q("x1^2 + x3^2"), q("2*x0*x1 + x2^2 + x3^2")}, "[(1,2),1]"},
      {"two tangency blocks", {q("x1^2 + 2*x2*x3 + x3^2"), q("2*x0*x1 + 2*x2*x3")}, "[2,2]"},
      {"plane pair with a smooth quadric", {q("x2^2 + 2*x3^2"), q("x0^2 + x1^2 + x2^2 + x3^2")}, "[(1,1),1,1]"},
  };
  r.passed = true;
  for (const auto& a : anchors) {
    std::string got = segre_symbol(a.pencil).to_string();
    bool ok = got == canonical_segre_text(a.expected);
    r.passed = r.passed && ok;
    r.details.push_back(a.label + ": " + got + (ok ? "" : " expected " + canonical_segre_text(a.expected)));
  }
  r.seconds = since(t0);
  return r;
}

CriterionResult check_gale_suite(const SuiteOptions& opt) {
  CriterionResult r{"AC8", "Gale suite", false, {}, 0};
  auto t0 = Clock::now();
  std::mt19937_64 rng(opt.seed);
  Tally syz{"syzygy on random pointed nets"};
  int degenerate = 0;
  while (syz.total < 100) {
    std::array<long, 4> p{uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3), nonzero(rng, 3)};
    try {
      auto net = QuadricNet::from_forms(quadric_through(rng, p), quadric_through(rng, p), quadric_through(rng, p));
      auto g = gale_transform(net, Point3::make(p[0], p[1], p[2], p[3]));
      syz.record(gale_syzygy_holds(g));
    } catch (const MathError&) {
      ++degenerate;
    }
  }
  r.details.push_back(syz.text() + (degenerate ? " (" + std::to_string(degenerate) + " degenerate samples redrawn)" : ""));

  Tally proj{"seven-point projections on typical nets"};
  for (int k = 0; k < 10; ++k) {
    auto s = random_seven_point_net(rng);
    auto bl = base_locus(s.net);
    std::optional<Point3> eighth;
    for (const auto& bp : bl.points) {
      bool given = std::any_of(s.points.begin(), s.points.end(), [&](const auto& q) {
        return Point3::make(q[0], q[1], q[2], q[3]) == bp.point;
      });
      if (!given) eighth = bp.point;
    }
    if (!eighth) {
      proj.record(false);
      continue;
    }
    auto v = verify_gale(s.net, *eighth);
    proj.record(v.all_common_zeros && v.projected.size() == 7 && v.accounted == 7);
  }
  r.details.push_back(proj.text());

  const auto& e7 = example_net("E7");
  auto ge7 = gale_transform(e7.net(), Point3::make(0, 0, 0, 1));
  auto ve7 = cubic_net_stability(ge7.cubics, discriminant(e7.net()).poly(), opt.cap);
  bool e7_ok = ve7.status == CubicVerdict::Unstable;
  r.details.push_back(std::string("E7 net with discriminant provenance: ") + to_string(ve7.status));

  auto typical = random_seven_point_net(rng);
  auto gt = gale_transform(typical.net, typical.net.forms()[0].is_zero() ? Point3::make(0, 0, 0, 1)
                                                                          : base_locus(typical.net).points.front().point);
  bool good = is_good_net(typical.net, opt.cap);
  auto vt = cubic_net_stability(gt.cubics, discriminant(typical.net).poly(), opt.cap);
  bool typ_ok = good && vt.status == CubicVerdict::Stable;
  r.details.push_back(std::string("typical net with discriminant provenance: ") + to_string(vt.status));

  r.passed = syz.ok() && proj.ok() && e7_ok && typ_ok;
  r.seconds = since(t0);
  return r;
}

CriterionResult check_properties(const SuiteOptions& opt) {
  CriterionResult r{"AC9", "property suites", false, {}, 0};
  auto t0 = Clock::now();
  std::mt19937_64 rng(opt.seed);
  std::vector<Tally> tallies;

  {
    Tally t{"Bareiss determinant equals cofactor expansion"};
    for (int k = 0; k < 50; ++k) {
      PolyMatrix m(4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = random_poly(rng, 3, 1, 3);
      t.record(det_poly_matrix(m) == det_cofactor(m));
    }
    tallies.push_back(t);
  }
  {
    Tally t{"resultant multiplicativity"};
    MultiPoly x2 = MultiPoly::variable(2, 0).pow(2);
    for (int k = 0; k < 50; ++k) {
      MultiPoly f = random_poly(rng, 2, 2, 4) + x2, g = random_poly(rng, 2, 1, 4) + MultiPoly::variable(2, 0),
                h = random_poly(rng, 2, 2, 4) + x2;
      t.record(resultant(f * g, h, 0) == resultant(f, h, 0) * resultant(g, h, 0));
    }
    tallies.push_back(t);
  }
  {
    Tally t{"squarefree decomposition reconstructs"};
    for (int k = 0; k < 50; ++k) {
      MultiPoly a = random_poly(rng, 2, 1, 3), b = random_poly(rng, 2, 2, 3);
      MultiPoly f = a.pow(2) * b;
      if (f.is_zero() || f.is_constant()) {
        --k;
        continue;
      }
      MultiPoly prod = MultiPoly::constant(2, 1);
      for (const auto& part : squarefree_decomposition(f)) prod *= part.factor.pow(static_cast<unsigned>(part.multiplicity));
      t.record(prod.primitive() == f.primitive());
    }
    tallies.push_back(t);
  }
  {
    Tally t{"Euler relation for quartic forms"};
    for (int k = 0; k < 50; ++k) {
      MultiPoly f = random_form(rng, 3, 4, 5);
      MultiPoly s(3);
      for (std::size_t i = 0; i < 3; ++i) s += MultiPoly::variable(3, i) * f.derivative(i);
      t.record(s == f * Scalar(4));
    }
    tallies.push_back(t);
  }
  {
    Tally t{"singularity types invariant under coordinate change"};
    for (const auto& e : example_nets()) {
      MultiPoly d = parse_lmn(e.discriminant);
      auto want = singularity_names(d, opt.cap);
      for (int k = 0; k < 4; ++k) {
        auto g = random_invertible(rng, 3, 2);
        t.record(singularity_names(d.compose(linear_images(g)), opt.cap) == want);
      }
    }
    tallies.push_back(t);
  }
  {
    Tally scale{"discriminant scales by det(g)^2 under congruence"}, deg{"discriminant has degree 4 or vanishes"},
        rank{"quadric rank invariant under congruence"};
    for (int k = 0; k < 20; ++k) {
      QuadricNet net = [&] {
        while (true) {
          try {
            return QuadricNet::from_forms(random_form(rng, 4, 2, 4), random_form(rng, 4, 2, 4), random_form(rng, 4, 2, 4));
          } catch (const MathError&) {
          }
        }
      }();
      auto g = random_invertible(rng, 4, 2);
      Scalar det = determinant(g);
      MultiPoly d = discriminant(net).poly();
      scale.record(discriminant(net_congruence_transform(net, g)).poly() == d * (det * det));
      deg.record(d.is_zero() || d.total_degree() == 4);
      const auto& q = net.generators()[0];
      rank.record(quadric_rank(Quadric4(transpose(g) * q.matrix() * g)) == quadric_rank(q));
    }
    tallies.push_back(scale);
    tallies.push_back(deg);
    tallies.push_back(rank);
  }
  {
    Tally chain{"invariant factors divide in a chain of total degree 4"};
    for (int k = 0; k < 20; ++k) {
      PencilOfQuadrics p{Quadric4::from_form(random_form(rng, 4, 2, 3)), Quadric4::from_form(random_form(rng, 4, 2, 3))};
      try {
        auto s = invariant_factors(p);
        int total = 0;
        bool ok = true;
        for (std::size_t i = 0; i < 4; ++i) {
          total += s[i].degree();
          if (i + 1 < 4) {
            UniPoly qq, rr;
            divmod(s[i + 1], s[i], qq, rr);
            ok = ok && rr.is_zero();
          }
        }
        chain.record(ok && total == 4 && segre_symbol(p).weight() == 4);
      } catch (const MathError& e) {
        chain.record(e.kind() == ErrorKind::NoSmoothMember);
      }
    }
    tallies.push_back(chain);
    Tally inv{"Segre symbol invariant under congruence and generator swap"};
    const std::vector<std::pair<std::string, std::string>> seeds{
        {"x2^2 + 2*x3^2", "x0^2 + x1^2 + x2^2 + x3^2"}, {"x1^2 + 2*x2*x3 + x3^2", "2*x0*x1 + 2*x2*x3"},
        {"x1^2 + x3^2", "2*x0*x1 + x2^2 + x3^2"},       {"x0^2", "x0^2 + x1^2 + x2^2 + x3^2"},
        {"x1^2 + x3^2", "2*x0*x1 + 2*x2*x3"},           {"2*x1*x2", "2*x0*x2 + x1^2 + x3^2"}};
    auto amb = Ambient::projective3();
    for (int k = 0; k < 10; ++k) {
      const auto& [a, b] = seeds[static_cast<std::size_t>(k) % seeds.size()];
      PencilOfQuadrics p{Quadric4::from_form(parse_form(a, amb, 2)), Quadric4::from_form(parse_form(b, amb, 2))};
      std::string want = segre_symbol(p).to_string();
      auto g = random_invertible(rng, 4, 3);
      PencilOfQuadrics moved{Quadric4(transpose(g) * p.first.matrix() * g), Quadric4(transpose(g) * p.second.matrix() * g)};
      PencilOfQuadrics swapped{p.second, p.first};
      inv.record(segre_symbol(moved).to_string() == want && segre_symbol(swapped).to_string() == want);
    }
    tallies.push_back(inv);
  }
  {
    auto random_system = [&](std::size_t nvars, int degree) {
      while (true) {
        std::vector<MultiPoly> b;
        for (int i = 0; i < 3; ++i) b.push_back(random_form(rng, nvars, degree, 4));
        try {
          return LinearSystemOfForms(b);
        } catch (const MathError&) {
        }
      }
    };
    auto random_lambda = [&](std::size_t n) {
      std::vector<long> w(n);
      long sum = 0;
      for (std::size_t i = 0; i + 1 < n; ++i) sum += (w[i] = uniform(rng, -5, 5));
      w[n - 1] = -sum;
      return OneParamSubgroup(w);
    };
    Tally basis{"pivot weight sum independent of basis"}, serial{"pivot weight sum parallel equals serial"};
    for (int k = 0; k < 20; ++k) {
      auto v = random_system(4, 2);
      auto l = random_lambda(4);
      auto m = random_invertible(rng, 3, 3);
      std::vector<MultiPoly> mixed;
      for (std::size_t i = 0; i < 3; ++i) {
        MultiPoly f(4);
        for (std::size_t j = 0; j < 3; ++j) f += v.basis()[j] * m(i, j);
        mixed.push_back(f);
      }
      long s = pivot_weight_sum(v, l);
      basis.record(pivot_weight_sum(LinearSystemOfForms(mixed), l) == s);
      serial.record(pivot_weight_sum_serial(v, l) == s);
    }
    Tally diag{"pivot weight sum unchanged by diagonal g"}, perm{"pivot weight sum equivariant under permutations"};
    for (int k = 0; k < 20; ++k) {
      auto v = random_system(4, 2);
      auto l = random_lambda(4);
      ScalarMatrix d(4, 4);
      for (std::size_t i = 0; i < 4; ++i) d(i, i) = Scalar(nonzero(rng, 5));
      long s = pivot_weight_sum(v, l);
      diag.record(pivot_weight_sum(act(d, v), l) == s);
      std::vector<std::size_t> pi{0, 1, 2, 3};
      std::shuffle(pi.begin(), pi.end(), rng);
      ScalarMatrix p(4, 4);
      std::vector<long> moved(4);
      for (std::size_t i = 0; i < 4; ++i) {
        p(i, pi[i]) = Scalar(1);
        moved[pi[i]] = l[i];
      }
      perm.record(pivot_weight_sum(act(p, v), OneParamSubgroup(moved)) == s);
    }
    Tally bound{"pivot weight sum bounded by generator maxima"}, single{"single form gives its maximal weight"};
    for (int k = 0; k < 30; ++k) {
      auto v = random_system(3, 3);
      auto l = random_lambda(3);
      long b = 0;
      for (const auto& f : v.basis()) b += max_weight(f, l);
      bound.record(pivot_weight_sum(v, l) <= b);
      single.record(pivot_weight_sum(LinearSystemOfForms({v.basis()[0]}), l) == max_weight(v.basis()[0], l));
    }
    for (auto* t : {&basis, &serial, &diag, &perm, &bound, &single}) tallies.push_back(*t);
  }
  {
    Tally neg{"maximal triples have negative sums and cannot grow"};
    const auto& mons = quadric_monomials();
    for (const auto& entry : lambda_catalog())
      for (const auto& I : mons)
        for (const auto& J : mons) {
          auto t = maximal_set(entry.lambda, I, J);
          if (t.sets[0].empty()) continue;
          bool ok = t.all_sums_negative();
          if (t.maximal)
            for (std::size_t f = 0; f < 3 && ok; ++f)
              for (const auto& k : mons) {
                if (std::find(t.sets[f].begin(), t.sets[f].end(), k) != t.sets[f].end()) continue;
                auto grown = t;
                grown.sets[f].push_back(k);
                if (grown.all_sums_negative()) ok = false;
              }
          neg.record(ok);
        }
    tallies.push_back(neg);
    Tally det{"atlas enumeration and row trials parallel equal serial"};
    auto a = enumerate_atlas(), b = enumerate_atlas_serial();
    bool same = a.entries.size() == b.entries.size();
    for (std::size_t i = 0; same && i < a.entries.size(); ++i)
      same = a.entries[i].key == b.entries[i].key && a.entries[i].sources.size() == b.entries[i].sources.size();
    det.record(same);
    auto ra = verify_atlas_row(6, 4, opt.seed), rb = verify_atlas_row_serial(6, 4, opt.seed);
    bool rows_same = ra.trials.size() == rb.trials.size();
    for (std::size_t i = 0; rows_same && i < ra.trials.size(); ++i)
      rows_same = ra.trials[i].delta == rb.trials[i].delta && ra.trials[i].hm_value == rb.trials[i].hm_value;
    det.record(rows_same);
    tallies.push_back(det);
  }
  {
    Tally anti{"swapping generators negates the Gale cubic"}, equi{"Gale transform equivariant under the plane action"};
    for (int k = 0; k < 20; ++k) {
      std::array<long, 4> p{uniform(rng, -3, 3), uniform(rng, -3, 3), nonzero(rng, 3), uniform(rng, -3, 3)};
      auto a = quadric_through(rng, p), b = quadric_through(rng, p), c = quadric_through(rng, p);
      try {
        auto g = gale_transform(QuadricNet::from_forms(a, b, c), Point3::make(p[0], p[1], p[2], p[3]));
        auto h = gale_transform(QuadricNet::from_forms(b, a, c), Point3::make(p[0], p[1], p[2], p[3]));
        anti.record(h.cubics[0] == -g.cubics[0] && h.cubics[1] == g.cubics[2] && h.cubics[2] == g.cubics[1]);
      } catch (const MathError&) {
        --k;
      }
    }
    for (int k = 0; k < 10; ++k) {
      std::array<long, 4> p{0, 0, 0, 1};
      std::array<MultiPoly, 3> q{quadric_through(rng, p), quadric_through(rng, p), quadric_through(rng, p)};
      auto h = random_invertible(rng, 3, 3);
      auto plane = linear_images(h);
      ScalarMatrix h4(4, 4);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) h4(i, j) = h(i, j);
      h4(3, 3) = Scalar(1);
      auto lift = linear_images(h4);
      try {
        auto g = gale_transform(QuadricNet::from_forms(q[0], q[1], q[2]), Point3::make(0, 0, 0, 1));
        auto gh = gale_transform(QuadricNet::from_forms(q[0].compose(lift), q[1].compose(lift), q[2].compose(lift)),
                                 Point3::make(0, 0, 0, 1));
        bool ok = true;
        for (std::size_t i = 0; i < 3; ++i) ok = ok && gh.cubics[i] == g.cubics[i].compose(plane);
        equi.record(ok);
      } catch (const MathError&) {
        --k;
      }
    }
    tallies.push_back(anti);
    tallies.push_back(equi);
  }
  {
    Tally stable{"stable quartic verdicts have only A1/A2 points"};
    for (int k = 0; k < 5; ++k) {
      auto s = random_seven_point_net(rng);
      auto v = decide_net_stability(s.net, opt.cap);
      bool ok = true;
      if (v.status == Verdict::Stable)
        for (const auto& rec : v.singularities)
          ok = ok && rec.type.kind == SingularityKind::A && rec.type.n <= 2;
      stable.record(ok);
    }
    tallies.push_back(stable);
  }
  {
    Tally rt{"printed forms parse back to the same polynomial"};
    const VarNames names{"x0", "x1", "x2", "x3"};
    for (int k = 0; k < 200; ++k) {
      std::size_t n = static_cast<std::size_t>(uniform(rng, 3, 4));
      MultiPoly f(n);
      for (const auto& m : monomials_of_degree(n, static_cast<int>(uniform(rng, 1, 4))))
        if (uniform(rng, 0, 2) == 0) f.add_term(m, Scalar(make_rational(uniform(rng, -30, 30), uniform(rng, 1, 9))));
      if (f.is_zero()) f = MultiPoly::variable(n, 0);
      Ambient amb = n == 4 ? Ambient::projective3() : Ambient::plane();
      VarNames vn(names.begin(), names.begin() + static_cast<long>(n));
      if (n == 3) vn = {"x", "y", "z"};
      rt.record(parse_polynomial(f.to_string(vn), amb) == f);
    }
    tallies.push_back(rt);
  }
  {
    Tally same{"reports byte-identical across runs"};
    for (const auto& args : std::vector<std::vector<std::string>>{{"atlas", "verify", "--row", "6", "--trials", "3", "--json"},
                                                                  {"atlas", "enumerate", "--json"}}) {
      std::ostringstream o1, o2, e1, e2;
      int c1 = run_cli(args, o1, e1), c2 = run_cli(args, o2, e2);
      same.record(c1 == c2 && o1.str() == o2.str() && !o1.str().empty());
    }
    tallies.push_back(same);
  }

  r.passed = true;
  for (const auto& t : tallies) {
    r.passed = r.passed && t.ok();
    r.details.push_back(t.text());
  }
  r.seconds = since(t0);
  if (r.seconds >= 60.0) {
    r.passed = false;
    r.details.push_back("over 60 s");
  }
  return r;
}

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& opt) {
  return {check_discriminants(opt), check_singularities(opt), check_base_loci(opt),
          check_verdicts(opt),      check_atlas(opt),         check_hm_anchor(opt),
          check_segre_anchors(opt), check_gale_suite(opt),    check_properties(opt)};
}

}  // namespace quadnet
