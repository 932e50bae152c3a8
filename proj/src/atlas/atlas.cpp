#include "quadnet/atlas/atlas.hpp"

#include <algorithm>
#include <map>

#include "quadnet/algebra/elimination.hpp"
#include "quadnet/curves/plane_curves.hpp"
#include "quadnet/error.hpp"
#include "quadnet/nets/segre.hpp"

namespace quadnet {

namespace {

OneParamSubgroup bar_of(const std::vector<long>& r) { return OneParamSubgroup(r).bar(); }

std::vector<NamedSubgroup> build_catalog() {
  const std::vector<std::vector<long>> base{
      {21, 17, 5, -43}, {9, 1, -3, -7},     {13, -3, -3, -7}, {5, 4, -3, -6},  {29, 21, -11, -39},
      {25, 9, -15, -19}, {31, 19, -9, -41}, {4, 3, 1, -8},    {5, 1, -3, -3},
  };
  std::vector<NamedSubgroup> out;
  for (std::size_t k = 0; k < base.size(); ++k)
    out.push_back({"lambda" + std::to_string(k + 1), OneParamSubgroup(base[k])});
  for (std::size_t k = 0; k < base.size(); ++k)
    out.push_back({"lambda" + std::to_string(k + 1) + "-bar", bar_of(base[k])});
  return out;
}

int monomial_index(const Monomial& m) {
  const auto& mons = quadric_monomials();
  for (std::size_t i = 0; i < mons.size(); ++i)
    if (mons[i] == m) return static_cast<int>(i);
  throw MathError(ErrorKind::InvalidArgument, "not a quadric monomial");
}

std::vector<int> indices(const std::vector<Monomial>& set) {
  std::vector<int> out;
  for (const auto& m : set) out.push_back(monomial_index(m));
  std::sort(out.begin(), out.end());
  return out;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

const std::vector<NamedSubgroup>& lambda_catalog() {
  static const std::vector<NamedSubgroup> catalog = build_catalog();
  return catalog;
}

const NamedSubgroup& catalog_entry(const std::string& name) {
  for (const auto& e : lambda_catalog())
    if (e.name == name) return e;
  throw MathError(ErrorKind::InvalidArgument, "unknown subgroup " + name);
}

const std::vector<Monomial>& quadric_monomials() {
  static const std::vector<Monomial> mons = monomials_of_degree(4, 2);
  return mons;
}

std::string monomial_name(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < 4; ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

Monomial parse_quadric_monomial(const std::string& text) {
  Monomial m;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '*' || text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] != 'x' || i + 1 >= text.size() || text[i + 1] < '0' || text[i + 1] > '3')
      throw MathError(ErrorKind::InvalidArgument, "bad monomial " + text);
    std::size_t v = static_cast<std::size_t>(text[i + 1] - '0');
    i += 2;
    int e = 1;
    if (i < text.size() && text[i] == '^') {
      if (i + 1 >= text.size()) throw MathError(ErrorKind::InvalidArgument, "bad monomial " + text);
      e = text[i + 1] - '0';
      i += 2;
    }
    m.e[v] = static_cast<std::uint16_t>(m.e[v] + e);
  }
  if (m.degree() != 2) throw MathError(ErrorKind::InvalidArgument, "not a quadric monomial: " + text);
  return m;
}

TripleKey MaximalTriple::key() const {
  TripleKey k{indices(sets[0]), indices(sets[1]), indices(sets[2])};
  std::sort(k.begin(), k.end());
  return k;
}

bool MaximalTriple::all_sums_negative() const {
  for (const auto& a : sets[0])
    for (const auto& b : sets[1])
      for (const auto& c : sets[2])
        if (monomial_weight(a, lambda) + monomial_weight(b, lambda) + monomial_weight(c, lambda) >= 0) return false;
  return true;
}

MaximalTriple maximal_set(const OneParamSubgroup& lambda, const Monomial& I, const Monomial& J) {
  if (lambda.size() != 4) throw MathError(ErrorKind::LengthMismatch, "subgroup must act on 4 variables");
  MaximalTriple t{lambda, I, J, {}, false, false};
  const long wi = monomial_weight(I, lambda), wj = monomial_weight(J, lambda);
  for (const auto& k : quadric_monomials()) {
    long w = monomial_weight(k, lambda);
    if (w < -wi - wj) t.sets[0].push_back(k);
    if (w <= wi) t.sets[1].push_back(k);
    if (w <= wj) t.sets[2].push_back(k);
    if ((w == wi && !(k == I)) || (w == wj && !(k == J))) t.threshold_ties = true;
  }
  if (t.sets[0].empty()) return t;
  long max_a = monomial_weight(t.sets[0][0], lambda);
  for (const auto& k : t.sets[0]) max_a = std::max(max_a, monomial_weight(k, lambda));
  // next weight level above a threshold, if any
  auto next_above = [&](long thr) -> std::optional<long> {
    std::optional<long> best;
    for (const auto& k : quadric_monomials()) {
      long w = monomial_weight(k, lambda);
      if (w > thr && (!best || w < *best)) best = w;
    }
    return best;
  };
  t.maximal = true;
  if (auto nb = next_above(wi); nb && max_a + *nb + wj < 0) t.maximal = false;
  if (auto nc = next_above(wj); nc && max_a + wi + *nc < 0) t.maximal = false;
  return t;
}

std::string key_to_string(const TripleKey& key) {
  const auto& mons = quadric_monomials();
  std::string s;
  for (std::size_t f = 0; f < 3; ++f) {
    s += f ? " x {" : "{";
    for (std::size_t i = 0; i < key[f].size(); ++i)
      s += (i ? ", " : "") + monomial_name(mons[static_cast<std::size_t>(key[f][i])]);
    s += "}";
  }
  return s;
}

bool key_contained(const TripleKey& a, const TripleKey& b) {
  std::array<int, 3> p{0, 1, 2};
  do {
    if (subset(a[0], b[static_cast<std::size_t>(p[0])]) && subset(a[1], b[static_cast<std::size_t>(p[1])]) &&
        subset(a[2], b[static_cast<std::size_t>(p[2])]))
      return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

MaximalTriple AtlasRow::triple() const { return maximal_set(catalog_entry(lambda_name).lambda, I, J); }

const std::vector<AtlasRow>& atlas_rows() {
  using S = DeltaShape;
  auto m = parse_quadric_monomial;
  // generators are instantiated in the order (B, C, A): index 2 carries A
  static const std::vector<AtlasRow> rows{
      {1, "lambda1", m("x0^2"), m("x0^2"), S::BinaryQuarticPlusLinearInThird, "g4(x,y) + z*g3(x,y)", "at least D4",
       "two smooth quadrics and a double plane",
       {{2, 0, "[(1,1,1),1]"}, {2, 1, "[(1,1,1),1]"}}},
      {2, "lambda1", m("x0*x3"), m("x0^2"), S::SquareOfLineTimesConic, "x^2*g2(x,y,z), not a double conic",
       "non-reduced", "smooth quadric and two plane pairs sharing a plane", {}},
      {3, "lambda2", m("x1*x3"), m("x0*x3"), S::SquareOfBinaryLineTimesConic, "g1(x,y)^2*g2(x,y,z)", "non-reduced",
       "two smooth quadrics and a cone", {}},
      {4, "lambda3", m("x1^2"), m("x0*x1"), S::SquareOfLineTimesConic, "x^2*g2(x,y,z), not a double conic",
       "non-reduced", "smooth quadric and two quadric cones", {}},
      {5, "lambda4", m("x2^2"), m("x0^2"), S::SquareOfLineTimesConic, "x^2*g2(x,y,z), not a double conic",
       "non-reduced", "smooth quadric and two plane pairs in x2, x3", {}},
      {6, "lambda5", m("x2*x3"), m("x0*x3"), S::LineTimesCuspidalCubic, "x*(x*g2(x,y,z) + z^3)", "at least A5",
       "smooth quadric, a plane pair and a cone", {{2, 0, "[(1,1),1,1]"}}},
      {7, "lambda5", m("x0*x3"), m("x0*x2"), S::SquareOfLineTimesSquaredLine, "x^2*g1(x,y,z)^2, not a double conic",
       "non-reduced", "smooth quadric and two cones", {{1, 2, "[2,2]"}, {0, 1, "[2,2]"}}},
      {8, "lambda2-bar", m("x0*x3"), m("x0*x2"), S::LineTimesSpecialCubic,
       "x*(g3(x,y) + x*y*z + a*z*x^2 + b*z^2*x)", "at least A5", "smooth quadric, a plane pair and a cone", {}},
      {9, "lambda6", m("x0*x2"), m("x0*x2"), S::BinaryQuarticPlusMixedTerm, "g4(x,y) + x*z*g2(x,y)", "at least D4",
       "two smooth quadrics and a plane pair", {{2, 0, "[(2,2)]"}, {2, 1, "[(2,2)]"}}},
      {10, "lambda7", m("x0*x3"), m("x2^2"), S::SquareOfLineTimesSquaredLine, "x^2*g1(x,y,z)^2, not a double conic",
       "non-reduced", "smooth quadric and two cones", {{2, 0, "[2,2]"}, {2, 1, "[2,2]"}}},
      {11, "lambda8", m("x1*x3"), m("x1*x3"), S::SquareOfLineTimesConic, "x^2*g2(x,y,z), not a double conic",
       "non-reduced", "smooth quadric, a plane pair and a cone", {{2, 0, "[(1,1),1,1]"}, {2, 1, "[(1,1),1,1]"}}},
      {12, "lambda9", m("x1^2"), m("x0*x2"), S::BinaryQuarticPlusLinearInThird, "g4(x,y) + z*g3(x,y)", "at least D4",
       "two smooth quadrics and a cone", {{2, 0, "[(2,1),1]"}, {2, 1, "[(2,1),1]"}}},
  };
  return rows;
}

const AtlasRow& atlas_row(int index) {
  if (index < 1 || index > static_cast<int>(atlas_rows().size()))
    throw MathError(ErrorKind::InvalidArgument, "atlas row must be between 1 and 12");
  return atlas_rows()[static_cast<std::size_t>(index - 1)];
}

std::size_t AtlasEnumeration::maximal_count() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const AtlasEntry& e) { return e.globally_maximal; }));
}

bool AtlasEnumeration::exactly_named() const {
  return maximal_count() == atlas_rows().size() && unmatched.empty() && rows_maximal.size() == atlas_rows().size();
}

namespace {

struct Candidate {
  bool keep = false;
  TripleKey key;
  bool ties = false;
};

AtlasEnumeration aggregate(const std::vector<Candidate>& cands) {
  const auto& cat = lambda_catalog();
  const auto& mons = quadric_monomials();
  const std::size_t n = mons.size();
  std::map<TripleKey, AtlasEntry> distinct;
  for (std::size_t idx = 0; idx < cands.size(); ++idx) {
    const auto& c = cands[idx];
    if (!c.keep) continue;
    auto& e = distinct[c.key];
    e.key = c.key;
    e.threshold_ties = e.threshold_ties || c.ties;
    e.sources.push_back({cat[idx / (n * n)].name, mons[(idx / n) % n], mons[idx % n]});
  }
  AtlasEnumeration out;
  for (auto& [k, e] : distinct) out.entries.push_back(std::move(e));
  for (auto& e : out.entries) {
    e.globally_maximal = true;
    for (const auto& o : out.entries)
      if (!(o.key == e.key) && key_contained(e.key, o.key)) e.globally_maximal = false;
  }
  for (const auto& row : atlas_rows()) {
    TripleKey rk = row.triple().key();
    bool found = false;
    for (std::size_t i = 0; i < out.entries.size(); ++i) {
      if (out.entries[i].key == rk) {
        out.entries[i].named_row = row.index;
        if (out.entries[i].globally_maximal) {
          out.rows_maximal.push_back(row.index);
          found = true;
        }
      }
    }
    if (found) continue;
    for (std::size_t i = 0; i < out.entries.size() && !found; ++i)
      if (out.entries[i].globally_maximal && key_contained(rk, out.entries[i].key)) {
        out.rows_contained.push_back({row.index, i});
        found = true;
      }
    if (!found) out.rows_missing.push_back(row.index);
  }
  for (std::size_t i = 0; i < out.entries.size(); ++i)
    if (out.entries[i].globally_maximal && out.entries[i].named_row == 0) out.unmatched.push_back(i);
  return out;
}

AtlasEnumeration enumerate(bool parallel) {
  const auto& cat = lambda_catalog();
  const auto& mons = quadric_monomials();
  const std::size_t n = mons.size();
  const long total = static_cast<long>(cat.size() * n * n);
  std::vector<Candidate> cands(static_cast<std::size_t>(total));
#pragma omp parallel for if (parallel) schedule(dynamic, 16)
  for (long idx = 0; idx < total; ++idx) {
    auto u = static_cast<std::size_t>(idx);
    MaximalTriple t = maximal_set(cat[u / (n * n)].lambda, mons[(u / n) % n], mons[u % n]);
    if (!t.maximal) continue;
    cands[u] = {true, t.key(), t.threshold_ties};
  }
  return aggregate(cands);
}

}  // namespace

AtlasEnumeration enumerate_atlas() { return enumerate(true); }
AtlasEnumeration enumerate_atlas_serial() { return enumerate(false); }

QuadricNet instantiate_generic(const MaximalTriple& triple, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> mag(1, 20), sign(0, 1);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::array<MultiPoly, 3> f{MultiPoly(4), MultiPoly(4), MultiPoly(4)};
    const std::array<std::size_t, 3> order{1, 2, 0};
    for (std::size_t g = 0; g < 3; ++g)
      for (const auto& k : triple.sets[order[g]]) {
        long v = mag(rng);
        f[g].add_term(k, Scalar(sign(rng) ? v : -v));
      }
    try {
      return QuadricNet::from_forms(f[0], f[1], f[2]);
    } catch (const MathError& e) {
      if (e.kind() != ErrorKind::Degenerate) throw;
    }
  }
  throw MathError(ErrorKind::Degenerate, "generic instance has dependent generators after 3 attempts");
}

namespace {

int exp_of(const Monomial& m, std::size_t v) { return m.e[v]; }

/// Shape test with the roles (x, y, z) given by a permutation of (l, m, n).
bool shape_under(const MultiPoly& d, DeltaShape shape, std::size_t x, std::size_t y, std::size_t z) {
  switch (shape) {
    case DeltaShape::BinaryQuarticPlusLinearInThird:
      for (const auto& [mono, c] : d.terms())
        if (exp_of(mono, z) > 1) return false;
      return true;
    case DeltaShape::BinaryQuarticPlusMixedTerm:
      for (const auto& [mono, c] : d.terms()) {
        if (exp_of(mono, z) == 0) continue;
        if (exp_of(mono, z) > 1 || exp_of(mono, x) == 0) return false;
      }
      return true;
    case DeltaShape::SquareOfLineTimesConic:
      for (const auto& [mono, c] : d.terms())
        if (exp_of(mono, x) < 2) return false;
      return !double_smooth_conic_test(d);
    case DeltaShape::SquareOfLineTimesSquaredLine: {
      for (const auto& [mono, c] : d.terms())
        if (exp_of(mono, x) < 2) return false;
      MultiPoly xx = MultiPoly::variable(3, x).pow(2);
      auto parts = squarefree_decomposition(exact_divide(d, xx));
      return parts.size() == 1 && parts[0].multiplicity == 2 && parts[0].factor.total_degree() == 1 &&
             !double_smooth_conic_test(d);
    }
    case DeltaShape::SquareOfBinaryLineTimesConic:
      for (const auto& part : squarefree_decomposition(d))
        if (part.multiplicity >= 2 && part.factor.total_degree() == 1 && !part.factor.involves(z)) return true;
      return false;
    case DeltaShape::LineTimesCuspidalCubic:
      for (const auto& [mono, c] : d.terms()) {
        if (exp_of(mono, x) == 0) return false;
        if (exp_of(mono, x) == 1 && exp_of(mono, z) != 3) return false;
      }
      return true;
    case DeltaShape::LineTimesSpecialCubic:
      for (const auto& [mono, c] : d.terms()) {
        int ex = exp_of(mono, x), ey = exp_of(mono, y), ez = exp_of(mono, z);
        if (ex == 0) return false;
        // cofactor exponents
        int cx = ex - 1;
        bool binary_cubic = ez == 0;
        bool listed = (cx == 1 && ey == 1 && ez == 1) || (cx == 2 && ez == 1) || (cx == 1 && ez == 2);
        if (!binary_cubic && !listed) return false;
      }
      return true;
  }
  return false;
}

}  // namespace

bool check_delta_shape(const MultiPoly& delta, DeltaShape shape) {
  if (delta.nvars() != 3 || delta.is_zero() || delta.total_degree() != 4) return false;
  std::array<std::size_t, 3> p{0, 1, 2};
  do {
    if (shape_under(delta, shape, p[0], p[1], p[2])) {
      if (shape == DeltaShape::BinaryQuarticPlusLinearInThird || shape == DeltaShape::BinaryQuarticPlusMixedTerm) {
        std::array<Scalar, 3> pt{0, 0, 0};
        pt[p[2]] = 1;
        if (multiplicity_at(delta, PlanePoint::make(pt[0], pt[1], pt[2])) < 3) continue;
      }
      return true;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::mt19937_64 trial_rng(std::uint64_t seed, int row, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

int RowReport::passed() const {
  return static_cast<int>(std::count_if(trials.begin(), trials.end(), [](const RowTrial& t) { return t.passed(); }));
}

namespace {

RowTrial run_trial(const AtlasRow& row, const MaximalTriple& triple, std::uint64_t seed, int k) {
  RowTrial t;
  t.trial = k;
  try {
    auto rng = trial_rng(seed, row.index, k);
    QuadricNet net = instantiate_generic(triple, rng);
    t.forms = net.forms();
    t.hm_value = pivot_weight_sum(LinearSystemOfForms({t.forms[0], t.forms[1], t.forms[2]}), triple.lambda);
    t.destabilized = t.hm_value < 0;
    t.delta = discriminant(net).poly();
    t.shape_ok = check_delta_shape(t.delta, row.shape);
    t.unstable = decide_quartic_stability(t.delta).status == Verdict::Unstable;
    t.segre_ok = true;
    const auto& gens = net.generators();
    for (const auto& ex : row.segre) {
      PencilOfQuadrics p{gens[static_cast<std::size_t>(ex.first)], gens[static_cast<std::size_t>(ex.second)]};
      std::string got = segre_symbol(p).to_string();
      t.segre_found.push_back(got);
      if (got != ex.symbol) t.segre_ok = false;
    }
  } catch (const std::exception& e) {
    t.error = e.what();
  }
  return t;
}

RowReport verify(int row_index, int trials, std::uint64_t seed, bool parallel) {
  const AtlasRow& row = atlas_row(row_index);
  if (trials < 0) throw MathError(ErrorKind::InvalidArgument, "trial count must be nonnegative");
  MaximalTriple triple = row.triple();
  RowReport rep;
  rep.row = row_index;
  rep.seed = seed;
  rep.trials.resize(static_cast<std::size_t>(trials));
#pragma omp parallel for if (parallel) schedule(dynamic, 1)
  for (int k = 0; k < trials; ++k) rep.trials[static_cast<std::size_t>(k)] = run_trial(row, triple, seed, k);
  return rep;
}

}  // namespace

RowReport verify_atlas_row(int row, int trials, std::uint64_t seed) { return verify(row, trials, seed, true); }
RowReport verify_atlas_row_serial(int row, int trials, std::uint64_t seed) { return verify(row, trials, seed, false); }

}  // namespace quadnet
