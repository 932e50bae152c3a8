#include "quadnet/nets/segre.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "quadnet/error.hpp"

namespace quadnet {

namespace {

/// M(t) = second + t * S with S the smooth member, entries in Q[t].
PolyMatrix lambda_matrix(const PencilOfQuadrics& pencil, Rational& smooth_t) {
  smooth_t = smooth_member_search(pencil);
  PolyMatrix m(4, 4, MultiPoly(1));
  MultiPoly t = MultiPoly::variable(1, 0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Scalar s = pencil.first.matrix()(i, j) + Scalar(smooth_t) * pencil.second.matrix()(i, j);
      m(i, j) = MultiPoly::constant(1, pencil.second.matrix()(i, j)) + t * s;
    }
  return m;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  UniPoly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw MathError(ErrorKind::InvalidArgument, "invariant factors do not divide");
  return q;
}

std::string bracket_text(const std::vector<int>& parts) {
  if (parts.size() == 1) return std::to_string(parts[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

}  // namespace

Rational smooth_member_search(const PencilOfQuadrics& pencil) {
  PolyMatrix m(4, 4, MultiPoly(1));
  MultiPoly t = MultiPoly::variable(1, 0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      m(i, j) = MultiPoly::constant(1, pencil.first.matrix()(i, j)) + t * pencil.second.matrix()(i, j);
  UniPoly det = to_unipoly(det_poly_matrix(m), 0);
  if (det.is_zero()) throw MathError(ErrorKind::NoSmoothMember, "every member of the pencil is singular");
  for (long k = 0;; ++k) {
    for (long cand : {k, -k}) {
      if (!det.evaluate(Scalar(cand)).is_zero()) return Rational(cand);
      if (k == 0) break;
    }
  }
}

std::vector<UniPoly> invariant_factors(const PencilOfQuadrics& pencil) {
  Rational t;
  PolyMatrix m = lambda_matrix(pencil, t);
  std::vector<UniPoly> d{UniPoly({Scalar(1)})};
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<std::vector<std::size_t>> sets;
    std::vector<std::size_t> cur;
    subsets(4, k, 0, cur, sets);
    UniPoly g;
    for (const auto& rows : sets)
      for (const auto& cols : sets) {
        PolyMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(rows[i], cols[j]);
        g = gcd(g, to_unipoly(det_poly_matrix(minor), 0));
      }
    d.push_back(g.monic());
  }
  std::vector<UniPoly> s;
  for (std::size_t k = 1; k <= 4; ++k) s.push_back(exact_div(d[k], d[k - 1]));
  return s;
}

SegreSymbol segre_symbol(const PencilOfQuadrics& pencil) {
  auto s = invariant_factors(pencil);
  SegreSymbol sym;
  for (const auto& f : factor_univariate_deg_le4(s[3])) {
    std::vector<int> parts;
    for (int k = 3; k >= 0; --k) {
      int e = 0;
      UniPoly cur = s[static_cast<std::size_t>(k)];
      while (true) {
        UniPoly q, r;
        divmod(cur, f.factor, q, r);
        if (!r.is_zero()) break;
        cur = q;
        ++e;
      }
      if (e > 0) parts.push_back(e);
    }
    std::sort(parts.rbegin(), parts.rend());
    for (int c = 0; c < f.factor.degree(); ++c) sym.brackets.push_back({parts, f.factor});
  }
  std::stable_sort(sym.brackets.begin(), sym.brackets.end(),
                   [](const SegreBracket& a, const SegreBracket& b) { return a.parts > b.parts; });
  return sym;
}

std::string SegreSymbol::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < brackets.size(); ++i) s += (i ? "," : "") + bracket_text(brackets[i].parts);
  return s + "]";
}

int SegreSymbol::weight() const {
  int w = 0;
  for (const auto& b : brackets)
    for (int p : b.parts) w += p;
  return w;
}

std::string canonical_segre_text(const std::string& text) {
  std::vector<std::vector<int>> brackets;
  std::vector<int>* open = nullptr;
  std::string digits;
  auto flush = [&]() {
    if (digits.empty()) return;
    int v = std::stoi(digits);
    digits.clear();
    if (open)
      open->push_back(v);
    else
      brackets.push_back({v});
  };
  std::vector<int> group;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
    } else if (c == '(') {
      group.clear();
      open = &group;
    } else if (c == ')') {
      flush();
      brackets.push_back(group);
      open = nullptr;
    } else if (c == ',' || c == ']' || c == '[' || c == ' ') {
      flush();
    } else {
      throw MathError(ErrorKind::InvalidArgument, "malformed Segre symbol text");
    }
  }
  flush();
  for (auto& b : brackets) std::sort(b.rbegin(), b.rend());
  std::sort(brackets.rbegin(), brackets.rend());
  std::string s = "[";
  for (std::size_t i = 0; i < brackets.size(); ++i) s += (i ? "," : "") + bracket_text(brackets[i]);
  return s + "]";
}

std::string intersection_type_lookup(const std::string& symbol_text) {
  static const std::map<std::string, std::string> table{
      {"[(1,1),1,1]", "two A1 points"},
      {"[2,2]", "two A1 points"},
      {"[(2,1),1]", "one A3 point"},
      {"[(2,2)]", "double line plus two lines"},
      {"[(3,1)]", "D4 point"},
      {"[(1,1,1),1]", "double-conic contact case"},
  };
  auto it = table.find(canonical_segre_text(symbol_text));
  return it == table.end() ? "Unknown" : it->second;
}

std::string intersection_type_lookup(const SegreSymbol& symbol) { return intersection_type_lookup(symbol.to_string()); }

}  // namespace quadnet
