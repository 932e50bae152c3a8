#include "quadnet/algebra/local_algebra.hpp"

#include <map>
#include <unordered_map>

#include "quadnet/error.hpp"

namespace quadnet {

namespace {

using SparseRow = std::map<std::size_t, Scalar>;

std::vector<Monomial> monomials_below(std::size_t n, int bound) {
  std::vector<Monomial> out;
  for (int d = 0; d < bound; ++d) {
    auto level = monomials_of_degree(n, d);
    out.insert(out.end(), level.rbegin(), level.rend());
  }
  return out;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 0;
    for (auto v : m.e) h = h * 131 + v;
    return h;
  }
};

/// Incremental row echelon basis keyed by leading column.
class EchelonBasis {
 public:
  bool insert(SparseRow row) {
    while (!row.empty()) {
      auto [col, val] = *row.begin();
      auto it = pivots_.find(col);
      if (it == pivots_.end()) {
        Scalar inv = val.inverse();
        for (auto& [c, v] : row) v *= inv;
        pivots_.emplace(col, std::move(row));
        return true;
      }
      Scalar factor = val;
      for (const auto& [c, v] : it->second) {
        auto [pos, inserted] = row.try_emplace(c, -(factor * v));
        if (!inserted) {
          pos->second -= factor * v;
          if (pos->second.is_zero()) row.erase(pos);
        }
      }
    }
    return false;
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace

long truncated_quotient_dimension(const std::vector<MultiPoly>& generators, int degree) {
  if (generators.empty()) throw MathError(ErrorKind::InvalidArgument, "no generators");
  const std::size_t n = generators[0].nvars();
  auto cols = monomials_below(n, degree);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
  EchelonBasis basis;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (!g.coeff(Monomial{}).is_zero()) return 0;  // unit ideal
    int low = g.low_degree();
    for (int s = 0; s + low < degree; ++s) {
      for (const auto& shift : monomials_of_degree(n, s)) {
        SparseRow row;
        for (const auto& [m, c] : g.terms()) {
          if (m.degree() + s >= degree) continue;
          row.emplace(index.at(m * shift), c);
        }
        if (!row.empty()) basis.insert(std::move(row));
      }
    }
  }
  return static_cast<long>(cols.size() - basis.rank());
}

long local_algebra_dimension(const std::vector<MultiPoly>& generators, int cap) {
  for (const auto& g : generators)
    if (!g.is_zero() && !g.coeff(Monomial{}).is_zero()) return 0;
  long prev = truncated_quotient_dimension(generators, 1);
  for (int d = 2; d <= cap + 1; ++d) {
    long cur = truncated_quotient_dimension(generators, d);
    if (cur == prev) return cur;
    prev = cur;
  }
  throw MathError(ErrorKind::NotStabilized, "local algebra did not stabilize below degree " + std::to_string(cap));
}

}  // namespace quadnet
