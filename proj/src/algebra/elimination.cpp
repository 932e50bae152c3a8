#include "quadnet/algebra/elimination.hpp"

#include <algorithm>
#include <map>

#include "quadnet/algebra/matrix.hpp"
#include "quadnet/error.hpp"

namespace quadnet {

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  const std::size_t nv = f.nvars();
  int m = f.degree_in(var), n = g.degree_in(var);
  if (f.is_zero() || g.is_zero()) return MultiPoly(nv);
  if (m == 0 && n == 0) throw MathError(ErrorKind::DegenerateResultant, "both polynomials constant in the variable");
  if (m == 0) return f.pow(static_cast<unsigned>(n));
  if (n == 0) return g.pow(static_cast<unsigned>(m));
  auto fc = f.coefficients_in(var);
  auto gc = g.coefficients_in(var);
  const std::size_t size = static_cast<std::size_t>(m + n);
  PolyMatrix s(size, size, MultiPoly(nv));
  // Rows hold coefficients from the top degree down.
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s(static_cast<std::size_t>(i), static_cast<std::size_t>(i + k)) = fc[static_cast<std::size_t>(m - k)];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i + k)) = gc[static_cast<std::size_t>(n - k)];
  return det_poly_matrix(s);
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  const std::size_t nv = a.nvars();
  int db = b.degree_in(var);
  if (b.is_zero()) throw MathError(ErrorKind::InvalidArgument, "pseudo-division by zero");
  MultiPoly lb = b.coefficients_in(var).back();
  MultiPoly r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    int dr = r.degree_in(var);
    MultiPoly lr = r.coefficients_in(var).back();
    Monomial shift;
    shift.e[var] = static_cast<std::uint16_t>(dr - db);
    r = lb * r - lr * MultiPoly::term(nv, shift, Scalar(1)) * b;
  }
  return r;
}

namespace {

/// Highest-index variable appearing in f or g, or -1.
int main_variable(const MultiPoly& f, const MultiPoly& g) {
  for (int v = static_cast<int>(f.nvars()) - 1; v >= 0; --v)
    if (f.involves(static_cast<std::size_t>(v)) || g.involves(static_cast<std::size_t>(v))) return v;
  return -1;
}

MultiPoly gcd_rec(const MultiPoly& f, const MultiPoly& g);

MultiPoly primitive_part_in(const MultiPoly& f, std::size_t var, MultiPoly* content = nullptr) {
  MultiPoly c = content_in(f, var);
  if (content) *content = c;
  return exact_divide(f, c);
}

MultiPoly gcd_rec(const MultiPoly& f, const MultiPoly& g) {
  const std::size_t nv = f.nvars();
  if (f.is_zero()) return g.is_zero() ? g : g.primitive();
  if (g.is_zero()) return f.primitive();
  if (f.is_constant() || g.is_constant()) return MultiPoly::constant(nv, Scalar(1));
  int v = main_variable(f, g);
  std::size_t var = static_cast<std::size_t>(v);
  if (!f.involves(var)) return gcd_rec(f, content_in(g, var));
  if (!g.involves(var)) return gcd_rec(content_in(f, var), g);
  MultiPoly cf(nv), cg(nv);
  MultiPoly a = primitive_part_in(f, var, &cf);
  MultiPoly b = primitive_part_in(g, var, &cg);
  MultiPoly c = gcd_rec(cf, cg);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (true) {
    MultiPoly r = pseudo_remainder(a, b, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      b = MultiPoly::constant(nv, Scalar(1));
      break;
    }
    a = std::move(b);
    b = primitive_part_in(r, var).primitive();
  }
  return (c * primitive_part_in(b, var)).primitive();
}

}  // namespace

MultiPoly content_in(const MultiPoly& f, std::size_t var) {
  if (f.is_zero()) return f;
  MultiPoly c(f.nvars());
  for (const auto& coeff : f.coefficients_in(var)) {
    if (coeff.is_zero()) continue;
    c = gcd_rec(c, coeff);
    if (c.is_constant()) break;
  }
  return c.primitive();
}

MultiPoly gcd_multivar(const MultiPoly& f, const MultiPoly& g) {
  if (!f.is_rational() || !g.is_rational()) throw MathError(ErrorKind::Unsupported, "gcd over an extension field");
  if (f.nvars() != g.nvars()) throw MathError(ErrorKind::LengthMismatch, "polynomial rings differ");
  return gcd_rec(f, g);
}

namespace {

void squarefree_rec(const MultiPoly& f, std::map<int, MultiPoly>& acc) {
  if (f.is_constant()) return;
  int v = main_variable(f, f);
  std::size_t var = static_cast<std::size_t>(v);
  MultiPoly cont(f.nvars());
  MultiPoly pp = primitive_part_in(f, var, &cont);
  // Yun on the primitive part; every factor has positive degree in var.
  MultiPoly dp = pp.derivative(var);
  MultiPoly a = gcd_multivar(pp, dp);
  MultiPoly b = exact_divide(pp, a);
  MultiPoly c = exact_divide(dp, a);
  MultiPoly d = c - b.derivative(var);
  int i = 1;
  while (!b.is_constant()) {
    MultiPoly gi = gcd_multivar(b, d);
    if (!gi.is_constant()) {
      auto it = acc.find(i);
      if (it == acc.end())
        acc.emplace(i, gi);
      else
        it->second = (it->second * gi).primitive();
    }
    b = exact_divide(b, gi);
    c = exact_divide(d, gi);
    d = c - b.derivative(var);
    ++i;
  }
  squarefree_rec(cont, acc);
}

}  // namespace

std::vector<PolyFactor> squarefree_decomposition(const MultiPoly& f) {
  if (f.is_zero()) throw MathError(ErrorKind::ZeroInput, "squarefree decomposition of zero");
  if (!f.is_rational()) throw MathError(ErrorKind::Unsupported, "squarefree decomposition over an extension field");
  std::map<int, MultiPoly> acc;
  squarefree_rec(f, acc);
  std::vector<PolyFactor> out;
  for (auto& [m, p] : acc) out.push_back({p.primitive(), m});
  return out;
}

bool is_squarefree(const MultiPoly& f) {
  auto parts = squarefree_decomposition(f);
  return std::all_of(parts.begin(), parts.end(), [](const PolyFactor& p) { return p.multiplicity == 1; });
}

}  // namespace quadnet
