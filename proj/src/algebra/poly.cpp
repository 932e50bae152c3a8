#include "quadnet/algebra/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quadnet/error.hpp"

namespace quadnet {

int Monomial::degree() const {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
  return m;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

MultiPoly::MultiPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxVars) throw MathError(ErrorKind::Unsupported, "too many variables");
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Scalar& c) {
  MultiPoly p(nvars);
  p.add_term(Monomial{}, c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw MathError(ErrorKind::InvalidArgument, "variable index out of range");
  Monomial m;
  m.e[index] = 1;
  return term(nvars, m, Scalar(1));
}

MultiPoly MultiPoly::term(std::size_t nvars, const Monomial& m, const Scalar& c) {
  MultiPoly p(nvars);
  p.add_term(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

bool MultiPoly::is_rational() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_rational(); });
}

long MultiPoly::radicand() const {
  for (const auto& [m, c] : terms_)
    if (!c.is_rational()) return c.radicand();
  return 0;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

int MultiPoly::low_degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();
}

int MultiPoly::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max<int>(d, m.e[var]);
  return d;
}

bool MultiPoly::is_homogeneous() const { return total_degree() == low_degree(); }

bool MultiPoly::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first.e[var] != 0; });
}

Scalar MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw MathError(ErrorKind::ZeroInput, "leading monomial of zero polynomial");
  return terms_.rbegin()->first;
}

const Scalar& MultiPoly::leading_coeff() const {
  if (terms_.empty()) throw MathError(ErrorKind::ZeroInput, "leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw MathError(ErrorKind::LengthMismatch, "polynomial rings differ");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw MathError(ErrorKind::LengthMismatch, "polynomial rings differ");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw MathError(ErrorKind::LengthMismatch, "polynomial rings differ");
  MultiPoly r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(nvars_, Scalar(1));
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.e[var] == 0) continue;
    Monomial n = m;
    --n.e[var];
    r.add_term(n, c * Scalar(static_cast<long>(m.e[var])));
  }
  return r;
}

MultiPoly MultiPoly::homogeneous_part(int degree) const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == degree) r.terms_.emplace(m, c);
  return r;
}

MultiPoly MultiPoly::truncate_below(int bound) const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() < bound) r.terms_.emplace(m, c);
  return r;
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != nvars_) throw MathError(ErrorKind::LengthMismatch, "evaluation point size");
  Scalar total;
  for (const auto& [m, c] : terms_) {
    Scalar v = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < m.e[i]; ++k) v *= point[i];
    total += v;
  }
  return total;
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> images) const {
  if (images.size() != nvars_) throw MathError(ErrorKind::LengthMismatch, "composition arity");
  if (nvars_ == 0) return *this;
  std::size_t target = images[0].nvars();
  // Cache powers of each image.
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    int d = degree_in(i);
    powers[i].push_back(constant(target, Scalar(1)));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  MultiPoly r(target);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m.e[i] != 0) t *= powers[i][m.e[i]];
    r += t;
  }
  return r;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Scalar& c) const {
  MultiPoly r(nvars_);
  for (const auto& [m, v] : terms_) {
    Monomial n = m;
    Scalar w = v;
    for (unsigned k = 0; k < m.e[var]; ++k) w *= c;
    n.e[var] = 0;
    r.add_term(n, w);
  }
  return r;
}

MultiPoly MultiPoly::remap(std::size_t new_nvars, std::span<const std::size_t> map) const {
  if (map.size() != nvars_) throw MathError(ErrorKind::LengthMismatch, "remap arity");
  MultiPoly r(new_nvars);
  for (const auto& [m, c] : terms_) {
    Monomial n;
    for (std::size_t i = 0; i < nvars_; ++i) n.e[map[i]] = static_cast<std::uint16_t>(n.e[map[i]] + m.e[i]);
    r.add_term(n, c);
  }
  return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  int d = degree_in(var);
  std::vector<MultiPoly> out(d < 0 ? 0 : d + 1, MultiPoly(nvars_));
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    n.e[var] = 0;
    out[m.e[var]].terms_.emplace(n, c);
  }
  return out;
}

MultiPoly MultiPoly::from_coefficients(std::size_t var, const std::vector<MultiPoly>& coeffs) {
  if (coeffs.empty()) return MultiPoly(0);
  MultiPoly r(coeffs[0].nvars());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [m, c] : coeffs[k].terms()) {
      Monomial n = m;
      n.e[var] = static_cast<std::uint16_t>(n.e[var] + k);
      r.add_term(n, c);
    }
  }
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading_coeff().inverse();
}

MultiPoly MultiPoly::primitive() const {
  if (is_zero()) return *this;
  if (!is_rational()) throw MathError(ErrorKind::InvalidArgument, "primitive part needs rational coefficients");
  Integer l = 1, g = 0;
  for (const auto& [m, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.as_rational().get_den_mpz_t());
  for (const auto& [m, c] : terms_) {
    Integer v = c.as_rational().get_num() * (l / c.as_rational().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational factor = make_rational(l, g);
  if (sgn(leading_coeff().as_rational()) < 0) factor = -factor;
  return *this * Scalar(factor);
}

namespace {

std::string monomial_string(const Monomial& m, std::size_t n, const VarNames& names) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names.at(i);
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

}  // namespace

std::string MultiPoly::to_string(const VarNames& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono = monomial_string(m, nvars_, names);
    if (c.is_rational()) {
      Rational v = c.as_rational();
      bool neg = sgn(v) < 0;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      Rational a = abs(v);
      if (mono.empty()) {
        os << a.get_str();
      } else {
        if (a != 1) os << a.get_str() << "*";
        os << mono;
      }
    } else {
      if (!first) os << " + ";
      os << "(" << c.to_string() << ")";
      if (!mono.empty()) os << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

bool try_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly& quotient) {
  if (b.is_zero()) throw MathError(ErrorKind::InvalidArgument, "division by zero polynomial");
  MultiPoly q(a.nvars());
  MultiPoly r = a;
  const Monomial& lb = b.leading_monomial();
  Scalar lc_inv = b.leading_coeff().inverse();
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!lb.divides(lr)) return false;
    Monomial m = lr / lb;
    Scalar c = r.leading_coeff() * lc_inv;
    q.add_term(m, c);
    r -= MultiPoly::term(a.nvars(), m, c) * b;
  }
  quotient = std::move(q);
  return true;
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly q;
  if (!try_divide(a, b, q)) throw MathError(ErrorKind::InvalidArgument, "inexact polynomial division");
  return q;
}

VarNames default_names(std::size_t n) {
  VarNames v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

const VarNames& names_xyz() {
  static const VarNames v{"x", "y", "z"};
  return v;
}

const VarNames& names_xyzw() {
  static const VarNames v{"x", "y", "z", "w"};
  return v;
}

const VarNames& names_lmn() {
  static const VarNames v{"l", "m", "n"};
  return v;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  Monomial m;
  // Recursive fill of exponents summing to d.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      m.e[i] = static_cast<std::uint16_t>(left);
      out.push_back(m);
      m.e[i] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      m.e[i] = static_cast<std::uint16_t>(k);
      self(self, i + 1, left - k);
    }
    m.e[i] = 0;
  };
  if (n == 0) {
    if (d == 0) out.push_back(m);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

}  // namespace quadnet
