#include "quadnet/algebra/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "quadnet/error.hpp"

namespace quadnet {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(int degree, const Scalar& c) {
  std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool UniPoly::is_rational() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_rational(); });
}

long UniPoly::radicand() const {
  for (const auto& s : c_)
    if (!s.is_rational()) return s.radicand();
  return 0;
}

const Scalar& UniPoly::leading() const {
  if (c_.empty()) throw MathError(ErrorKind::ZeroInput, "leading coefficient of zero polynomial");
  return c_.back();
}

Scalar UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Scalar();
  return c_[static_cast<std::size_t>(k)];
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& s : r.c_) s = -s;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& a, const Scalar& s) {
  std::vector<Scalar> v = a.c_;
  for (auto& x : v) x *= s;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Scalar> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Scalar(static_cast<long>(i));
  return UniPoly(std::move(v));
}

Scalar UniPoly::evaluate(const Scalar& t) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

UniPoly UniPoly::conjugate() const {
  std::vector<Scalar> v = c_;
  for (auto& x : v) x = x.conjugate();
  return UniPoly(std::move(v));
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return *this;
  if (!is_rational()) throw MathError(ErrorKind::InvalidArgument, "primitive part needs rational coefficients");
  Integer l = 1, g = 0;
  for (const auto& s : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.as_rational().get_den_mpz_t());
  for (const auto& s : c_) {
    Integer v = s.as_rational().get_num() * (l / s.as_rational().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational f = make_rational(l, g);
  if (sgn(leading().as_rational()) < 0) f = -f;
  return *this * Scalar(f);
}

int UniPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

std::string UniPoly::to_string(const std::string& var) const {
  return from_unipoly(*this, 1, 0).to_string({var});
}

void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  if (b.is_zero()) throw MathError(ErrorKind::InvalidArgument, "division by zero polynomial");
  std::vector<Scalar> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) {
    q = UniPoly();
    r = a;
    return;
  }
  std::vector<Scalar> quo(static_cast<std::size_t>(da - db) + 1);
  Scalar inv = b.leading().inverse();
  for (int k = da; k >= db; --k) {
    Scalar c = rem[static_cast<std::size_t>(k)] * inv;
    quo[static_cast<std::size_t>(k - db)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  q = UniPoly(std::move(quo));
  r = UniPoly(std::move(rem));
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  UniPoly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw MathError(ErrorKind::InvalidArgument, "inexact univariate division");
  return q;
}

using IntPoly = std::vector<Integer>;

/// Positive multiple of a rational polynomial with integer coefficients.
IntPoly positive_integer_multiple(const UniPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.as_rational().get_den_mpz_t());
  IntPoly out;
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    out.push_back(c.as_rational().get_num() * (l / c.as_rational().get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

/// Sign of p(a/b) for b > 0, in integer arithmetic.
int sign_at(const IntPoly& p, const Integer& a, const Integer& b) {
  if (p.empty()) return 0;
  Integer acc = p.back(), bpow = 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    bpow *= b;
    acc = acc * a + p[i] * bpow;
  }
  return sgn(acc);
}

int sign_variations(const std::vector<IntPoly>& seq, const Integer& a, const Integer& b) {
  int count = 0, last = 0;
  for (const auto& p : seq) {
    int s = sign_at(p, a, b);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

std::vector<UniFactor> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw MathError(ErrorKind::ZeroInput, "squarefree decomposition of zero");
  std::vector<UniFactor> out;
  if (f.degree() == 0) return out;
  UniPoly fp = f.derivative();
  UniPoly a = gcd(f, fp);
  UniPoly b = exact_quotient(f, a);
  UniPoly c = exact_quotient(fp, a);
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g.monic(), i});
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<Rational> rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw MathError(ErrorKind::ZeroInput, "roots of zero polynomial");
  if (!f.is_rational()) throw MathError(ErrorKind::InvalidArgument, "rational_roots needs rational coefficients");
  std::vector<Rational> roots;
  if (f.degree() <= 0) return roots;
  // Squarefree integer primitive polynomial with the same roots.
  UniPoly g = exact_quotient(f, gcd(f, f.derivative())).primitive();
  int v = g.valuation();
  if (v > 0) {
    roots.push_back(0);
    g = exact_quotient(g, UniPoly::monomial(v));
  }
  if (g.degree() == 0) return roots;
  Integer lc = g.leading().as_rational().get_num();
  // Cauchy bound.
  Rational bound = 0;
  for (int k = 0; k < g.degree(); ++k) {
    Rational r = abs(g.coeff(k).as_rational()) / Rational(lc);
    if (r > bound) bound = r;
  }
  bound += 1;
  std::vector<UniPoly> sturm{g, g.derivative()};
  while (sturm.back().degree() > 0) {
    UniPoly q, r;
    divmod(sturm[sturm.size() - 2], sturm.back(), q, r);
    if (r.is_zero()) break;
    sturm.push_back(-r);
  }
  std::vector<IntPoly> isturm;
  for (const auto& p : sturm) isturm.push_back(positive_integer_multiple(p));
  // Every rational root is k/lc; grid endpoints (k + 1/2)/lc are never roots.
  Rational scaled = bound * Rational(lc);
  Integer nmax = scaled.get_num() / scaled.get_den() + 2;
  Integer den = 2 * lc;
  struct Interval {
    Integer lo, hi;
  };
  std::vector<Interval> stack{{-nmax, nmax}};
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    int count = sign_variations(isturm, 2 * iv.lo + 1, den) - sign_variations(isturm, 2 * iv.hi + 1, den);
    if (count == 0) continue;
    if (iv.hi - iv.lo == 1) {
      Rational cand = make_rational(iv.hi, lc);
      if (g.evaluate(Scalar(cand)).is_zero()) roots.push_back(cand);
      continue;
    }
    Integer mid = (iv.lo + iv.hi) / 2;
    stack.push_back({iv.lo, mid});
    stack.push_back({mid, iv.hi});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

UniPoly linear_factor(const Rational& r) { return UniPoly({Scalar(-r), Scalar(1)}); }

/// Splits a monic rational quartic without rational roots into two quadratics
/// when possible.
bool quartic_quadratic_split(const UniPoly& f, UniPoly& q1, UniPoly& q2) {
  Rational a = f.coeff(3).as_rational(), b = f.coeff(2).as_rational();
  Rational c = f.coeff(1).as_rational(), d = f.coeff(0).as_rational();
  UniPoly resolvent({Scalar(-(a * a * d - 4 * b * d + c * c)), Scalar(a * c - 4 * d), Scalar(-b), Scalar(1)});
  for (const Rational& theta : rational_roots(resolvent)) {
    Rational disc = theta * theta - 4 * d, root;
    if (!rational_sqrt(disc, root)) continue;
    Rational q = (theta + root) / 2, s = (theta - root) / 2;
    std::vector<std::pair<Rational, Rational>> prs;
    if (q != s) {
      Rational p = (c - a * q) / (s - q);
      prs.push_back({p, a - p});
    } else {
      Rational disc2 = a * a - 4 * (b - theta), r2;
      if (!rational_sqrt(disc2, r2)) continue;
      prs.push_back({(a + r2) / 2, (a - r2) / 2});
    }
    for (const auto& [p, r] : prs) {
      UniPoly f1({Scalar(q), Scalar(p), Scalar(1)});
      UniPoly f2({Scalar(s), Scalar(r), Scalar(1)});
      if (f1 * f2 == f) {
        q1 = f1;
        q2 = f2;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

LowDegreeSplit split_low_degree(const UniPoly& f) {
  if (!f.is_rational()) throw MathError(ErrorKind::InvalidArgument, "split_low_degree needs rational coefficients");
  LowDegreeSplit out;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    UniPoly rest = part;
    for (const Rational& r : rational_roots(part)) {
      out.linear.push_back({linear_factor(r), mult});
      rest = exact_quotient(rest, linear_factor(r));
    }
    rest = rest.monic();
    if (rest.degree() <= 0) continue;
    if (rest.degree() == 2) {
      out.quadratic.push_back({rest, mult});
    } else if (rest.degree() == 4) {
      UniPoly q1, q2;
      if (quartic_quadratic_split(rest, q1, q2)) {
        out.quadratic.push_back({q1, mult});
        out.quadratic.push_back({q2, mult});
      } else {
        out.residual.push_back({rest, mult});
      }
    } else {
      out.residual.push_back({rest, mult});
    }
  }
  return out;
}

std::vector<UniFactor> factor_univariate_deg_le4(const UniPoly& f) {
  LowDegreeSplit s = split_low_degree(f);
  std::vector<UniFactor> out = s.linear;
  out.insert(out.end(), s.quadratic.begin(), s.quadratic.end());
  for (const auto& r : s.residual) {
    // Cubics and quartics without linear or quadratic factors are irreducible.
    if (r.factor.degree() > 4) throw MathError(ErrorKind::Unsupported, "squarefree part of degree > 4");
    out.push_back(r);
  }
  return out;
}

namespace {

/// Roots of the monic rational quadratic t^2 + p t + q.
std::pair<Scalar, Scalar> quadratic_roots(const UniPoly& quad) {
  Rational p = quad.coeff(1).as_rational(), q = quad.coeff(0).as_rational();
  Rational disc = p * p - 4 * q;
  Integer num = disc.get_num() * disc.get_den();
  long d = squarefree_part(num);
  Rational s2 = disc / Rational(d), s;
  if (!rational_sqrt(s2, s)) throw MathError(ErrorKind::InvalidArgument, "quadratic root extraction failed");
  Scalar base(-p / 2);
  Scalar half(Rational(0), s / 2, d);
  return {base + half, base - half};
}

}  // namespace

FieldRoots roots_up_to_quadratic(const UniPoly& f) {
  FieldRoots out;
  if (f.is_zero()) throw MathError(ErrorKind::ZeroInput, "roots of zero polynomial");
  long d = f.radicand();
  UniPoly target = d == 0 ? f : f * f.conjugate();
  LowDegreeSplit s = split_low_degree(target);
  for (const auto& lin : s.linear) {
    Scalar r = -lin.factor.coeff(0);
    if (f.evaluate(r).is_zero()) out.roots.push_back(r);
  }
  for (const auto& quad : s.quadratic) {
    auto [r1, r2] = quadratic_roots(quad.factor);
    if (d != 0 && r1.radicand() != d) {
      out.residual.push_back(quad.factor);
      continue;
    }
    if (f.evaluate(r1).is_zero()) out.roots.push_back(r1);
    if (f.evaluate(r2).is_zero()) out.roots.push_back(r2);
  }
  for (const auto& res : s.residual) out.residual.push_back(res.factor);
  return out;
}

UniPoly to_unipoly(const MultiPoly& p, std::size_t var) {
  std::vector<Scalar> v(static_cast<std::size_t>(std::max(p.degree_in(var), -1) + 1));
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (i != var && m.e[i] != 0) throw MathError(ErrorKind::InvalidArgument, "polynomial is not univariate");
    v[m.e[var]] += c;
  }
  return UniPoly(std::move(v));
}

MultiPoly from_unipoly(const UniPoly& u, std::size_t nvars, std::size_t var) {
  MultiPoly p(nvars);
  for (int k = 0; k <= u.degree(); ++k) {
    Monomial m;
    m.e[var] = static_cast<std::uint16_t>(k);
    p.add_term(m, u.coeff(k));
  }
  return p;
}

}  // namespace quadnet
