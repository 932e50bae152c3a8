#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "quadnet/algebra/scalar.hpp"

namespace quadnet {

inline constexpr std::size_t kMaxVars = 6;

/// Exponent vector. Unused trailing slots stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  int degree() const;
  bool divides(const Monomial& other) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b, requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

/// Graded lexicographic order with x0 > x1 > ... ; the leading term is the
/// largest element.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using VarNames = std::vector<std::string>;

/// Sparse multivariate polynomial with Scalar coefficients; no stored zeros.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, GrlexLess>;

  explicit MultiPoly(std::size_t nvars = 0);

  static MultiPoly constant(std::size_t nvars, const Scalar& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly term(std::size_t nvars, const Monomial& m, const Scalar& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Every coefficient rational.
  bool is_rational() const;
  /// Radicand shared by the irrational coefficients, 0 if none.
  long radicand() const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Lowest total degree of a term (the order at the origin); -1 for zero.
  int low_degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  bool involves(std::size_t var) const;

  Scalar coeff(const Monomial& m) const;
  const Monomial& leading_monomial() const;
  const Scalar& leading_coeff() const;

  void add_term(const Monomial& m, const Scalar& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Scalar& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
  friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned k) const;
  MultiPoly derivative(std::size_t var) const;
  MultiPoly homogeneous_part(int degree) const;
  /// Sum of terms with total degree < bound.
  MultiPoly truncate_below(int bound) const;

  Scalar evaluate(std::span<const Scalar> point) const;
  /// Replaces every variable i by images[i]; all images share one ring.
  MultiPoly compose(std::span<const MultiPoly> images) const;
  /// Replaces variable var by the value c, keeping the ring.
  MultiPoly substitute(std::size_t var, const Scalar& c) const;
  /// Same polynomial viewed in a ring with more (or equally many) variables,
  /// variable i sent to slot map[i].
  MultiPoly remap(std::size_t new_nvars, std::span<const std::size_t> map) const;

  /// Coefficients with respect to var: result[k] is the coefficient of var^k
  /// (a polynomial not involving var).
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;
  static MultiPoly from_coefficients(std::size_t var, const std::vector<MultiPoly>& coeffs);

  /// Divides every coefficient by the leading coefficient.
  MultiPoly monic() const;
  /// Multiplies by a rational so that all coefficients are integers with gcd 1
  /// and the leading coefficient is positive. Requires rational coefficients.
  MultiPoly primitive() const;

  std::string to_string(const VarNames& names) const;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

/// Exact quotient a / b; throws MathError(InvalidArgument) when b does not divide a.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);
/// Quotient if b | a.
bool try_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly& quotient);

/// Default names: x0..x{n-1}.
VarNames default_names(std::size_t n);
const VarNames& names_xyz();
const VarNames& names_xyzw();
const VarNames& names_lmn();

/// Monomials of total degree d in n variables, in descending grlex order.
std::vector<Monomial> monomials_of_degree(std::size_t n, int d);

}  // namespace quadnet
