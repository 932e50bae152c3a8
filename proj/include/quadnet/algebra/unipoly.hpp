#pragma once

#include <string>
#include <vector>

#include "quadnet/algebra/poly.hpp"
#include "quadnet/algebra/scalar.hpp"

namespace quadnet {

/// Dense univariate polynomial, coefficient k multiplies t^k.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs);
  static UniPoly monomial(int degree, const Scalar& c = Scalar(1));

  const std::vector<Scalar>& coeffs() const { return c_; }
  /// -1 for zero.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const;
  long radicand() const;
  const Scalar& leading() const;
  Scalar coeff(int k) const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const Scalar& s);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly derivative() const;
  Scalar evaluate(const Scalar& t) const;
  UniPoly monic() const;
  UniPoly conjugate() const;
  /// Rational scaling to integer coefficients with gcd 1 and positive
  /// leading coefficient. Requires rational coefficients.
  UniPoly primitive() const;

  /// Order of vanishing at t = 0; -1 for zero.
  int valuation() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

/// Euclidean division; b nonzero.
void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
/// Monic gcd (zero if both zero).
UniPoly gcd(UniPoly a, UniPoly b);

struct UniFactor {
  UniPoly factor;
  int multiplicity;
};

/// Yun decomposition into monic squarefree pairwise coprime parts.
std::vector<UniFactor> squarefree_decomposition(const UniPoly& f);

/// Distinct rational roots of a rational polynomial, ascending.
std::vector<Rational> rational_roots(const UniPoly& f);

/// Irreducible factorization over Q when every squarefree part has degree
/// at most 4 after removing linear factors. Factors are monic.
/// Throws MathError(Unsupported) otherwise.
std::vector<UniFactor> factor_univariate_deg_le4(const UniPoly& f);

/// Linear, quadratic and leftover parts of a rational polynomial.
/// Linear and quadratic entries are irreducible and monic; the residual list
/// holds monic squarefree pieces of degree >= 3 that were not split (they
/// may still be reducible when of degree >= 5).
struct LowDegreeSplit {
  std::vector<UniFactor> linear;
  std::vector<UniFactor> quadratic;
  std::vector<UniFactor> residual;
};
LowDegreeSplit split_low_degree(const UniPoly& f);

/// Roots of f that lie in Q or in a quadratic field. When f has irrational
/// coefficients only its own field is searched. Residual factors of the
/// (norm) polynomial that could not be resolved are returned in residual.
struct FieldRoots {
  std::vector<Scalar> roots;
  std::vector<UniPoly> residual;
};
FieldRoots roots_up_to_quadratic(const UniPoly& f);

/// Conversion between MultiPoly in one active variable and UniPoly.
UniPoly to_unipoly(const MultiPoly& p, std::size_t var);
MultiPoly from_unipoly(const UniPoly& u, std::size_t nvars, std::size_t var);

}  // namespace quadnet
