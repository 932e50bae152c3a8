#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace quadnet {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational num/den (den != 0).
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "a" or "a/b" in base 10. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

/// Element a + b*sqrt(d) of Q or of a quadratic field Q(sqrt d).
///
/// The radicand is part of the value: a rational element (b == 0) carries
/// d == 0 and combines freely with anything, while two irrational operands
/// must share the same d. Mixing sqrt(2) with sqrt(3) is a MixedExtension
/// error rather than an implicit biquadratic field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT: implicit by design of numeric literals
  Scalar(const Rational& a) : a_(a) {}  // NOLINT
  Scalar(const Rational& a, const Rational& b, long d);

  /// sqrt(d) for squarefree d not in {0, 1}.
  static Scalar sqrt_of(long d);

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt_part() const { return b_; }
  long radicand() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return d_ == 0 && a_ == 1; }
  bool is_rational() const { return d_ == 0; }

  /// Only valid when is_rational().
  const Rational& as_rational() const;

  Scalar conjugate() const;
  /// Field norm a^2 - d b^2 (rational).
  Rational norm() const;
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
  friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
  friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
  friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }
  friend bool operator==(const Scalar& l, const Scalar& r) {
    return l.d_ == r.d_ && l.a_ == r.a_ && l.b_ == r.b_;
  }
  friend bool operator!=(const Scalar& l, const Scalar& r) { return !(l == r); }

  /// Total order used only for canonical sorting (not a field order).
  friend bool canonical_less(const Scalar& l, const Scalar& r);

  std::string to_string() const;

 private:
  void normalize();
  static long common_radicand(const Scalar& l, const Scalar& r);

  Rational a_{0};
  Rational b_{0};
  long d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Squarefree part of a nonzero integer, sign kept (e.g. -12 -> -3, 8 -> 2).
long squarefree_part(const Integer& n);

/// Exact rational square root if it exists.
bool rational_sqrt(const Rational& q, Rational& root);

}  // namespace quadnet
