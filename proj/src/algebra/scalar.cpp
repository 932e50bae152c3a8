#include "quadnet/algebra/scalar.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "quadnet/error.hpp"

namespace quadnet {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw std::invalid_argument("not a rational literal: " + text);
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Scalar::Scalar(const Rational& a, const Rational& b, long d) : a_(a), b_(b), d_(d) {
  if (sgn(b_) != 0 && (d == 0 || d == 1)) {
    throw MathError(ErrorKind::InvalidArgument, "radicand must not be 0 or 1");
  }
  normalize();
}

Scalar Scalar::sqrt_of(long d) { return Scalar(Rational(0), Rational(1), d); }

void Scalar::normalize() {
  if (sgn(b_) == 0) d_ = 0;
}

const Rational& Scalar::as_rational() const {
  if (d_ != 0) throw MathError(ErrorKind::InvalidArgument, "scalar is not rational");
  return a_;
}

long Scalar::common_radicand(const Scalar& l, const Scalar& r) {
  if (l.d_ == 0) return r.d_;
  if (r.d_ == 0 || r.d_ == l.d_) return l.d_;
  throw MathError(ErrorKind::MixedExtension,
                  "sqrt(" + std::to_string(l.d_) + ") combined with sqrt(" + std::to_string(r.d_) + ")");
}

Scalar Scalar::conjugate() const {
  Scalar s = *this;
  s.b_ = -s.b_;
  return s;
}

Rational Scalar::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw MathError(ErrorKind::InvalidArgument, "division by zero");
  if (d_ == 0) return Scalar(Rational(1) / a_);
  Rational n = norm();
  return Scalar(a_ / n, -b_ / n, d_);
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.a_ = -s.a_;
  s.b_ = -s.b_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  long d = common_radicand(*this, o);
  a_ += o.a_;
  if (o.d_ != 0) b_ += o.b_;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  long d = common_radicand(*this, o);
  a_ -= o.a_;
  if (o.d_ != 0) b_ -= o.b_;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (d_ == 0 && o.d_ == 0) {
    a_ *= o.a_;
    return *this;
  }
  long d = common_radicand(*this, o);
  Rational na = a_ * o.a_ + Rational(d) * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = na;
  b_ = nb;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw MathError(ErrorKind::InvalidArgument, "division by zero");
  if (d_ == 0 && o.d_ == 0) {
    a_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

bool canonical_less(const Scalar& l, const Scalar& r) {
  if (l.d_ != r.d_) return l.d_ < r.d_;
  if (l.a_ != r.a_) return l.a_ < r.a_;
  return l.b_ < r.b_;
}

std::string Scalar::to_string() const {
  if (d_ == 0) return a_.get_str();
  std::ostringstream os;
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  if (sgn(a_) != 0) {
    os << a_.get_str() << (sgn(b_) > 0 ? " + " : " - ");
    Rational ab = abs(b_);
    if (ab != 1) os << ab.get_str() << "*";
    os << root;
  } else {
    if (b_ == -1) os << "-";
    else if (b_ != 1) os << b_.get_str() << "*";
    os << root;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

long squarefree_part(const Integer& n) {
  if (n == 0) throw MathError(ErrorKind::InvalidArgument, "squarefree part of zero");
  Integer m = abs(n);
  Integer result = 1;
  // Trial division; a remaining large cofactor is kept unless it is a perfect square.
  for (unsigned long p = 2; p < 100000 && Integer(p) * p <= m; ++p) {
    unsigned count = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++count;
    }
    if (count % 2 == 1) result *= p;
  }
  if (m > 1 && !mpz_perfect_square_p(m.get_mpz_t())) result *= m;
  if (sgn(n) < 0) result = -result;
  if (!result.fits_slong_p()) throw MathError(ErrorKind::Unsupported, "radicand too large");
  return result.get_si();
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = make_rational(rn, rd);
  return true;
}

}  // namespace quadnet
