#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quadnet/algebra/matrix.hpp"
#include "quadnet/algebra/poly.hpp"

namespace quadnet {

/// Diagonal one-parameter subgroup t -> diag(t^r0, ..., t^rn), weights summing to 0.
class OneParamSubgroup {
 public:
  OneParamSubgroup() = default;
  explicit OneParamSubgroup(std::vector<long> weights);

  const std::vector<long>& weights() const { return r_; }
  std::size_t size() const { return r_.size(); }
  long operator[](std::size_t i) const { return r_[i]; }
  /// Reversed and negated: (-r_n, ..., -r_0).
  OneParamSubgroup bar() const;
  std::string to_string() const;

  friend bool operator==(const OneParamSubgroup&, const OneParamSubgroup&) = default;

 private:
  std::vector<long> r_;
};

/// Linearly independent homogeneous forms of one degree in one ring.
class LinearSystemOfForms {
 public:
  LinearSystemOfForms(std::vector<MultiPoly> basis);

  const std::vector<MultiPoly>& basis() const { return basis_; }
  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  std::size_t dimension() const { return basis_.size(); }

 private:
  std::vector<MultiPoly> basis_;
  std::size_t nvars_ = 0;
  int degree_ = 0;
};

struct Certificate {
  ScalarMatrix g;
  OneParamSubgroup lambda;
};

long monomial_weight(const Monomial& m, const OneParamSubgroup& lambda);
/// Largest weight of a monomial of f. f nonzero.
long max_weight(const MultiPoly& f, const OneParamSubgroup& lambda);

/// Monomials of the given degree ordered by descending weight, ties broken
/// by descending grlex.
std::vector<Monomial> weight_ordered_monomials(std::size_t nvars, int degree, const OneParamSubgroup& lambda);

/// Sum of the weights of the pivot monomials after echelonizing the basis
/// with columns in weight order.
long pivot_weight_sum(const LinearSystemOfForms& system, const OneParamSubgroup& lambda);
long pivot_weight_sum_serial(const LinearSystemOfForms& system, const OneParamSubgroup& lambda);

/// f(x) -> f(g x) applied to every basis form.
LinearSystemOfForms act(const ScalarMatrix& g, const LinearSystemOfForms& system);

struct CertificateCheck {
  bool destabilizing;
  long value;
};

/// Evaluates the pivot weight sum of g.V under lambda. Non-strict accepts
/// value <= 0, strict requires value < 0.
CertificateCheck verify_unstable_certificate(const LinearSystemOfForms& system, const Certificate& cert, bool strict);

}  // namespace quadnet
