#include "quadnet/hm/hilbert_mumford.hpp"

#include <algorithm>
#include <numeric>

#include "quadnet/error.hpp"

namespace quadnet {

OneParamSubgroup::OneParamSubgroup(std::vector<long> weights) : r_(std::move(weights)) {
  if (r_.empty()) throw MathError(ErrorKind::InvalidArgument, "empty weight vector");
  if (std::accumulate(r_.begin(), r_.end(), 0L) != 0)
    throw MathError(ErrorKind::InvalidArgument, "weights of a one-parameter subgroup must sum to zero");
}

OneParamSubgroup OneParamSubgroup::bar() const {
  std::vector<long> r(r_.rbegin(), r_.rend());
  for (auto& x : r) x = -x;
  return OneParamSubgroup(r);
}

std::string OneParamSubgroup::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < r_.size(); ++i) s += (i ? "," : "") + std::to_string(r_[i]);
  return s + ")";
}

LinearSystemOfForms::LinearSystemOfForms(std::vector<MultiPoly> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) throw MathError(ErrorKind::InvalidArgument, "empty linear system");
  nvars_ = basis_[0].nvars();
  degree_ = basis_[0].total_degree();
  for (const auto& f : basis_) {
    if (f.is_zero()) throw MathError(ErrorKind::ZeroInput, "zero form in linear system");
    if (f.nvars() != nvars_ || !f.is_homogeneous() || f.total_degree() != degree_)
      throw MathError(ErrorKind::InvalidArgument, "linear system forms must share ring and degree");
  }
  auto mons = monomials_of_degree(nvars_, degree_);
  ScalarMatrix m(basis_.size(), mons.size());
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < mons.size(); ++j) m(i, j) = basis_[i].coeff(mons[j]);
  if (rank(m) != basis_.size()) throw MathError(ErrorKind::Degenerate, "linear system forms are dependent");
}

long monomial_weight(const Monomial& m, const OneParamSubgroup& lambda) {
  long w = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (i >= lambda.size()) {
      if (m.e[i] != 0) throw MathError(ErrorKind::LengthMismatch, "weight vector shorter than ring");
      continue;
    }
    w += static_cast<long>(m.e[i]) * lambda[i];
  }
  return w;
}

long max_weight(const MultiPoly& f, const OneParamSubgroup& lambda) {
  if (f.nvars() != lambda.size()) throw MathError(ErrorKind::LengthMismatch, "weight vector length differs from ring");
  if (f.is_zero()) throw MathError(ErrorKind::ZeroInput, "max weight of zero");
  long best = 0;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    long w = monomial_weight(m, lambda);
    if (first || w > best) best = w;
    first = false;
  }
  return best;
}

std::vector<Monomial> weight_ordered_monomials(std::size_t nvars, int degree, const OneParamSubgroup& lambda) {
  auto mons = monomials_of_degree(nvars, degree);
  GrlexLess less;
  std::stable_sort(mons.begin(), mons.end(), [&](const Monomial& a, const Monomial& b) {
    long wa = monomial_weight(a, lambda), wb = monomial_weight(b, lambda);
    if (wa != wb) return wa > wb;
    return less(b, a);
  });
  return mons;
}

namespace {

ScalarMatrix coefficient_matrix(const LinearSystemOfForms& system, const std::vector<Monomial>& mons, bool parallel) {
  ScalarMatrix m(system.dimension(), mons.size());
  const long n = static_cast<long>(mons.size());
#pragma omp parallel for if (parallel) schedule(static)
  for (long j = 0; j < n; ++j)
    for (std::size_t i = 0; i < system.dimension(); ++i)
      m(i, static_cast<std::size_t>(j)) = system.basis()[i].coeff(mons[static_cast<std::size_t>(j)]);
  return m;
}

long pivot_sum(const LinearSystemOfForms& system, const OneParamSubgroup& lambda, bool parallel) {
  if (lambda.size() != system.nvars())
    throw MathError(ErrorKind::LengthMismatch, "weight vector length differs from ring");
  auto mons = weight_ordered_monomials(system.nvars(), system.degree(), lambda);
  ScalarMatrix m = coefficient_matrix(system, mons, parallel);
  long s = 0;
  for (std::size_t col : rref(m)) s += monomial_weight(mons[col], lambda);
  return s;
}

}  // namespace

long pivot_weight_sum(const LinearSystemOfForms& system, const OneParamSubgroup& lambda) {
  return pivot_sum(system, lambda, true);
}

long pivot_weight_sum_serial(const LinearSystemOfForms& system, const OneParamSubgroup& lambda) {
  return pivot_sum(system, lambda, false);
}

LinearSystemOfForms act(const ScalarMatrix& g, const LinearSystemOfForms& system) {
  const std::size_t n = system.nvars();
  if (g.rows() != n || g.cols() != n) throw MathError(ErrorKind::LengthMismatch, "matrix size differs from ring");
  if (determinant(g).is_zero()) throw MathError(ErrorKind::SingularMatrix, "group element must be invertible");
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly row(n);
    for (std::size_t j = 0; j < n; ++j)
      if (!g(i, j).is_zero()) row += MultiPoly::variable(n, j) * g(i, j);
    images.push_back(row);
  }
  std::vector<MultiPoly> out;
  for (const auto& f : system.basis()) out.push_back(f.compose(images));
  return LinearSystemOfForms(out);
}

CertificateCheck verify_unstable_certificate(const LinearSystemOfForms& system, const Certificate& cert, bool strict) {
  long v = pivot_weight_sum(act(cert.g, system), cert.lambda);
  return {strict ? v < 0 : v <= 0, v};
}

}  // namespace quadnet
