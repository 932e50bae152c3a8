#pragma once

#include <random>
#include <string>
#include <vector>

#include "quadnet/algebra/poly.hpp"
#include "quadnet/cli/parse.hpp"

namespace quadnet::test {

inline MultiPoly p3(const std::string& s) { return parse_polynomial(s, Ambient::projective3()); }
inline MultiPoly p2(const std::string& s) { return parse_polynomial(s, Ambient::plane()); }
inline MultiPoly plmn(const std::string& s) { return parse_polynomial(s, Ambient::net_plane()); }

/// Ring with variables x (and y, z, ...) for small algebra tests.
inline MultiPoly pxy(const std::string& s) {
  return parse_polynomial(s, Ambient{{"x", "y", "z"}, {}});
}

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Nonzero integer in [-bound, bound].
inline long nonzero(std::mt19937_64& rng, long bound) {
  long v = uniform(rng, 1, bound);
  return uniform(rng, 0, 1) ? v : -v;
}

/// Form of the given degree with integer coefficients in [-bound, bound],
/// each monomial present with probability density/100.
inline MultiPoly random_form(std::mt19937_64& rng, std::size_t nvars, int degree, long bound = 5, int density = 100) {
  MultiPoly p(nvars);
  for (const auto& m : monomials_of_degree(nvars, degree))
    if (uniform(rng, 1, 100) <= density) p.add_term(m, Scalar(uniform(rng, -bound, bound)));
  return p;
}

/// Dense polynomial of total degree <= degree.
inline MultiPoly random_poly(std::mt19937_64& rng, std::size_t nvars, int degree, long bound = 5) {
  MultiPoly p(nvars);
  for (int d = 0; d <= degree; ++d) p += random_form(rng, nvars, d, bound);
  return p;
}

}  // namespace quadnet::test
