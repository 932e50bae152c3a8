#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quadnet/algebra/poly.hpp"

namespace quadnet {

/// Variable naming for one polynomial ring. Each alias set renames the
/// variables in the same order; an expression may mix names only within one
/// set.
struct Ambient {
  VarNames names;
  std::vector<VarNames> aliases;

  std::size_t nvars() const { return names.size(); }
  /// Index of name, or -1.
  int lookup(std::string_view name) const;

  static Ambient projective3();  // x0..x3, alias x,y,z,w
  static Ambient plane();        // x,y,z, aliases x0..x2 and l,m,n
  static Ambient net_plane();    // l,m,n
};

/// Grammar: sums and differences of products and quotients of factors; a
/// factor is a rational literal, a variable, or a parenthesized expression,
/// optionally raised to a nonnegative integer power. Division is allowed by
/// nonzero constants only. Throws ParseError.
MultiPoly parse_polynomial(std::string_view text, const Ambient& ambient);

/// As parse_polynomial, then checks homogeneity; degree >= 0 also fixes the
/// degree (the zero polynomial is accepted for any degree).
MultiPoly parse_form(std::string_view text, const Ambient& ambient, int degree = -1);

}  // namespace quadnet
