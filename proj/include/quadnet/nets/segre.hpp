#pragma once

#include <string>
#include <vector>

#include "quadnet/algebra/unipoly.hpp"
#include "quadnet/nets/quadric_nets.hpp"

namespace quadnet {

struct PencilOfQuadrics {
  Quadric4 first, second;
};

/// Bracket of one irreducible factor of the pencil determinant: the
/// positive multiplicities of the factor in the invariant factors,
/// nonincreasing.
struct SegreBracket {
  std::vector<int> parts;
  UniPoly factor;
};

struct SegreSymbol {
  /// One entry per root: a factor of degree k contributes k copies.
  std::vector<SegreBracket> brackets;

  /// Canonical text, e.g. "[(1,1,1),1]".
  std::string to_string() const;
  /// Sum of all bracket entries (4 for pencils with a smooth member).
  int weight() const;
};

/// Invariant factors s1 | s2 | s3 | s4 of the lambda-matrix of the pencil,
/// all monic.
std::vector<UniPoly> invariant_factors(const PencilOfQuadrics& pencil);

/// Rational t with first + t * second invertible. Throws NoSmoothMember.
Rational smooth_member_search(const PencilOfQuadrics& pencil);

SegreSymbol segre_symbol(const PencilOfQuadrics& pencil);

/// Canonical form of a bracket-list text such as "[(1,2),1]": entries
/// sorted nonincreasing inside brackets, brackets sorted descending.
std::string canonical_segre_text(const std::string& text);

/// Description of the base curve of the pencil for the symbols used in the
/// instability analysis; "Unknown" otherwise.
std::string intersection_type_lookup(const SegreSymbol& symbol);
std::string intersection_type_lookup(const std::string& symbol_text);

}  // namespace quadnet
