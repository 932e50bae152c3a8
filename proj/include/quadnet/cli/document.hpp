#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadnet/algebra/matrix.hpp"
#include "quadnet/cli/parse.hpp"

namespace quadnet {

struct Declaration {
  std::string name;
  std::string text;
  int line = 0;
};

/// Text input: `name = expr` lines, `#` comments, blank lines, and an
/// optional `field sqrt D` directive.
class InputDocument {
 public:
  /// Throws ParseError (offset = byte offset in the document).
  static InputDocument parse(const std::string& text);
  static InputDocument load(const std::string& path);

  const std::vector<Declaration>& declarations() const { return decls_; }
  bool has(const std::string& name) const;
  const Declaration& get(const std::string& name) const;
  std::optional<long> field() const { return field_; }

  /// Parses declaration `name` as a form; errors name the line.
  MultiPoly form(const std::string& name, const Ambient& ambient, int degree = -1) const;

 private:
  std::vector<Declaration> decls_;
  std::optional<long> field_;
};

/// "a,b,c" (rationals, surrounding spaces allowed).
std::vector<Rational> parse_rational_list(const std::string& text);
/// Rows separated by ';', entries by ','.
ScalarMatrix parse_rational_matrix(const std::string& text);
/// "sqrt:D" with D a nonsquare integer.
long parse_field_option(const std::string& text);

}  // namespace quadnet
