#include "quadnet/cli/parse.hpp"

#include <cctype>

#include "quadnet/error.hpp"

namespace quadnet {

int Ambient::lookup(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  for (const auto& set : aliases)
    for (std::size_t i = 0; i < set.size(); ++i)
      if (set[i] == name) return static_cast<int>(i);
  return -1;
}

Ambient Ambient::projective3() { return {default_names(4), {names_xyzw()}}; }
Ambient Ambient::plane() { return {names_xyz(), {default_names(3), names_lmn()}}; }
Ambient Ambient::net_plane() { return {names_lmn(), {}}; }

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ambient& ambient) : s_(text), amb_(ambient) {}

  MultiPoly run() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ParseErrorKind::SyntaxError, pos_, what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        MultiPoly d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division only by nonzero constants");
        }
        acc *= d.coeff(Monomial{}).inverse();
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      if (pos_ - start > 3) fail("exponent too large");
      unsigned k = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      return base.pow(k);
    }
    return base;
  }

  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Integer v(std::string(s_.substr(start, pos_ - start)));
      return MultiPoly::constant(amb_.nvars(), Scalar(Rational(v)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      int idx = amb_.lookup(name);
      if (idx < 0)
        throw ParseError(ParseErrorKind::UnknownVariable, start,
                         "unknown variable '" + std::string(name) + "' at offset " + std::to_string(start));
      return MultiPoly::variable(amb_.nvars(), static_cast<std::size_t>(idx));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  const Ambient& amb_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_polynomial(std::string_view text, const Ambient& ambient) { return Parser(text, ambient).run(); }

MultiPoly parse_form(std::string_view text, const Ambient& ambient, int degree) {
  MultiPoly p = parse_polynomial(text, ambient);
  if (p.is_zero()) return p;
  if (!p.is_homogeneous() || (degree >= 0 && p.total_degree() != degree)) {
    std::string want = degree >= 0 ? "a form of degree " + std::to_string(degree) : "a homogeneous form";
    throw ParseError(ParseErrorKind::NonHomogeneous, 0, "expected " + want);
  }
  return p;
}

}  // namespace quadnet
