#include "quadnet/cli/document.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "quadnet/error.hpp"

namespace quadnet {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

long radicand_of(const std::string& text, std::size_t offset) {
  Rational r;
  try {
    r = parse_rational(trim(text));
  } catch (const std::exception&) {
    throw ParseError(ParseErrorKind::SyntaxError, offset, "field radicand must be an integer");
  }
  if (r.get_den() != 1) throw ParseError(ParseErrorKind::SyntaxError, offset, "field radicand must be an integer");
  Integer n = r.get_num();
  if (!n.fits_slong_p()) throw ParseError(ParseErrorKind::SyntaxError, offset, "field radicand too large");
  long d = n.get_si();
  if (d == 0 || squarefree_part(n) == 1)
    throw ParseError(ParseErrorKind::SyntaxError, offset, "field radicand must not be a square");
  return d;
}

}  // namespace

InputDocument InputDocument::parse(const std::string& text) {
  InputDocument doc;
  std::size_t offset = 0;
  int line_no = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::size_t line_start = offset;
    offset += raw.size() + 1;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::string where = "line " + std::to_string(line_no) + ": ";
    if (line.rfind("field", 0) == 0 && line.find('=') == std::string::npos) {
      std::istringstream ls(line.substr(5));
      std::string kind, rest;
      ls >> kind;
      std::getline(ls, rest);
      if (kind != "sqrt") throw ParseError(ParseErrorKind::SyntaxError, line_start, where + "expected `field sqrt D`");
      doc.field_ = radicand_of(rest, line_start);
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(ParseErrorKind::SyntaxError, line_start, where + "expected `name = expression`");
    Declaration d{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no};
    if (!valid_name(d.name)) throw ParseError(ParseErrorKind::SyntaxError, line_start, where + "invalid name");
    if (d.text.empty()) throw ParseError(ParseErrorKind::SyntaxError, line_start, where + "empty expression");
    if (doc.has(d.name))
      throw ParseError(ParseErrorKind::SyntaxError, line_start, where + "duplicate declaration of " + d.name);
    doc.decls_.push_back(d);
  }
  return doc;
}

InputDocument InputDocument::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(ParseErrorKind::SyntaxError, 0, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

bool InputDocument::has(const std::string& name) const {
  for (const auto& d : decls_)
    if (d.name == name) return true;
  return false;
}

const Declaration& InputDocument::get(const std::string& name) const {
  for (const auto& d : decls_)
    if (d.name == name) return d;
  throw ParseError(ParseErrorKind::SyntaxError, 0, "missing declaration " + name);
}

MultiPoly InputDocument::form(const std::string& name, const Ambient& ambient, int degree) const {
  const Declaration& d = get(name);
  try {
    return parse_form(d.text, ambient, degree);
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), e.offset(), "line " + std::to_string(d.line) + " (" + name + "): " + e.what());
  }
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    std::string item = trim(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    try {
      out.push_back(parse_rational(item));
    } catch (const std::exception&) {
      throw ParseError(ParseErrorKind::SyntaxError, start, "bad number `" + item + "`");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

ScalarMatrix parse_rational_matrix(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::size_t start = 0;
  while (true) {
    auto semi = text.find(';', start);
    rows.push_back(parse_rational_list(text.substr(start, semi == std::string::npos ? std::string::npos : semi - start)));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw ParseError(ParseErrorKind::SyntaxError, 0, "matrix rows differ in length");
  ScalarMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

long parse_field_option(const std::string& text) {
  if (text.rfind("sqrt:", 0) != 0) throw ParseError(ParseErrorKind::SyntaxError, 0, "field must be written sqrt:D");
  return radicand_of(text.substr(5), 5);
}

}  // namespace quadnet
