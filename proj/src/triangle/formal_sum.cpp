#include "liftcat/triangle/formal_sum.hpp"

#include <cctype>

#include "liftcat/error.hpp"

namespace liftcat {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& what) const {
    throw FormatError(what + " at column " + std::to_string(i + 1) + " of '" + s + "'");
  }
  std::string take(auto pred) {
    ws();
    std::size_t b = i;
    while (i < s.size() && pred(s[i])) ++i;
    return s.substr(b, i - b);
  }
  Rational rational() {
    std::string t = take([](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '/'; });
    if (t.empty()) error("expected a number");
    return parse_rational(t);
  }
};

}  // namespace

std::vector<FormalTerm> parse_formal_sum(const std::string& text) {
  Cursor c{text};
  std::vector<FormalTerm> out;
  do {
    FormalTerm t;
    c.ws();
    if (c.i < text.size() && text[c.i] != '|')
      t.weight = c.rational();
    else
      t.weight = 1;
    if (!c.eat('|')) c.error("expected '|'");
    if (c.eat('*')) {
      t.r = 0;
    } else {
      std::string name = c.take([](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
      if (name.empty()) c.error("expected a point name or '*'");
      t.point = name;
      if (c.eat('@')) t.r = c.rational();
    }
    if (!c.eat('>')) c.error("expected '>'");
    if (t.weight < 0 || t.weight > 1 || t.r < 0 || t.r > 1) c.error("weight outside [0,1]");
    if (t.point && t.r == 0) c.error("lifted point with weight 0, write * instead");
    out.push_back(std::move(t));
  } while (c.eat('+'));
  c.ws();
  if (c.i != text.size()) c.error("trailing input");
  return out;
}

std::string show_formal_sum(const std::vector<FormalTerm>& s) {
  std::string out;
  for (const auto& t : s) {
    if (!out.empty()) out += " + ";
    out += to_string(t.weight) + "|";
    if (!t.point)
      out += "*";
    else if (t.r == 1)
      out += *t.point;
    else
      out += *t.point + "@" + to_string(t.r);
    out += ">";
  }
  return out;
}

}  // namespace liftcat
