#include "liftcat/rational.hpp"

#include <cctype>

#include "liftcat/error.hpp"

namespace liftcat {

static Integer parse_int(std::string_view s, std::string_view whole) {
  if (s.empty()) throw FormatError("bad rational '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw FormatError("bad rational '" + std::string(whole) + "'");
  Integer v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw FormatError("bad rational '" + std::string(whole) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? Integer(-v) : v;
}

Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, s));
  Integer p = parse_int(s.substr(0, slash), s);
  std::string_view qs = s.substr(slash + 1);
  if (!qs.empty() && (qs[0] == '-' || qs[0] == '+'))
    throw FormatError("bad rational '" + std::string(s) + "'");
  Integer q = parse_int(qs, s);
  if (q == 0) throw FormatError("zero denominator in '" + std::string(s) + "'");
  return Rational(p, q);
}

std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

}  // namespace liftcat
