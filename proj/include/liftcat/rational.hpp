#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace liftcat {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// "p/q", "p" or "-p/q"; throws FormatError on anything else or q == 0.
Rational parse_rational(std::string_view s);
std::string to_string(const Rational& r);

inline Rational frac(std::int64_t p, std::int64_t q) { return Rational(p, q); }

}  // namespace liftcat
