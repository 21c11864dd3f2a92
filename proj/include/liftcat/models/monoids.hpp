#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "liftcat/algebra/pcm_table.hpp"
#include "liftcat/error.hpp"
#include "liftcat/rational.hpp"
#include "liftcat/rng.hpp"

namespace liftcat {

// {0,1}; 1+1 undefined, multiplication is conjunction.
struct BooleanMonoid {
  using value_type = std::uint8_t;
  static constexpr bool has_division = true;
  static constexpr const char* kind = "boolean";

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool has_one() const { return true; }
  std::optional<value_type> sum(value_type a, value_type b) const {
    if (a && b) return std::nullopt;
    return static_cast<value_type>(a | b);
  }
  bool le(value_type a, value_type b) const { return a <= b; }
  std::optional<value_type> ominus(value_type b, value_type a) const {
    if (a > b) return std::nullopt;
    return static_cast<value_type>(b - a);
  }
  value_type ocomp(value_type a) const { return a ? 0 : 1; }
  value_type mul(value_type a, value_type b) const { return a & b; }
  value_type div(value_type s, value_type) const { return s; }
  std::vector<value_type> elements() const { return {0, 1}; }
  std::vector<value_type> search_space() const { return elements(); }
  std::string show(value_type a) const { return a ? "1" : "0"; }
  value_type from_rational(const Rational& r) const {
    if (r == 0) return 0;
    if (r == 1) return 1;
    throw FormatError("boolean scalar must be 0 or 1, got " + to_string(r));
  }
  Rational to_rational(value_type a) const { return a; }
};

// Exact rationals in [0,1]; sums above 1 are undefined.
struct RationalMonoid {
  using value_type = Rational;
  static constexpr bool has_division = true;
  static constexpr const char* kind = "rational";

  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  bool has_one() const { return true; }
  std::optional<Rational> sum(const Rational& a, const Rational& b) const {
    Rational s = a + b;
    if (s > 1) return std::nullopt;
    return s;
  }
  bool le(const Rational& a, const Rational& b) const { return a <= b; }
  std::optional<Rational> ominus(const Rational& b, const Rational& a) const {
    if (a > b) return std::nullopt;
    return Rational(b - a);
  }
  Rational ocomp(const Rational& a) const { return 1 - a; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational div(const Rational& s, const Rational& t) const { return s / t; }
  std::string show(const Rational& a) const { return to_string(a); }
  Rational from_rational(const Rational& r) const {
    if (r < 0 || r > 1) throw FormatError("scalar out of [0,1]: " + to_string(r));
    return r;
  }
  Rational to_rational(const Rational& a) const { return a; }
};

struct Pair {
  Rational a, b;
  bool operator==(const Pair& o) const { return a == o.a && b == o.b; }
};

// [0,1] x [0,1] componentwise. No division: quotients are not unique when a
// component of t vanishes.
struct PairMonoid {
  using value_type = Pair;
  static constexpr bool has_division = false;
  static constexpr const char* kind = "pair";

  int grid_denominator = 4;

  Pair zero() const { return {0, 0}; }
  Pair one() const { return {1, 1}; }
  bool has_one() const { return true; }
  std::optional<Pair> sum(const Pair& x, const Pair& y) const {
    Pair s{x.a + y.a, x.b + y.b};
    if (s.a > 1 || s.b > 1) return std::nullopt;
    return s;
  }
  bool le(const Pair& x, const Pair& y) const { return x.a <= y.a && x.b <= y.b; }
  std::optional<Pair> ominus(const Pair& y, const Pair& x) const {
    if (!le(x, y)) return std::nullopt;
    return Pair{y.a - x.a, y.b - x.b};
  }
  Pair ocomp(const Pair& x) const { return {1 - x.a, 1 - x.b}; }
  Pair mul(const Pair& x, const Pair& y) const { return {x.a * y.a, x.b * y.b}; }
  // Grid of all (i/d, j/d) used for quotient search.
  std::vector<Pair> search_space() const {
    std::vector<Pair> v;
    for (int i = 0; i <= grid_denominator; ++i)
      for (int j = 0; j <= grid_denominator; ++j)
        v.push_back({Rational(i, grid_denominator), Rational(j, grid_denominator)});
    return v;
  }
  std::string show(const Pair& x) const { return "(" + to_string(x.a) + "," + to_string(x.b) + ")"; }
};

// Scalar draws as multiples of 1/d, d taken from `denoms`.
inline Rational draw_unit(std::mt19937_64& g, const std::vector<int>& denoms) {
  int d = denoms[uniform(g, 0, denoms.size() - 1)];
  return Rational(static_cast<long>(uniform(g, 0, d)), d);
}

// The Boolean monoid as an explicit table (elements "0" and "1").
PcmTable boolean_table();

}  // namespace liftcat
