#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liftcat/models/monoids.hpp"
#include "liftcat/models/substochastic.hpp"
#include "liftcat/report.hpp"

namespace liftcat {

// ssmat v1: one line per domain point x holding f(x)(0) .. f(x)(|Y|-1).
struct SsmatFile {
  std::string monoid = "rational";  // boolean | rational | pair
  std::size_t rows = 0, cols = 0;   // |Y|, |X|
  std::optional<long> denom_hint;
  std::vector<std::vector<std::string>> columns;
  std::vector<std::size_t> lines;  // source line per column
};

SsmatFile parse_ssmat(const std::string& text);
std::string serialize_ssmat(const SsmatFile& f);

Rational parse_unit_scalar(const std::string& s);
std::uint8_t parse_scalar(const BooleanMonoid& m, const std::string& s);
Rational parse_scalar(const RationalMonoid& m, const std::string& s);
// "a;b"
Pair parse_scalar(const PairMonoid& m, const std::string& s);
std::string write_scalar(const BooleanMonoid& m, std::uint8_t v);
std::string write_scalar(const RationalMonoid& m, const Rational& v);
std::string write_scalar(const PairMonoid& m, const Pair& v);

template <class M>
SsArrow<M> ssmat_matrix(const M& m, const SsmatFile& f) {
  if (f.monoid != M::kind) throw FormatError("matrix is over " + f.monoid + ", not " + M::kind);
  auto a = ss_zero(m, f.rows, f.cols);
  for (std::size_t x = 0; x < f.cols; ++x)
    for (std::size_t y = 0; y < f.rows; ++y) {
      try {
        a.at(y, x) = parse_scalar(m, f.columns[x][y]);
      } catch (const FormatError& e) {
        throw FormatError(e.what(), f.lines.empty() ? 0 : f.lines[x]);
      }
    }
  return a;
}

template <class M>
SsmatFile to_ssmat(const M& m, const SsArrow<M>& a, std::optional<long> denom_hint = std::nullopt) {
  SsmatFile f;
  f.monoid = M::kind;
  f.rows = a.rows;
  f.cols = a.cols;
  f.denom_hint = denom_hint;
  for (std::size_t x = 0; x < a.cols; ++x) {
    f.columns.emplace_back();
    for (std::size_t y = 0; y < a.rows; ++y) f.columns.back().push_back(write_scalar(m, a.at(y, x)));
  }
  return f;
}

// Entries in range and every column total defined in the monoid.
Report check_ssmat(const SsmatFile& f);

}  // namespace liftcat
