#include <doctest.h>

#include "liftcat/algebra/division.hpp"
#include "liftcat/algebra/laws.hpp"
#include "liftcat/algebra/pcm_format.hpp"
#include "liftcat/models/monoids.hpp"

using namespace liftcat;

namespace {

// 0 < h < 1 with h + h = 1
PcmTable chain3() {
  PcmTable t({"0", "h", "1"});
  t.add_unit_sums();
  t.set_sum(1, 1, 2);
  t.set_one(2);
  return t;
}

Report laws_of(const PcmTable& t, Level l) {
  TableAlgebra a(t);
  return check_laws(a, l, Sampling<Elem>::exhaustive(a.elements()));
}

}  // namespace

TEST_CASE("rational text") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(Rational(2, 4)) == "1/2");
  CHECK(to_string(Rational(3)) == "3");
  CHECK_THROWS_AS(parse_rational("1/0"), FormatError);
  CHECK_THROWS_AS(parse_rational("x"), FormatError);
  CHECK_THROWS_AS(parse_rational("1/-2"), FormatError);
}

TEST_CASE("boolean scalars form an effect monoid") {
  PcmTable b = boolean_table();
  CHECK(b.size() == 2);
  Report r = laws_of(b, Level::emonoid);
  CHECK(r.passed());
  // 2 elements: 2 unary + 4 binary + 8 ternary instances per level at least
  CHECK(r.checked_total() >= 14);
}

TEST_CASE("three element chain is an effect algebra") {
  PcmTable t = chain3();
  CHECK(laws_of(t, Level::ea).passed());
  TableAlgebra a(t);
  CHECK(a.ocomp(1) == 1);
  CHECK(a.ocomp(0) == 2);
  CHECK(a.ominus(2, 1) == std::optional<Elem>(1));
  CHECK(a.le(1, 2));
  CHECK_FALSE(a.le(2, 1));
}

TEST_CASE("idempotent sum breaks cancellation") {
  PcmTable t({"0", "a"});
  t.add_unit_sums();
  t.set_sum(1, 1, 1);
  Report r = laws_of(t, Level::ea);
  CHECK(r.failed());
  CHECK(r.find("pcm")->passed());
  CHECK((r.has_law("gea.cancel") || r.has_law("gea.positive")));
  // ea level is skipped once gea fails
  CHECK(r.find("ea")->status() == Status::not_checkable);
}

TEST_CASE("one sided sum breaks commutativity") {
  PcmTable t({"0", "a", "b"});
  t.add_unit_sums();
  t.set_sum_one_sided(1, 2, 2);
  Report r = laws_of(t, Level::pcm);
  CHECK(r.has_law("pcm.comm"));
  const Witness* w = r.first_witness();
  REQUIRE(w != nullptr);
  CHECK(w->inputs.size() >= 2);
}

TEST_CASE("pcm text round trip") {
  const std::string text =
      "pcm v1\n"
      "# three point chain\n"
      "elements: 0 h 1\n"
      "zero: 0\n"
      "one: 1\n"
      "h + h = 1\n";
  PcmTable t = parse_pcm(text);
  CHECK(t == chain3());
  CHECK(parse_pcm(serialize_pcm(t)) == t);
}

TEST_CASE("pcm format errors carry lines") {
  try {
    parse_pcm("pcm v1\nelements: 0 a b\nzero: 0\na + a = b\na + a = 0\n");
    FAIL("no error");
  } catch (const FormatError& e) {
    CHECK(e.line() == 5);
  }
  CHECK_THROWS_AS(parse_pcm("pcm v1\nelements: 0 a\nzero: 0\na + c = a\n"), FormatError);
  CHECK_THROWS_AS(parse_pcm("pcm v2\n"), FormatError);
  CHECK_THROWS_AS(parse_pcm("pcm v1\nzero: 0\n"), FormatError);
}

TEST_CASE("arrow style names with colons parse as sums") {
  PcmTable t = parse_pcm("pcm v1\nelements: k:z k:a\nzero: k:z\nk:a * k:a = k:a\n");
  CHECK(t.has_mul());
  CHECK(t.mul(1, 1) == 1);
}

TEST_CASE("rational division") {
  RationalMonoid m;
  CHECK(em_div(m, Rational(1, 4), Rational(1, 2)) == Rational(1, 2));
  CHECK(em_div(m, Rational(1, 3), Rational(1, 3)) == 1);
  CHECK(em_div(m, Rational(0), Rational(2, 3)) == 0);
  CHECK_THROWS_AS(em_div(m, Rational(1, 2), Rational(1, 4)), PreconditionError);
  CHECK_THROWS_AS(em_div(m, Rational(0), Rational(0)), PreconditionError);
}

TEST_CASE("rational division laws on 1000 samples") {
  RationalMonoid m;
  std::vector<int> d{2, 3, 4, 5, 6, 8};
  Report r = check_division_laws<RationalMonoid>(m, 11, 1000, [&](std::mt19937_64& g) { return draw_unit(g, d); });
  CHECK(r.passed());
  CHECK(r.checked() == 1000);
}

TEST_CASE("pair quotient is not unique when a component of t vanishes") {
  PairMonoid m;
  const Pair s{0, Rational(1, 2)}, t{0, 1};
  try {
    em_div(m, s, t);
    FAIL("expected a division failure");
  } catch (const DivisionFailure& e) {
    // q = (i/4, 1/2) for i = 0..4
    CHECK(e.witnesses().size() == 5);
    CHECK(e.witnesses().front() == "(0,1/2)");
    CHECK(e.witnesses().back() == "(1,1/2)");
  }
  // both components nonzero: unique
  CHECK(em_div(m, Pair{Rational(1, 4), Rational(1, 2)}, Pair{Rational(1, 2), 1}) ==
        Pair{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("boolean division is the identity on s") {
  BooleanMonoid m;
  CHECK(em_div(m, std::uint8_t{1}, std::uint8_t{1}) == 1);
  CHECK(em_div(m, std::uint8_t{0}, std::uint8_t{1}) == 0);
}

TEST_CASE("scalars act on themselves") {
  RationalMonoid m;
  std::vector<Rational> vals{0, Rational(1, 3), Rational(1, 2), 1};
  auto act = [&](const Rational& r, const Rational& x) { return m.mul(r, x); };
  Report r = check_module_laws(m, m, act, Side::left, true, Mode::exhaustive(), vals, vals);
  CHECK(r.passed());
  CHECK(r.checked() == 256);
}
