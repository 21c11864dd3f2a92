#include <doctest.h>

#include "liftcat/effectus/effectus.hpp"
#include "liftcat/error.hpp"
#include "liftcat/models/monoids.hpp"
#include "liftcat/models/sets.hpp"
#include "liftcat/triangle/convex.hpp"
#include "liftcat/triangle/formal_sum.hpp"
#include "liftcat/triangle/ss_triangle.hpp"
#include "liftcat/triangle/triangle.hpp"

using namespace liftcat;

namespace {

// 0 = 1
struct TrivialMonoid {
  using value_type = int;
  static constexpr bool has_division = true;
  static constexpr const char* kind = "trivial";
  int zero() const { return 0; }
  int one() const { return 0; }
  bool has_one() const { return true; }
  std::optional<int> sum(int, int) const { return 0; }
  bool le(int, int) const { return true; }
  std::optional<int> ominus(int, int) const { return 0; }
  int ocomp(int) const { return 0; }
  int mul(int, int) const { return 0; }
  int div(int, int) const { return 0; }
  std::string show(int) const { return "0"; }
};

using RA = SsArrow<RationalMonoid>;
using Free = FreeConvex<RationalMonoid>;
using LFree = LiftedConvex<RationalMonoid, Free>;

}  // namespace

TEST_CASE("scalars of pfn and of the kleisli lift are booleans") {
  FunctionModel p = build_pfn({0, 1, 2, 3});
  FpeModel m = pfn_fpe(p);
  ScalarMonoid s = scalars_of(m);
  CHECK(s.table.size() == 2);
  CHECK(s.laws.passed());
  CHECK(s.unit == p.object_of_size(1));

  FunctionModel fs = build_finset({0, 1, 2, 3});
  KleisliModel kl = kleisli_lift(effectus_model(fs.cat));
  CHECK(scalars_of(kl.fpe).table.size() == 2);
}

TEST_CASE("born rule is composition") {
  FunctionModel p = build_pfn({0, 1, 2, 3});
  FpeModel m = pfn_fpe(p);
  ObjId one = p.object_of_size(1), two = p.object_of_size(2);
  ArrId omega = p.find(one, two, {1});
  ArrId q = p.find(two, one, {kUndefined, 0});
  ArrId r = p.find(two, one, {0, kUndefined});
  CHECK(p.fn[born(m, omega, q)] == std::vector<std::uint32_t>{0});
  CHECK(p.fn[born(m, omega, r)] == std::vector<std::uint32_t>{kUndefined});
  CHECK(alpha(m, q, omega) == beta(m, omega, q));
  CHECK(born(m, omega, m.top(two)) == m.dp(omega));
}

TEST_CASE("pfn and the kleisli lift satisfy the triangle") {
  FunctionModel p = build_pfn({0, 1, 2, 3});
  FpeModel m = pfn_fpe(p);
  Report r = check_triangle(m);
  CHECK(r.passed());
  CHECK(r.to_text() == check_triangle(m, Exec::serial).to_text());

  FunctionModel fs = build_finset({0, 1, 2, 3});
  KleisliModel kl = kleisli_lift(effectus_model(fs.cat));
  CHECK(check_triangle(kl.fpe).passed());
}

TEST_CASE("normalization in pfn") {
  FunctionModel p = build_pfn({0, 1, 2, 3});
  FpeModel m = pfn_fpe(p);
  ObjId one = p.object_of_size(1), three = p.object_of_size(3);
  ArrId omega = p.find(one, three, {2});
  Normalized n = normalize(m, omega);
  CHECK(n.state == omega);
  CHECK(n.scalar == m.top(one));
  CHECK(m.is_total(n.state));
  CHECK_THROWS_AS(normalize(m, p.find(one, three, {kUndefined})), PreconditionError);
  ArrId s1 = m.top(one);
  CHECK(division_via_normalization(m, s1, s1) == s1);
}

TEST_CASE("substochastic normalization") {
  RationalMonoid m;
  RA w{2, 1, {Rational(1, 4), Rational(1, 4)}};
  auto n = ss_normalize(m, w);
  CHECK(n.scalar == Rational(1, 2));
  CHECK(n.state.at(0, 0) == Rational(1, 2));
  CHECK(n.state.at(1, 0) == Rational(1, 2));
  CHECK(ss_compose(m, n.state, ss_scalar(m, n.scalar)) == w);
  CHECK_THROWS_AS(ss_normalize(m, ss_zero(m, 2, 1)), PreconditionError);
  CHECK(ss_born(m, w, ss_top(m, 2)) == Rational(1, 2));
}

TEST_CASE("division read off normalization") {
  RationalMonoid m;
  CHECK(ss_division_via_normalization(m, Rational(1, 4), Rational(1, 2)) == Rational(1, 2));
  CHECK(ss_division_via_normalization(m, Rational(1, 3), Rational(1, 3)) == 1);
  CHECK(ss_division_via_normalization(m, Rational(0), Rational(2, 3)) == 0);
  CHECK(ss_division_via_normalization(m, Rational(1, 6), Rational(3, 4)) == Rational(2, 9));
  CHECK_THROWS_AS(ss_division_via_normalization(m, Rational(3, 4), Rational(1, 2)), PreconditionError);
  PairMonoid pm;
  SsArrow<PairMonoid> w{1, 1, {Pair{0, Rational(1, 2)}}};
  CHECK_THROWS_AS(ss_normalize(pm, w), StructureError);
}

TEST_CASE("substochastic triangle over the rationals") {
  RationalMonoid m;
  Report r = check_ss_triangle(m, 11, 500);
  CHECK(r.passed());
  CHECK(r.find("born") != nullptr);
  CHECK(r.find("division")->checked() == 500);
  CHECK(check_ss_triangle(PairMonoid{}, 11, 100).find("normalization")->status() == Status::not_checkable);
}

TEST_CASE("lifted convex sum") {
  RationalMonoid m;
  LFree lx{Free{2}};
  Free base{2};
  // 1/2 |(x, 1/2)> + 1/2 |*> = (x, 1/4)
  FormalSum<LFree::elem, Rational> s{{{base.delta(m, 0), Rational(1, 2)}, Rational(1, 2)},
                                     {lx.bottom(m), Rational(1, 2)}};
  auto tr = conv_lift_sum(m, lx, s);
  CHECK(tr.t == Rational(1, 4));
  REQUIRE(tr.inner_total.has_value());
  CHECK(*tr.inner_total == 1);
  CHECK(tr.value.x() == base.delta(m, 0));
  CHECK(lx.show(m, tr.value) == "(1|0>, 1/4)");

  // mixed: 1/2 |(0, 1)> + 1/2 |(1, 1/2)> = (2/3|0> + 1/3|1>, 3/4)
  FormalSum<LFree::elem, Rational> u{{{base.delta(m, 0), Rational(1)}, Rational(1, 2)},
                                     {{base.delta(m, 1), Rational(1, 2)}, Rational(1, 2)}};
  auto tu = conv_lift_sum(m, lx, u);
  CHECK(tu.t == Rational(3, 4));
  CHECK(tu.value.x() == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});

  FormalSum<LFree::elem, Rational> z{{lx.bottom(m), Rational(1, 3)}, {lx.bottom(m), Rational(2, 3)}};
  auto tz = conv_lift_sum(m, lx, z);
  CHECK(tz.value.is_bottom());
  CHECK(tz.t == 0);
  CHECK_FALSE(tz.inner_total.has_value());

  FormalSum<LFree::elem, Rational> bad{{lx.bottom(m), Rational(1, 2)}};
  CHECK_THROWS_AS(conv_lift_sum(m, lx, bad), PreconditionError);
}

TEST_CASE("convex joint monicity") {
  RationalMonoid m;
  std::vector<std::array<Rational, 3>> triples{{Rational(1, 4), Rational(1, 4), Rational(1, 2)},
                                               {Rational(0), Rational(0), Rational(1)},
                                               {Rational(1), Rational(0), Rational(0)},
                                               {Rational(1, 3), Rational(2, 3), Rational(0)}};
  Report r = check_conv_joint_monicity(m, triples);
  CHECK(r.passed());
  CHECK(r.checked() == 4);
  Report t = check_conv_joint_monicity(TrivialMonoid{}, {{0, 0, 0}});
  CHECK(t.status() == Status::not_checkable);
  CHECK(t.reason() == "trivial monoid");
  CHECK(check_conv_joint_monicity(PairMonoid{}, {}).status() == Status::not_checkable);
}

TEST_CASE("convex suite") {
  Report r = check_convex(RationalMonoid{}, 4, 300);
  CHECK(r.passed());
  CHECK(r.to_text() == check_convex(RationalMonoid{}, 4, 300).to_text());
}

TEST_CASE("formal sums parse") {
  auto s = parse_formal_sum("1/2|x@1/2> + 1/2|*>");
  REQUIRE(s.size() == 2);
  CHECK(s[0].weight == Rational(1, 2));
  CHECK(s[0].point == std::optional<std::string>("x"));
  CHECK(s[0].r == Rational(1, 2));
  CHECK_FALSE(s[1].point.has_value());
  CHECK(s[1].r == 0);
  auto t = parse_formal_sum("|y>");
  CHECK(t[0].weight == 1);
  CHECK(t[0].r == 1);
  CHECK(parse_formal_sum(show_formal_sum(s)).size() == 2);
  CHECK(show_formal_sum(parse_formal_sum(show_formal_sum(s))) == show_formal_sum(s));
  CHECK_THROWS_AS(parse_formal_sum("1/2 x>"), FormatError);
  CHECK_THROWS_AS(parse_formal_sum("1/2|>"), FormatError);
  CHECK_THROWS_AS(parse_formal_sum("1/2|x"), FormatError);
  CHECK_THROWS_AS(parse_formal_sum("1/2|x> +"), FormatError);
}
