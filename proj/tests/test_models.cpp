#include <doctest.h>

#include "liftcat/error.hpp"
#include "liftcat/models/monoids.hpp"
#include "liftcat/models/sets.hpp"
#include "liftcat/models/ssmat_format.hpp"
#include "liftcat/models/substochastic.hpp"

using namespace liftcat;

namespace {

using RA = SsArrow<RationalMonoid>;

RA col(std::vector<Rational> v) {
  std::size_t n = v.size();
  return {n, 1, std::move(v)};
}

RA row(std::vector<Rational> v) {
  std::size_t n = v.size();
  return {1, n, std::move(v)};
}

}  // namespace

TEST_CASE("parse sizes") {
  CHECK(parse_sizes("0,1,2") == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(parse_sizes("3,1") == std::vector<std::uint32_t>{3, 1});
  CHECK_THROWS(parse_sizes("a,b"));
  CHECK_THROWS(build_finset({1, 1}));
}

TEST_CASE("cap is enforced") {
  CHECK_THROWS_AS(build_pfn({0, 1, 2, 3, 4, 5, 6}, 1000), CapExceeded);
}

TEST_CASE("kleisli of finset is pfn") {
  FunctionModel fs = build_finset({0, 1, 2, 3});
  FunctionModel pf = build_pfn({0, 1, 2});
  FpeModel pm = pfn_fpe(pf);
  KleisliModel kl = kleisli_lift(effectus_model(fs.cat));
  Report r = check_kleisli_pfn_iso(kl, fs, pf, pm);
  CHECK(r.passed());
  FunctorData f = kleisli_to_pfn(kl, fs, pf);
  CHECK(check_isomorphism(f, kl.cat(), *pf.cat).passed());
  // the arrow 2 -> 1 + 1 sending 0 to the point of 1 and 1 to the extra point
  ObjId k2 = kl.obj_back[fs.object_of_size(2)];
  ObjId k1 = kl.obj_back[fs.object_of_size(1)];
  ArrId b = fs.find(fs.object_of_size(2), fs.object_of_size(2), {0, 1});
  ArrId a = kl.from_base(b, k1);
  CHECK(pf.fn[f.arr[a]] == std::vector<std::uint32_t>{0, kUndefined});
  CHECK(f.obj[k2] == pf.object_of_size(2));
}

TEST_CASE("pfn against boolean matrices") {
  FunctionModel pf = build_pfn({0, 1, 2, 3});
  FpeModel pm = pfn_fpe(pf);
  CHECK(check_boolean_matrix_iso(pf, pm).passed());
  CHECK(check_deterministic_embedding(build_finset({0, 1, 2, 3})).passed());
  BooleanMonoid m;
  // partial 0/1 matrices 2 -> 3: (3+1)^2
  CHECK(ss_enumerate_boolean(m, 3, 2, true).size() == 16);
  CHECK(ss_enumerate_boolean(m, 3, 2, false).size() == 9);
  CHECK(ss_enumerate_boolean(m, 0, 2, false).empty());
  CHECK(ss_enumerate_boolean(m, 0, 0, false).size() == 1);
}

TEST_CASE("substochastic composition") {
  RationalMonoid m;
  RA f = col({Rational(1, 2), Rational(1, 2)});
  RA g = row({1, Rational(1, 2)});
  RA h = ss_compose(m, g, f);
  CHECK(h.rows == 1);
  CHECK(h.at(0, 0) == Rational(3, 4));
  CHECK(ss_dp(m, f).at(0, 0) == 1);
  CHECK(ss_is_total(m, f));
  CHECK_FALSE(ss_is_total(m, h));
  CHECK(ss_dp(m, h).at(0, 0) == Rational(3, 4));
  CHECK(ss_compose(m, ss_identity(m, 2), f) == f);
}

TEST_CASE("sums and stacking") {
  RationalMonoid m;
  RA a = col({Rational(1, 2), Rational(1, 4)});
  RA b = col({Rational(1, 4), 0});
  auto s = ss_sum(m, a, b);
  REQUIRE(s.has_value());
  CHECK(s->at(0, 0) == Rational(3, 4));
  CHECK(s->at(1, 0) == Rational(1, 4));
  CHECK_FALSE(ss_sum(m, a, a).has_value());
  RA x = col({Rational(1, 3)}), y = col({Rational(1, 2)});
  RA st = ss_stack(m, x, y);
  CHECK(ss_compose(m, ss_proj(m, 1, 1, 1), st) == x);
  CHECK(ss_compose(m, ss_proj(m, 1, 1, 2), st) == y);
  CHECK(ss_compose(m, ss_proj(m, 1, 1, 1), ss_kappa(m, 1, 1, 1)) == ss_identity(m, 1));
  CHECK(ss_is_zero(m, ss_compose(m, ss_proj(m, 1, 1, 2), ss_kappa(m, 1, 1, 1))));
  // 2/3 + 1/2 > 1
  CHECK_THROWS_AS(ss_stack(m, col({Rational(2, 3)}), y), PreconditionError);
}

TEST_CASE("substochastic suites over the rationals") {
  RationalMonoid m;
  Report r = check_substochastic(m, 3, 1000);
  CHECK(r.passed());
  CHECK(r.find("dp-laws") != nullptr);
  CHECK(r.find("dp-decomposition") != nullptr);
  CHECK(r.to_text() == check_substochastic(m, 3, 1000).to_text());
}

TEST_CASE("substochastic suites over booleans and pairs") {
  SsSampler b;
  b.denoms = {1};
  CHECK(check_substochastic(BooleanMonoid{}, 5, 300, b).passed());
  CHECK(check_substochastic(PairMonoid{}, 5, 300).passed());
}

TEST_CASE("sampled columns stay substochastic") {
  SsSampler s;
  RationalMonoid m;
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto g = rng_for(9, i);
    RA a = s.matrix(m, g, 3, 2);
    CHECK(ss_valid(m, a));
    RA t = s.matrix(m, g, 3, 2, true);
    CHECK(ss_is_total(m, t));
  }
}

TEST_CASE("ssmat round trip") {
  const std::string text =
      "ssmat v1\n"
      "monoid: rational\n"
      "shape: 2 3\n"
      "denom-hint: 4\n"
      "1/2 1/4\n"
      "0 1\n"
      "3/4 0\n";
  SsmatFile f = parse_ssmat(text);
  CHECK(f.rows == 2);
  CHECK(f.cols == 3);
  CHECK(check_ssmat(f).passed());
  RationalMonoid m;
  RA a = ssmat_matrix(m, f);
  CHECK(a.at(1, 0) == Rational(1, 4));
  CHECK(a.at(0, 2) == Rational(3, 4));
  CHECK(ss_dp(m, a).at(0, 0) == Rational(3, 4));
  CHECK(serialize_ssmat(to_ssmat(m, a, 4)) == text);
  CHECK_THROWS_AS(ssmat_matrix(PairMonoid{}, f), FormatError);
}

TEST_CASE("ssmat rejects overfull columns and bad lines") {
  SsmatFile f = parse_ssmat("ssmat v1\nshape: 2 1\n2/3 1/2\n");
  Report r = check_ssmat(f);
  CHECK(r.failed());
  CHECK(r.has_law("ssmat.column-total"));
  SsmatFile h = parse_ssmat("ssmat v1\nshape: 1 1\ndenom-hint: 3\n1/2\n");
  CHECK(check_ssmat(h).has_law("ssmat.denom-hint"));
  try {
    parse_ssmat("ssmat v1\nshape: 2 1\n1/2\n");
    FAIL("no error");
  } catch (const FormatError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_ssmat("ssmat v1\nmonoid: complex\nshape: 1 1\n1\n"), FormatError);
}

TEST_CASE("pair entries") {
  SsmatFile f = parse_ssmat("ssmat v1\nmonoid: pair\nshape: 2 1\n1/2;0 1/4;1\n");
  PairMonoid m;
  auto a = ssmat_matrix(m, f);
  CHECK(a.at(1, 0) == Pair{Rational(1, 4), 1});
  CHECK_FALSE(ss_is_total(m, a));
  CHECK(ss_dp(m, a).at(0, 0) == Pair{Rational(3, 4), 1});
  CHECK(check_ssmat(f).passed());
}
