#include <doctest.h>

#include <random>

#include "liftcat/error.hpp"
#include "liftcat/fincat/format.hpp"
#include "liftcat/fincat/functor.hpp"
#include "liftcat/fincat/kernels.hpp"
#include "liftcat/fincat/universal.hpp"
#include "liftcat/models/sets.hpp"

using namespace liftcat;

namespace {

const char* kArrow =
    "fincat v1\n"
    "objects: A B\n"
    "arrow: iA A A\n"
    "arrow: iB B B\n"
    "arrow: f A B\n"
    "id: A = iA\n"
    "id: B = iB\n";

// One object, composition a.a = b, a.b = b, b.a = a, b.b = b.
const char* kNonAssoc =
    "fincat v1\n"
    "objects: O\n"
    "arrow: i O O\n"
    "arrow: a O O\n"
    "arrow: b O O\n"
    "id: O = i\n"
    "compose: a . a = b\n"
    "compose: a . b = b\n"
    "compose: b . a = a\n"
    "compose: b . b = b\n";

// X + X = P claimed, but nothing leaves P.
const char* kNoMediator =
    "fincat v1\n"
    "objects: X P\n"
    "arrow: iX X X\n"
    "arrow: iP P P\n"
    "arrow: k1 X P\n"
    "arrow: k2 X P\n"
    "id: X = iX\n"
    "id: P = iP\n"
    "coproduct: X + X = P via k1 k2\n";

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("walking arrow parses and is a category") {
  ParsedModel m = parse_fincat(kArrow);
  const FinCategory& c = m.cat;
  CHECK(c.num_objects() == 2);
  CHECK(c.num_arrows() == 3);
  ArrId f = c.arr("f");
  CHECK(c.compose(c.id(c.obj("B")), f) == f);
  CHECK(c.compose(f, c.id(c.obj("A"))) == f);
  CHECK(check_category(c).passed());
  CHECK(c.hom(c.obj("B"), c.obj("A")).empty());
}

TEST_CASE("format errors name the line") {
  try {
    parse_fincat("fincat v1\nobjects: A\narrow: x A B\n");
    FAIL("no error");
  } catch (const FormatError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_fincat("fincat v1\nobjects:\n"), FormatError);
  CHECK_THROWS_AS(parse_fincat("category\n"), FormatError);
  // f . f is not composable
  CHECK_THROWS_AS(parse_fincat(std::string(kArrow) + "compose: f . f = f\n"), FormatError);
  CHECK_THROWS_AS(parse_fincat(std::string(kArrow) + "bogus: 1\n"), FormatError);
}

TEST_CASE("broken associativity is caught with a real witness") {
  ParsedModel m = parse_fincat(kNonAssoc);
  const FinCategory& c = m.cat;
  Report r = check_category(c);
  CHECK(r.failed());
  CHECK(r.has_law("cat.assoc"));
  AssocResult s = find_assoc_violations(c, Exec::serial);
  CHECK(s == find_assoc_violations(c, Exec::parallel));
  CHECK(s.triples == 27);
  REQUIRE(!s.first.empty());
  for (const auto& v : s.first) CHECK(c.compose(c.compose(v.h, v.g), v.f) != c.compose(v.h, c.compose(v.g, v.f)));
  // brute force count
  std::uint64_t bad = 0;
  for (ArrId h = 0; h < 3; ++h)
    for (ArrId g = 0; g < 3; ++g)
      for (ArrId f = 0; f < 3; ++f) bad += c.compose(c.compose(h, g), f) != c.compose(h, c.compose(g, f));
  CHECK(s.violations == bad);
}

TEST_CASE("claimed coproduct without mediators is rejected") {
  ParsedModel m = parse_fincat(kNoMediator);
  Report r = verify_annotations(m.cat);
  CHECK(r.failed());
  CHECK(r.has_law("coproduct.missing"));
  const Witness* w = r.first_witness();
  REQUIRE(w != nullptr);
  CHECK(w->inputs == std::vector<std::string>{"X", "iX", "iX"});
  CHECK(w->actual == "0 mediators");
}

TEST_CASE("finset hom counts are n^m") {
  std::vector<std::uint32_t> sizes{0, 1, 2, 3};
  FunctionModel fs = build_finset(sizes);
  const FinCategory& c = *fs.cat;
  std::uint64_t total = 0;
  for (auto m : sizes)
    for (auto n : sizes) {
      CHECK(c.hom(fs.object_of_size(m), fs.object_of_size(n)).size() == ipow(n, m));
      total += ipow(n, m);
    }
  CHECK(total == 60);
  CHECK(c.num_arrows() == 60);
  CHECK(c.hom(fs.object_of_size(2), fs.object_of_size(2)).size() == 4);
  CHECK(check_category(c).passed());
  CHECK(verify_annotations(c).passed());
  CHECK(verify_final(c, fs.object_of_size(1)));
  CHECK(verify_initial(c, fs.object_of_size(0)));
  CHECK_FALSE(verify_final(c, fs.object_of_size(2)));
}

TEST_CASE("finset composition is function composition") {
  FunctionModel fs = build_finset({0, 1, 2, 3});
  const FinCategory& c = *fs.cat;
  std::mt19937_64 g(5);
  for (int k = 0; k < 200; ++k) {
    ArrId f = static_cast<ArrId>(g() % c.num_arrows());
    ObjId y = c.cod(f);
    ObjId z = static_cast<ObjId>(g() % c.num_objects());
    const auto& h = c.hom(y, z);
    if (h.empty()) continue;
    ArrId gg = h[g() % h.size()];
    const auto& vf = fs.fn[f];
    const auto& vg = fs.fn[gg];
    std::vector<std::uint32_t> want;
    for (auto v : vf) want.push_back(vg[v]);
    CHECK(fs.fn[c.compose(gg, f)] == want);
    CHECK(fs.find(c.dom(f), z, want) == c.compose(gg, f));
  }
}

TEST_CASE("coproducts exist exactly for listed sums") {
  FunctionModel fs = build_finset({0, 1, 2, 3});
  const FinCategory& c = *fs.cat;
  CHECK(c.coproduct(fs.object_of_size(1), fs.object_of_size(2)) != nullptr);
  CHECK(c.coproduct(fs.object_of_size(2), fs.object_of_size(2)) == nullptr);
  const Coproduct* w = c.coproduct(fs.object_of_size(1), fs.object_of_size(1));
  REQUIRE(w != nullptr);
  CHECK(fs.fn[w->k1] == std::vector<std::uint32_t>{0});
  CHECK(fs.fn[w->k2] == std::vector<std::uint32_t>{1});
  CHECK(verify_coproduct(c, *w).passed());
  ArrId h = derive_cotuple(c, *w, c.id(fs.object_of_size(1)), c.id(fs.object_of_size(1)));
  CHECK(h == codiagonal(c, *w));
  CHECK(fs.fn[h] == std::vector<std::uint32_t>{0, 0});
}

TEST_CASE("serialize and parse round trip") {
  FunctionModel fs = build_finset({0, 1, 2});
  const FinCategory& c = *fs.cat;
  ParsedModel m = parse_fincat(serialize_fincat(c));
  const FinCategory& d = m.cat;
  REQUIRE(d.num_arrows() == c.num_arrows());
  CHECK(d.num_arrows() == 11);
  for (ArrId f = 0; f < c.num_arrows(); ++f)
    for (ObjId z = 0; z < c.num_objects(); ++z)
      for (ArrId g : c.hom(c.cod(f), z))
        CHECK(d.arr_name(d.compose(d.arr(c.arr_name(g)), d.arr(c.arr_name(f)))) == c.arr_name(c.compose(g, f)));
  CHECK(d.coproducts().size() == c.coproducts().size());
  CHECK(d.final_object() == c.final_object());
  CHECK(serialize_fincat(d) == serialize_fincat(c));
}

TEST_CASE("pullback cone tallies agree serial and parallel") {
  FunctionModel fs = build_finset({0, 1, 2, 3});
  const FinCategory& c = *fs.cat;
  ObjId one = fs.object_of_size(1), two = fs.object_of_size(2);
  ArrId bang2 = c.hom(two, one).front();
  // 2 over the cospan 1 -> 1 <- 1 is not a pullback
  Square sq{bang2, bang2, c.id(one), c.id(one)};
  std::uint64_t bad = 0;
  for (ObjId z = 0; z < c.num_objects(); ++z) {
    ConeTally s = tally_pullback_cones(c, sq, z, Exec::serial);
    CHECK(s == tally_pullback_cones(c, sq, z, Exec::parallel));
    bad += s.bad;
  }
  // one cone per Z with |Z| > 0 has 2^|Z| > 1 mediators; Z = 0 has exactly one
  CHECK(bad == 3);
  CHECK(is_pullback(c, sq).failed());
  ArrId f = c.hom(two, fs.object_of_size(3))[5];
  Square trivial{f, c.id(two), c.id(fs.object_of_size(3)), f};
  CHECK(is_pullback(c, trivial).passed());
}

TEST_CASE("jointly monic families") {
  FunctionModel fs = build_finset({0, 1, 2, 3});
  const FinCategory& c = *fs.cat;
  ObjId two = fs.object_of_size(2), one = fs.object_of_size(1);
  CHECK(is_jointly_monic(c, {c.id(two)}));
  CHECK_FALSE(is_jointly_monic(c, {c.hom(two, one).front()}));
  auto col = find_monic_collision(c, {c.hom(two, one).front()}, two, Exec::serial);
  REQUIRE(col.has_value());
  CHECK(col == find_monic_collision(c, {c.hom(two, one).front()}, two, Exec::parallel));
}

TEST_CASE("functors and subcategories") {
  FunctionModel fs = build_finset({0, 1, 2, 3});
  const FinCategory& c = *fs.cat;
  CHECK(check_isomorphism(identity_functor(c), c, c).passed());
  FunctorData rev = reversal_functor(fs);
  CHECK(check_functor(rev, c, c, {true, true}).passed());
  CHECK(check_isomorphism(compose_functors(rev, rev), c, c).passed());
  std::vector<bool> keep{true, true, false, false};
  Subcategory s = subcategory(c, keep, [](ArrId) { return true; });
  CHECK(s.cat.num_objects() == 2);
  CHECK(s.cat.num_arrows() == 3);
  CHECK(check_functor(s.inclusion, s.cat, c).passed());
  FunctorData bad = identity_functor(c);
  std::swap(bad.arr[0], bad.arr[1]);
  CHECK(check_functor(bad, c, c).failed());
}

TEST_CASE("zero arrows exist in pfn but not in finset") {
  FunctionModel fs = build_finset({0, 1, 2});
  CHECK_FALSE(zero_arrows(*fs.cat).has_value());
  FunctionModel pf = build_pfn({0, 1, 2});
  auto z = zero_arrows(*pf.cat);
  REQUIRE(z.has_value());
  for (ObjId x = 0; x < pf.cat->num_objects(); ++x)
    for (ObjId y = 0; y < pf.cat->num_objects(); ++y)
      for (auto v : pf.fn[z->at(x, y)]) CHECK(v == kUndefined);
}
