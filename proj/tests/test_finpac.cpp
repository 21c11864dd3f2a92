#include <doctest.h>

#include "liftcat/effectus/effectus.hpp"
#include "liftcat/finpac/finpac.hpp"
#include "liftcat/models/sets.hpp"

using namespace liftcat;

namespace {

// disjoint domains, then pointwise union
std::optional<std::vector<std::uint32_t>> union_of(const std::vector<std::uint32_t>& f,
                                                   const std::vector<std::uint32_t>& g) {
  std::vector<std::uint32_t> out(f.size(), kUndefined);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != kUndefined && g[i] != kUndefined) return std::nullopt;
    out[i] = f[i] != kUndefined ? f[i] : g[i];
  }
  return out;
}

}  // namespace

TEST_CASE("pfn hom sizes are (n+1)^m") {
  FunctionModel p = build_pfn({0, 1, 2});
  const FinCategory& c = *p.cat;
  CHECK(c.hom(p.object_of_size(2), p.object_of_size(1)).size() == 4);
  CHECK(c.hom(p.object_of_size(2), p.object_of_size(2)).size() == 9);
  CHECK(c.num_arrows() == 23);
  CHECK(build_pfn({0, 1, 2, 3}).cat->num_arrows() == 144);
}

TEST_CASE("derived pfn sums are disjoint unions") {
  FunctionModel p = build_pfn({0, 1, 2, 3});
  FinPacStructure s = derive_enrichment(p.cat);
  const FinCategory& c = *p.cat;
  std::uint64_t defined = 0, pairs = 0;
  for (ObjId x = 0; x < c.num_objects(); ++x)
    for (ObjId y = 0; y < c.num_objects(); ++y) {
      // Y + Y must be in the model
      if (!c.coproduct(y, y)) {
        CHECK_FALSE(s.has_table(x, y));
        continue;
      }
      for (ArrId f : c.hom(x, y))
        for (ArrId g : c.hom(x, y)) {
          ++pairs;
          auto want = union_of(p.fn[f], p.fn[g]);
          auto got = s.sum(f, g);
          REQUIRE(want.has_value() == got.has_value());
          if (got) {
            ++defined;
            CHECK(p.fn[*got] == *want);
          }
        }
    }
  CHECK(pairs > defined);
  // Hom(1,1) = {undef, 0}: undef+undef, undef+0, 0+undef
  const auto& h11 = c.hom(p.object_of_size(1), p.object_of_size(1));
  std::uint64_t d11 = 0;
  for (ArrId f : h11)
    for (ArrId g : h11) d11 += s.sum(f, g).has_value();
  CHECK(d11 == 3);
  CHECK(check_pfn_sum_oracle(p, s).passed());
}

TEST_CASE("pfn is a finpac both ways") {
  FunctionModel p = build_pfn({0, 1, 2, 3});
  FinPacStructure s = derive_enrichment(p.cat);
  CHECK(check_hom_pcms(s).passed());
  CHECK(check_bihomomorphism(s).passed());
  CHECK(check_finpac_axioms(s).passed());
  Report ch = check_characterization(p.cat);
  CHECK(ch.passed());
  CHECK(ch.find("agreement")->passed());
  CHECK(check_nary_axioms(s, 3).passed());
}

TEST_CASE("bounds are unique") {
  FunctionModel p = build_pfn({0, 1, 2});
  FinPacStructure s = derive_enrichment(p.cat);
  const FinCategory& c = *p.cat;
  ObjId two = p.object_of_size(2), one = p.object_of_size(1);
  for (ArrId f : c.hom(two, one))
    for (ArrId g : c.hom(two, one)) {
      auto b = find_bounds(c, s.zero(), f, g);
      CHECK(b.size() == (s.orthogonal(f, g) ? 1u : 0u));
    }
}

TEST_CASE("finset has no zero arrows, so no enrichment") {
  FunctionModel fs = build_finset({0, 1, 2});
  Derivation d = try_derive_enrichment(fs.cat);
  CHECK_FALSE(d.pac.has_value());
  CHECK(d.report.failed());
  Report ch = check_characterization(fs.cat);
  CHECK(ch.failed());
  CHECK(ch.has_law("finpac.zero-arrows"));
}

TEST_CASE("kleisli of finset is a finpac with agreeing checkers") {
  FunctionModel fs = build_finset({0, 1, 2, 3});
  KleisliModel kl = kleisli_lift(effectus_model(fs.cat));
  CHECK(kl.cat().num_objects() == 3);
  CHECK(kl.cat().num_arrows() == 23);
  Report ch = check_characterization(kl.fpe.cat_ptr());
  CHECK(ch.passed());
  CHECK(check_finpac_axioms(kl.fpe.pac()).passed());
  Report serial = check_finpac_axioms(kl.fpe.pac(), Exec::serial);
  CHECK(serial.to_text() == check_finpac_axioms(kl.fpe.pac(), Exec::parallel).to_text());
}

TEST_CASE("tampered hom table is rejected") {
  FunctionModel p = build_pfn({0, 1, 2});
  FinPacStructure s = derive_enrichment(p.cat);
  auto homs = s.hom_pcms();
  const FinCategory& c = *p.cat;
  ObjId two = p.object_of_size(2), one = p.object_of_size(1);
  bool done = false;
  for (auto& h : homs) {
    if (h.x != two || h.y != one) continue;
    // {0 -> 0} and {1 -> 0} are orthogonal; forget their sum
    ArrId a = p.find(two, one, {0, kUndefined}), b = p.find(two, one, {kUndefined, 0});
    h.table.clear_sum(c.local(a), c.local(b));
    done = true;
  }
  REQUIRE(done);
  FinPacStructure t = with_tables(p.cat, homs);
  Report cmp = compare_enrichments(s, t);
  CHECK(cmp.failed());
  CHECK(cmp.has_law("finpac.enrichment-unique"));
  CHECK(check_finpac_axioms(t).failed());
}

TEST_CASE("n-ary decomposition re-sums") {
  FunctionModel p = build_pfn({0, 1, 2, 3});
  FinPacStructure s = derive_enrichment(p.cat);
  const FinCategory& c = *p.cat;
  ObjId one = p.object_of_size(1), three = p.object_of_size(3);
  auto w = nary_coproduct(c, {one, one, one});
  REQUIRE(w.has_value());
  CHECK(w->apex == three);
  ArrId f = p.find(three, three, {2, kUndefined, 0});
  auto parts = nary_decompose(s, *w, f);
  REQUIRE(parts.size() == 3);
  // p_i . f restricts f to values landing in summand i
  CHECK(p.fn[parts[0]] == std::vector<std::uint32_t>{kUndefined, kUndefined, 0});
  CHECK(p.fn[parts[1]] == std::vector<std::uint32_t>{kUndefined, kUndefined, kUndefined});
  CHECK(p.fn[parts[2]] == std::vector<std::uint32_t>{0, kUndefined, kUndefined});
}
