#include <doctest.h>

#include "liftcat/effectus/effectus.hpp"
#include "liftcat/error.hpp"
#include "liftcat/fincat/universal.hpp"
#include "liftcat/models/sets.hpp"

using namespace liftcat;

namespace {

std::uint64_t total_functions(const std::vector<std::uint32_t>& sizes) {
  std::uint64_t n = 0;
  for (auto a : sizes)
    for (auto b : sizes) {
      std::uint64_t k = 1;
      for (std::uint32_t i = 0; i < a; ++i) k *= b;
      n += k;
    }
  return n;
}

}  // namespace

TEST_CASE("finset is an effectus, pfn is not") {
  FunctionModel fs = build_finset({0, 1, 2, 3});
  Report r = check_effectus(*fs.cat);
  CHECK(r.passed());
  CHECK(r.checked_total() > 1000);
  CHECK(r.to_text() == check_effectus(*fs.cat, Exec::serial).to_text());

  FunctionModel p = build_pfn({0, 1, 2});
  Report q = check_effectus(*p.cat);
  CHECK(q.failed());
  CHECK(q.has_law("effectus.final"));
}

TEST_CASE("small finset cannot check ternary joint monicity") {
  FunctionModel fs = build_finset({0, 1, 2});
  Report r = check_effectus(*fs.cat);
  CHECK(r.status() == Status::not_checkable);
}

TEST_CASE("effectus model picks the final object") {
  FunctionModel fs = build_finset({0, 1, 2});
  EffectusModel b = effectus_model(fs.cat);
  CHECK(b.final == fs.object_of_size(1));
}

TEST_CASE("kleisli lift of finset") {
  FunctionModel fs = build_finset({0, 1, 2, 3});
  KleisliModel kl = kleisli_lift(effectus_model(fs.cat));
  const FinCategory& c = kl.cat();
  CHECK(c.num_objects() == 3);
  // Kl(X, Y) = B(X, Y + 1): (n+1)^m
  CHECK(c.hom(0, 0).size() == 1);
  CHECK(c.hom(1, 1).size() == 2);
  CHECK(c.hom(2, 2).size() == 9);
  CHECK(c.hom(2, 1).size() == 4);
  CHECK(check_fpe(kl.fpe).passed());
  CHECK(check_kleisli_basics(kl).passed());
  REQUIRE(c.unit_object().has_value());
  CHECK(c.obj_name(*c.unit_object()) == "1");
  for (ObjId x = 0; x < 3; ++x) CHECK(kl.fpe.is_total(kl.fpe.top(x)));
  // kappa_1 . f is total
  for (ArrId f = 0; f < fs.cat->num_arrows(); ++f) {
    if (kl.obj_back[fs.cat->dom(f)] == kNoObj || kl.obj_back[fs.cat->cod(f)] == kNoObj) continue;
    CHECK(kl.fpe.is_total(kl.lift(f)));
  }
}

TEST_CASE("domain predicates in pfn") {
  FunctionModel p = build_pfn({0, 1, 2, 3});
  FpeModel m = pfn_fpe(p);
  CHECK(check_fpe(m).passed());
  const FinCategory& c = *p.cat;
  ObjId two = p.object_of_size(2), three = p.object_of_size(3);
  for (ArrId f : c.hom(two, three)) {
    ArrId d = m.dp(f);
    const auto& vf = p.fn[f];
    const auto& vd = p.fn[d];
    bool total = true;
    for (std::size_t i = 0; i < vf.size(); ++i) {
      CHECK((vd[i] == 0) == (vf[i] != kUndefined));
      total = total && vf[i] != kUndefined;
    }
    CHECK(m.is_total(f) == total);
  }
  // 1 - p flips definedness
  ArrId q = p.find(two, p.object_of_size(1), {0, kUndefined});
  CHECK(p.fn[m.pred_complement(q)] == std::vector<std::uint32_t>{kUndefined, 0});
}

TEST_CASE("dp decomposition over 1 + 1") {
  FunctionModel p = build_pfn({0, 1, 2, 3});
  FpeModel m = pfn_fpe(p);
  const FinCategory& c = *p.cat;
  ObjId one = p.object_of_size(1), two = p.object_of_size(2);
  auto w = nary_coproduct(c, {one, one});
  REQUIRE(w.has_value());
  ArrId f1 = p.find(two, one, {0, kUndefined}), f2 = p.find(two, one, {kUndefined, 0});
  ArrId f = recompose_with_dp(m, *w, {f1, f2});
  CHECK(p.fn[f] == std::vector<std::uint32_t>{0, 1});
  DpDecomposition d = decompose_with_dp(m, *w, f);
  CHECK(d.parts == std::vector<ArrId>{f1, f2});
  CHECK(d.total);
  CHECK(d.dp_sum == m.top(two));
  // overlapping domains
  ArrId g = p.find(two, one, {0, 0});
  CHECK_THROWS_AS(recompose_with_dp(m, *w, {g, f1}), PreconditionError);
}

TEST_CASE("tot of pfn is finset") {
  std::vector<std::uint32_t> sizes{0, 1, 2, 3};
  FunctionModel p = build_pfn(sizes);
  FpeModel m = pfn_fpe(p);
  Subcategory t = tot_subcategory(m);
  CHECK(t.cat.num_arrows() == total_functions(sizes));
  CHECK(t.cat.final_object() == std::optional<ObjId>(p.object_of_size(1)));
  CHECK(check_effectus(t.cat).passed());
}

TEST_CASE("round trip through B") {
  FunctionModel fs = build_finset({0, 1, 2, 3});
  RoundTripB rb = roundtrip_b(effectus_model(fs.cat));
  CHECK(rb.report.passed());
  CHECK(rb.domain.cat.num_arrows() == total_functions({0, 1, 2}));
  CHECK(check_isomorphism(rb.phi, rb.domain.cat, rb.tot.cat).passed());
  CHECK(check_roundtrip_coherence(rb).passed());
}

TEST_CASE("round trip through C") {
  FunctionModel p = build_pfn({0, 1, 2, 3});
  FpeModel m = pfn_fpe(p);
  RoundTripC rc = roundtrip_c(m);
  CHECK(rc.report.passed());
  // Kl(Tot(Pfn{0..3})) reaches {0,1,2}
  CHECK(rc.kl.cat().num_objects() == 3);
  CHECK(rc.kl.cat().num_arrows() == 23);
  for (ObjId x = 0; x < rc.kl.cat().num_objects(); ++x)
    CHECK(rc.image.cat.obj_name(rc.psi.obj[x]) == rc.kl.cat().obj_name(x));
  CHECK(check_isomorphism(rc.psi, rc.kl.cat(), rc.image.cat).passed());
}

TEST_CASE("lifting the identity functor") {
  FunctionModel fs = build_finset({0, 1, 2, 3});
  EffectusModel b = effectus_model(fs.cat);
  KleisliModel kl = kleisli_lift(b);
  FunctorData id = identity_functor(*fs.cat);
  LiftedFunctor lf = lift_functor(id, b, kl, b, kl);
  CHECK(lf.report.passed());
  CHECK(lf.data.arr == identity_functor(kl.cat()).arr);
  CHECK(check_lift_composition(id, id, lf, lf, lf, kl, kl, b).passed());
}

TEST_CASE("tot of the identity") {
  FunctionModel p = build_pfn({0, 1, 2});
  FpeModel m = pfn_fpe(p);
  Subcategory t = tot_subcategory(m);
  TotFunctor tf = tot_functor(identity_functor(*p.cat), m, t, m, t);
  CHECK(tf.report.passed());
  CHECK(tf.data.arr == identity_functor(t.cat).arr);
}

TEST_CASE("coherence needs 1 + 1 inside the restricted domain") {
  FunctionModel fs = build_finset({0, 1, 2});
  RoundTripB rb = roundtrip_b(effectus_model(fs.cat));
  CHECK(rb.report.passed());
  CHECK(rb.domain.cat.num_arrows() == 3);
  Report r = check_roundtrip_coherence(rb);
  CHECK(r.status() == Status::not_checkable);
}
