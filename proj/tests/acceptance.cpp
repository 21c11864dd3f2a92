#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "liftcat/algebra/division.hpp"
#include "liftcat/effectus/effectus.hpp"
#include "liftcat/error.hpp"
#include "liftcat/fincat/format.hpp"
#include "liftcat/fincat/kernels.hpp"
#include "liftcat/fincat/universal.hpp"
#include "liftcat/finpac/finpac.hpp"
#include "liftcat/models/monoids.hpp"
#include "liftcat/models/sets.hpp"
#include "liftcat/models/substochastic.hpp"
#include "liftcat/triangle/convex.hpp"
#include "liftcat/triangle/ss_triangle.hpp"
#include "liftcat/triangle/triangle.hpp"

using namespace liftcat;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr std::uint64_t kSamples = 1000;

struct Outcome {
  bool ok = true;
  std::string detail;
  void need(bool c, const std::string& what) {
    if (c) return;
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
  void need(const Report* r, const std::string& what) {
    if (!r) return need(false, what + " missing");
    if (r->passed()) return;
    std::string why = what + " " + (r->failed() ? "failed" : "not checkable");
    if (const Witness* w = r->first_witness()) why += " (" + w->law + ": " + w->actual + ")";
    if (!r->reason().empty()) why += " (" + r->reason() + ")";
    need(false, why);
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.need(false, std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0) o.need(s < limit_s, "took " + std::to_string(s) + " s");
  if (!o.ok) ++failures;
  std::printf("AC%-2d %s  %s (%.2f s)%s%s\n", id, o.ok ? "PASS" : "FAIL", title.c_str(), s,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

bool exhaustive(const Report& r) {
  if (r.mode().sampled) return false;
  for (const auto& c : r.children())
    if (!exhaustive(c)) return false;
  return true;
}

// one object, a.a = b, a.b = b, b.a = a, b.b = b
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

// X + X = P claimed, nothing leaves P
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

const std::vector<int> kDenoms{2, 3, 4, 6};

}  // namespace

int main() {
  const std::vector<std::uint32_t> desk{0, 1, 2, 3};
  FunctionModel finset = build_finset(desk);
  FunctionModel pfn = build_pfn(desk);
  FpeModel pfn_m = pfn_fpe(pfn);

  criterion(1, "effectus axioms on FinSet{0,1,2,3}", 60, [&](Outcome& o) {
    Report r = check_effectus(*finset.cat);
    o.need(&r, "effectus");
    o.need(exhaustive(r), "not exhaustive");
    for (const char* s : {"final", "squares-E", "squares-K=", "ternary-joint-monicity"}) {
      o.need(r.find(s), s);
      if (const Report* c = r.find(s)) o.need(c->checked() > 0, std::string(s) + " checked nothing");
    }
  });

  criterion(2, "kleisli lift of FinSet is a FinPAC with effects", 120, [&](Outcome& o) {
    KleisliModel kl = kleisli_lift(effectus_model(finset.cat));
    // through the file format, as the construct command does
    ParsedModel pm = parse_fincat(serialize_fincat(kl.cat(), kl.fpe.hom_pcms()));
    o.need(pm.cat.num_objects() == 3, "objects");
    o.need(pm.cat.num_arrows() == 23, "arrows " + std::to_string(pm.cat.num_arrows()));
    FpeModel m = fpe_from_parsed(pm);
    Report ch = check_characterization(m.cat_ptr());
    o.need(&ch, "characterization");
    o.need(ch.find("agreement"), "checker agreement");
    Report ax = check_finpac_axioms(m.pac());
    o.need(&ax, "axioms");
    Report cmp = compare_enrichments(derive_enrichment(m.cat_ptr()), with_tables(m.cat_ptr(), pm.homs));
    o.need(&cmp, "written tables");
    Report f = check_fpe(m);
    o.need(&f, "fpe");
    o.need(exhaustive(ch) && exhaustive(ax) && exhaustive(f), "not exhaustive");
  });

  criterion(3, "Kl(FinSet) is isomorphic to Pfn{0,1,2}", 0, [&](Outcome& o) {
    FunctionModel small = build_pfn({0, 1, 2});
    FpeModel small_m = pfn_fpe(small);
    KleisliModel kl = kleisli_lift(effectus_model(finset.cat));
    Report r = check_kleisli_pfn_iso(kl, finset, small, small_m);
    o.need(&r, "iso");
    FunctorData f = kleisli_to_pfn(kl, finset, small);
    const FinCategory& k = kl.cat();
    // arrow by arrow: X -> Y + 1 read as a partial map, the point of 1 as undefined
    std::set<ArrId> image;
    for (ArrId a = 0; a < k.num_arrows(); ++a) {
      std::uint32_t ny = finset.sizes[kl.obj_under[k.cod(a)]];
      std::vector<std::uint32_t> want;
      for (auto v : finset.fn[kl.under[a]]) want.push_back(v < ny ? v : kUndefined);
      o.need(small.fn[f.arr[a]] == want, "arrow " + k.arr_name(a));
      o.need(small.sizes[small.cat->dom(f.arr[a])] == finset.sizes[kl.obj_under[k.dom(a)]], "domain " + k.arr_name(a));
      o.need(small.sizes[small.cat->cod(f.arr[a])] == ny, "codomain " + k.arr_name(a));
      image.insert(f.arr[a]);
    }
    o.need(image.size() == k.num_arrows(), "not injective");
    o.need(image.size() == small.cat->num_arrows(), "not surjective");
  });

  criterion(4, "round trips through B and C", 0, [&](Outcome& o) {
    RoundTripB rb = roundtrip_b(effectus_model(finset.cat));
    o.need(&rb.report, "phi");
    Report coh = check_roundtrip_coherence(rb);
    o.need(&coh, "coherence");
    o.need(rb.domain.cat.num_arrows() == rb.tot.cat.num_arrows(), "phi arrow counts");
    std::set<ArrId> im(rb.phi.arr.begin(), rb.phi.arr.end());
    o.need(im.size() == rb.tot.cat.num_arrows(), "phi not bijective");

    RoundTripC rc = roundtrip_c(pfn_m);
    o.need(&rc.report, "psi");
    const FinCategory& k = rc.kl.cat();
    for (ObjId x = 0; x < k.num_objects(); ++x)
      o.need(rc.image.cat.obj_name(rc.psi.obj[x]) == k.obj_name(x), "psi moves object " + k.obj_name(x));
    // full and faithful: psi is a bijection on every hom
    for (ObjId x = 0; x < k.num_objects(); ++x)
      for (ObjId y = 0; y < k.num_objects(); ++y) {
        std::set<ArrId> got;
        for (ArrId a : k.hom(x, y)) {
          ArrId b = rc.psi.arr[a];
          o.need(rc.image.cat.dom(b) == rc.psi.obj[x] && rc.image.cat.cod(b) == rc.psi.obj[y], "psi hom");
          got.insert(b);
        }
        o.need(got.size() == k.hom(x, y).size(), "psi not faithful at " + k.obj_name(x) + "," + k.obj_name(y));
        o.need(got.size() == rc.image.cat.hom(rc.psi.obj[x], rc.psi.obj[y]).size(),
               "psi not full at " + k.obj_name(x) + "," + k.obj_name(y));
      }
  });

  criterion(5, "domain predicate laws and decomposition", 0, [&](Outcome& o) {
    Report f = check_fpe(pfn_m);
    const Report* laws = f.find("dp-laws");
    o.need(laws, "dp-laws on Pfn");
    o.need(laws && laws->children().size() == 6, "six dp items");
    o.need(f.find("dp-decomposition"), "dp-decomposition on Pfn");
    o.need(exhaustive(f), "Pfn not exhaustive");
    Report s = check_substochastic(RationalMonoid{}, kSeed, kSamples);
    o.need(s.find("dp-laws"), "dp-laws on matrices");
    o.need(s.find("dp-decomposition"), "dp-decomposition on matrices");
    o.need(s.find("dp-laws") && s.find("dp-laws")->checked_total() >= kSamples, "too few samples");
    o.need(&s, "substochastic");
  });

  criterion(6, "division: laws, pair non-uniqueness, normalization agreement", 0, [&](Outcome& o) {
    RationalMonoid q;
    Report d = check_division_laws<RationalMonoid>(q, kSeed, kSamples,
                                                   [](std::mt19937_64& g) { return draw_unit(g, kDenoms); });
    o.need(&d, "rational division laws");
    o.need(d.checked() >= kSamples, "too few samples");

    PairMonoid p;
    const Pair s{0, Rational(1, 2)}, t{0, 1};
    std::set<std::string> want;
    for (const Pair& c : p.search_space())
      if (p.mul(c, t) == s) want.insert(p.show(c));
    try {
      em_div(p, s, t);
      o.need(false, "pair quotient reported unique");
    } catch (const DivisionFailure& e) {
      std::set<std::string> got(e.witnesses().begin(), e.witnesses().end());
      o.need(got.size() >= 2, "fewer than two quotients");
      o.need(got == want, "quotient witnesses differ from the grid oracle");
    }

    std::uint64_t agree = 0;
    for (std::uint64_t i = 0; i < kSamples; ++i) {
      auto g = rng_for(kSeed + 1, i);
      Rational a = draw_unit(g, kDenoms), b = draw_unit(g, kDenoms);
      if (b == 0) b = 1;
      Rational num = a * b;  // num <= b
      Rational v = ss_division_via_normalization(q, num, b);
      o.need(v == em_div(q, num, b) && v == num / b, "disagree at " + to_string(num) + "/" + to_string(b));
      ++agree;
    }
    o.need(agree == kSamples, "pairs");
  });

  criterion(7, "normalization of substates", 0, [&](Outcome& o) {
    RationalMonoid m;
    Report r = check_ss_triangle(m, kSeed, kSamples);
    const Report* n = r.find("normalization");
    o.need(n, "normalization");
    o.need(n && n->checked() >= kSamples, "too few samples");
    SsSampler smp;
    std::uint64_t seen = 0;
    for (std::uint64_t i = 0; seen < kSamples; ++i) {
      auto g = rng_for(kSeed + 2, i);
      auto w = smp.matrix(m, g, smp.size(g), 1);
      if (ss_is_zero(m, w)) continue;
      ++seen;
      Rational tot = 0;
      for (std::size_t y = 0; y < w.rows; ++y) tot += w.at(y, 0);
      auto nn = ss_normalize(m, w);
      o.need(nn.scalar == tot, "scalar");
      for (std::size_t y = 0; y < w.rows; ++y) o.need(nn.state.at(y, 0) == w.at(y, 0) / tot, "state entry");
      o.need(ss_is_total(m, nn.state), "state not total");
      o.need(ss_compose(m, nn.state, ss_scalar(m, nn.scalar)) == w, "factorization");
    }
  });

  criterion(8, "lifted convex sums, coproducts, ternary determinacy", 0, [&](Outcome& o) {
    RationalMonoid m;
    Report r = check_convex(m, kSeed, kSamples);
    o.need(&r, "convex");
    const Report* l = r.find("lift-sum");
    const Report* c = r.find("coproduct");
    const Report* j = r.find("conv-joint-monicity");
    o.need(l && l->checked() >= kSamples, "lift-sum samples");
    o.need(c && c->checked() > 0, "coproduct samples");
    o.need(j && j->checked() >= kSamples, "ternary samples");
    // 1/2 |(x, 1/2)> + 1/2 |*> = (x, 1/4)
    FreeConvex<RationalMonoid> base{1};
    LiftedConvex<RationalMonoid, FreeConvex<RationalMonoid>> lx{base};
    FormalSum<decltype(lx)::elem, Rational> s{{{base.delta(m, 0), Rational(1, 2)}, Rational(1, 2)},
                                              {lx.bottom(m), Rational(1, 2)}};
    auto tr = conv_lift_sum(m, lx, s);
    o.need(tr.t == Rational(1, 4) && tr.inner_total == std::optional<Rational>(1), "worked example");
  });

  criterion(9, "Born rule transposes, naturality, injectivity", 0, [&](Outcome& o) {
    Report t = check_triangle(pfn_m);
    for (const char* s : {"born", "naturality", "alpha-injective"}) {
      o.need(t.find(s), std::string("Pfn ") + s);
      if (const Report* c = t.find(s)) o.need(c->checked() > 0, std::string("Pfn ") + s + " checked nothing");
    }
    o.need(exhaustive(t), "Pfn not exhaustive");
    Report ss = check_ss_triangle(RationalMonoid{}, kSeed, kSamples);
    o.need(ss.find("born"), "matrix born");
    o.need(ss.find("naturality"), "matrix naturality");
  });

  criterion(10, "negative controls", 0, [&](Outcome& o) {
    {
      ParsedModel pm = parse_fincat(kNonAssoc);
      const FinCategory& c = pm.cat;
      Report r = check_category(c);
      o.need(r.has_law("cat.assoc"), "associativity mutant accepted");
      AssocResult a = find_assoc_violations(c, Exec::serial);
      o.need(!a.first.empty(), "no associativity witness");
      for (const auto& v : a.first)
        o.need(c.compose(c.compose(v.h, v.g), v.f) != c.compose(v.h, c.compose(v.g, v.f)), "bogus assoc witness");
    }
    {
      ParsedModel pm = parse_fincat(kNoMediator);
      const FinCategory& c = pm.cat;
      Report r = verify_annotations(c);
      o.need(r.has_law("coproduct.missing"), "mediator mutant accepted");
      const Witness* w = r.first_witness();
      o.need(w && w->inputs == std::vector<std::string>{"X", "iX", "iX"}, "mediator witness");
      o.need(c.hom(c.obj("P"), c.obj("X")).empty(), "oracle: P -> X is empty");
    }
    {
      const FinCategory& c = *pfn.cat;
      ObjId one = pfn.object_of_size(1), two = pfn.object_of_size(2);
      auto w = nary_coproduct(c, {one, one});
      ArrId g = pfn.find(two, one, {0, 0}), f = pfn.find(two, one, {0, kUndefined});
      // oracle: both defined at 0
      o.need(pfn.fn[g][0] != kUndefined && pfn.fn[f][0] != kUndefined, "oracle overlap");
      try {
        recompose_with_dp(pfn_m, *w, {g, f});
        o.need(false, "overlapping Dp sum accepted");
      } catch (const PreconditionError& e) {
        o.need(e.witnesses() == std::vector<std::string>{c.arr_name(g), c.arr_name(f)}, "Dp witness");
      }
      RationalMonoid m;
      SsArrow<RationalMonoid> a{1, 1, {Rational(2, 3)}}, b{1, 1, {Rational(1, 2)}};
      try {
        ss_stack(m, a, b);
        o.need(false, "overlapping matrix stack accepted");
      } catch (const PreconditionError& e) {
        o.need(e.witnesses() == std::vector<std::string>{ss_show(m, a), ss_show(m, b)}, "stack witness");
      }
    }
    {
      PairMonoid p;
      try {
        em_div(p, Pair{0, Rational(1, 2)}, Pair{0, 1});
        o.need(false, "pair quotient accepted");
      } catch (const DivisionFailure& e) {
        o.need(e.witnesses().size() >= 2, "quotient witness");
        for (const auto& s : e.witnesses()) o.need(s.size() > 0, "empty witness");
      }
    }
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
