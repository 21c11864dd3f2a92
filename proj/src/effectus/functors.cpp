#include "liftcat/effectus/effectus.hpp"
#include "liftcat/error.hpp"
#include "liftcat/fincat/universal.hpp"

namespace liftcat {

LiftedFunctor lift_functor(const FunctorData& f, const EffectusModel& b1, const KleisliModel& k1,
                           const EffectusModel& b2, const KleisliModel& k2, Exec ex) {
  const FinCategory& c1 = *b1.cat;
  const FinCategory& c2 = *b2.cat;
  LiftedFunctor lf;
  lf.report = Report("lift-functor");
  Report pre = check_functor(f, c1, c2, {false, true}, ex);
  if (pre.failed()) {
    const Witness* w = pre.first_witness();
    throw PreconditionError("functor does not preserve coproducts",
                            w ? std::vector<std::string>{w->law} : std::vector<std::string>{});
  }
  if (!verify_final(c2, f.obj[b1.final]))
    throw PreconditionError("functor does not preserve the final object", {c1.obj_name(b1.final)});

  const FinCategory& kl1 = k1.cat();
  for (ObjId x = 0; x < kl1.num_objects(); ++x) {
    ObjId x0 = k1.obj_under[x];
    ObjId fx = f.obj[x0];
    if (k2.obj_back[fx] == kNoObj)
      throw PreconditionError("image object has no chosen X+1", {c2.obj_name(fx)});
    lf.data.obj.push_back(k2.obj_back[fx]);
    const Coproduct& w = *c1.coproduct(x0, b1.final);
    Coproduct img{fx, f.obj[b1.final], f.obj[w.apex], f.arr[w.k1], f.arr[w.k2]};
    const Coproduct& w2 = *c2.coproduct(fx, b2.final);
    ArrId bang = c2.hom(f.obj[b1.final], b2.final).front();
    lf.l.push_back(derive_cotuple(c2, img, w2.k1, c2.compose(w2.k2, bang)));
  }
  for (ArrId a = 0; a < kl1.num_arrows(); ++a) {
    ObjId y = kl1.cod(a);
    ArrId img = c2.compose(lf.l[y], f.arr[k1.under[a]]);
    lf.data.arr.push_back(k2.from_base(img, lf.data.obj[y]));
  }
  lf.report.add(check_functor(lf.data, kl1, k2.cat(), {}, ex));

  Report eq("l-equations");
  for (ObjId x = 0; x < kl1.num_objects(); ++x) {
    ObjId x0 = k1.obj_under[x];
    const Coproduct& w = *c1.coproduct(x0, b1.final);
    const Coproduct& w2 = *c2.coproduct(f.obj[x0], b2.final);
    eq.count(2);
    if (c2.compose(lf.l[x], f.arr[w.k1]) != w2.k1)
      eq.fail("lift.l-kappa1", {kl1.obj_name(x)}, c2.arr_name(w2.k1), c2.arr_name(c2.compose(lf.l[x], f.arr[w.k1])));
    ArrId want = c2.compose(w2.k2, c2.hom(f.obj[b1.final], b2.final).front());
    if (c2.compose(lf.l[x], f.arr[w.k2]) != want)
      eq.fail("lift.l-kappa2", {kl1.obj_name(x)}, c2.arr_name(want), c2.arr_name(c2.compose(lf.l[x], f.arr[w.k2])));
  }
  lf.report.add(std::move(eq));

  Report sq("lifting-square");
  for (ObjId x = 0; x < kl1.num_objects(); ++x)
    for (ObjId y = 0; y < kl1.num_objects(); ++y)
      for (ArrId h : c1.hom(k1.obj_under[x], k1.obj_under[y])) {
        sq.count();
        ArrId got = lf.data.arr[k1.lift(h)];
        ArrId want = k2.lift(f.arr[h]);
        if (got != want)
          sq.fail("lift.square", {c1.arr_name(h)}, k2.cat().arr_name(want), k2.cat().arr_name(got));
      }
  lf.report.add(std::move(sq));
  return lf;
}

Report check_lift_composition(const FunctorData& f, const FunctorData& g, const LiftedFunctor& lf,
                              const LiftedFunctor& lg, const LiftedFunctor& lgf, const KleisliModel& k1,
                              const KleisliModel& k2, const EffectusModel& b3) {
  Report r("lift-composition");
  const FinCategory& c3 = *b3.cat;
  for (ObjId x = 0; x < k1.cat().num_objects(); ++x) {
    r.count();
    ObjId fx = k2.obj_back[f.obj[k1.obj_under[x]]];
    ArrId want = c3.compose(lg.l[fx], g.arr[lf.l[x]]);
    if (lgf.l[x] != want)
      r.fail("lift.l-composite", {k1.cat().obj_name(x)}, c3.arr_name(want), c3.arr_name(lgf.l[x]));
  }
  FunctorData comp = compose_functors(lg.data, lf.data);
  for (ArrId a = 0; a < comp.arr.size(); ++a) {
    r.count();
    if (comp.arr[a] != lgf.data.arr[a])
      r.fail("lift.functor-composite", {k1.cat().arr_name(a)}, std::to_string(comp.arr[a]),
             std::to_string(lgf.data.arr[a]));
  }
  return r;
}

TotFunctor tot_functor(const FunctorData& f, const FpeModel& c1, const Subcategory& t1, const FpeModel& c2,
                       const Subcategory& t2, Exec ex) {
  const FinCategory& a = c1.cat();
  const FinCategory& b = c2.cat();
  Report pre = check_functor(f, a, b, {false, true}, ex);
  if (pre.failed()) {
    const Witness* w = pre.first_witness();
    throw PreconditionError("functor is not coproduct preserving",
                            w ? std::vector<std::string>{w->law} : std::vector<std::string>{});
  }
  ObjId fi = f.obj[c1.unit()];
  ArrId one_fi = c2.top(fi);
  bool iso = false;
  for (ArrId inv : b.hom(c2.unit(), fi))
    if (b.compose(inv, one_fi) == b.id(fi) && b.compose(one_fi, inv) == b.id(c2.unit())) iso = true;
  if (!iso) throw PreconditionError("1_{FI} is not an isomorphism", {b.obj_name(fi)});
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    if (b.compose(one_fi, f.arr[c1.top(x)]) != c2.top(f.obj[x]))
      throw PreconditionError("functor does not preserve truth", {a.obj_name(x)});
  }
  TotFunctor tf;
  tf.report = Report("tot-functor");
  Report tot("totality");
  for (ObjId x : t1.inclusion.obj) tf.data.obj.push_back(t2.back_obj[f.obj[x]]);
  for (ArrId g : t1.inclusion.arr) {
    tot.count();
    ArrId img = t2.back[f.arr[g]];
    if (img == kNoArrow) {
      tot.fail("tot.preserves-total", {a.arr_name(g)}, "total image", b.arr_name(f.arr[g]));
      img = 0;
    }
    tf.data.arr.push_back(img);
  }
  bool ok = !tot.failed();
  tf.report.add(std::move(tot));
  if (ok) tf.report.add(check_functor(tf.data, t1.cat, t2.cat, {true, true}, ex));
  return tf;
}

}  // namespace liftcat
