#include "liftcat/effectus/effectus.hpp"
#include "liftcat/error.hpp"
#include "liftcat/fincat/universal.hpp"

namespace liftcat {

RoundTripB roundtrip_b(const EffectusModel& bm, Exec ex) {
  RoundTripB rt;
  rt.kl = kleisli_lift(bm, ex);
  rt.domain = kleisli_domain(rt.kl);
  rt.tot = tot_subcategory(rt.kl.fpe);
  rt.report = Report("roundtrip-B");
  for (ObjId b : rt.domain.inclusion.obj) rt.phi.obj.push_back(rt.tot.back_obj[rt.kl.obj_back[b]]);
  for (ArrId a : rt.domain.inclusion.arr) rt.phi.arr.push_back(rt.tot.back[rt.kl.lift(a)]);
  if (auto dropped = bm.cat->num_objects() - rt.domain.cat.num_objects())
    rt.report.note(std::to_string(dropped) + " objects without a chosen X+1 left out");
  rt.report.add(check_isomorphism(rt.phi, rt.domain.cat, rt.tot.cat, ex));
  return rt;
}

RoundTripC roundtrip_c(const FpeModel& c, Exec ex) {
  RoundTripC rt;
  const FinCategory& cc = c.cat();
  rt.tot = tot_subcategory(c);
  EffectusModel t{std::make_shared<const FinCategory>(rt.tot.cat), rt.tot.back_obj[c.unit()]};
  rt.kl = kleisli_lift(t, ex);
  rt.report = Report("roundtrip-C");

  std::vector<bool> keep(cc.num_objects(), false);
  for (ObjId x : rt.kl.obj_under) keep[rt.tot.inclusion.obj[x]] = true;
  rt.image = subcategory(cc, keep, [](ArrId) { return true; });
  if (auto dropped = cc.num_objects() - rt.image.cat.num_objects())
    rt.report.note(std::to_string(dropped) + " objects without a chosen X+I left out");

  const ObjId unit = c.unit();
  auto c_obj = [&](ObjId kx) { return rt.tot.inclusion.obj[rt.kl.obj_under[kx]]; };
  for (ObjId kx = 0; kx < rt.kl.cat().num_objects(); ++kx) rt.psi.obj.push_back(rt.image.back_obj[c_obj(kx)]);
  std::vector<ArrId> p1(cc.num_objects(), kNoArrow);
  for (ObjId y = 0; y < cc.num_objects(); ++y)
    if (const Coproduct* w = cc.coproduct(y, unit)) p1[y] = c.pac().projections(*w).first;
  for (ArrId a = 0; a < rt.kl.cat().num_arrows(); ++a) {
    ArrId under = rt.tot.inclusion.arr[rt.kl.under[a]];
    ObjId y = c_obj(rt.kl.cat().cod(a));
    rt.psi.arr.push_back(rt.image.back[cc.compose(p1[y], under)]);
  }
  rt.report.add(check_isomorphism(rt.psi, rt.kl.cat(), rt.image.cat, ex));

  // inverse g |-> k1 . g + k2 . Dp(g)^perp
  Report inv("inverse");
  const FinCategory& im = rt.image.cat;
  rt.inverse.assign(im.num_arrows(), kNoArrow);
  for (ArrId ga = 0; ga < im.num_arrows(); ++ga) {
    ArrId g = rt.image.inclusion.arr[ga];
    ObjId y = cc.cod(g);
    inv.count();
    try {
      const Coproduct* w = cc.coproduct(y, unit);
      NaryCoproduct nw{{y, unit}, w->apex, {w->k1, w->k2}, {*w}};
      ArrId h = recompose_with_dp(c, nw, {g, c.pred_complement(c.dp(g))});
      if (!c.is_total(h)) {
        inv.fail("roundtrip.inverse-total", {cc.arr_name(g)}, "total", cc.arr_name(c.dp(h)));
        continue;
      }
      ArrId ka = rt.kl.from_base(rt.tot.back[h], rt.kl.obj_back[rt.tot.back_obj[y]]);
      rt.inverse[ga] = ka;
      if (rt.psi.arr[ka] != ga)
        inv.fail("roundtrip.inverse-section", {cc.arr_name(g)}, im.arr_name(ga), im.arr_name(rt.psi.arr[ka]));
      if (c.is_total(g) && h != cc.compose(w->k1, g))
        inv.fail("roundtrip.inverse-total-case", {cc.arr_name(g)}, cc.arr_name(cc.compose(w->k1, g)),
                 cc.arr_name(h));
    } catch (const Error& e) {
      inv.fail("roundtrip.inverse", {cc.arr_name(g)}, "k1.g + k2.Dp(g)^perp", e.what());
    }
  }
  for (ArrId a = 0; a < rt.kl.cat().num_arrows(); ++a) {
    inv.count();
    ArrId back = rt.inverse[rt.psi.arr[a]];
    if (back != a)
      inv.fail("roundtrip.inverse-retraction", {rt.kl.cat().arr_name(a)}, rt.kl.cat().arr_name(a),
               back == kNoArrow ? "none" : rt.kl.cat().arr_name(back));
  }
  rt.report.add(std::move(inv));
  return rt;
}

Report check_roundtrip_coherence(const RoundTripB& rb, Exec ex) {
  Report r("roundtrip-coherence");
  EffectusModel dom{std::make_shared<const FinCategory>(rb.domain.cat), *rb.domain.cat.final_object()};
  KleisliModel kd;
  RoundTripC rc;
  try {
    kd = kleisli_lift(dom, ex);
    rc = roundtrip_c(rb.kl.fpe, ex);
  } catch (const PreconditionError& e) {
    r.not_checkable(e.what());
    return r;
  }
  if (rc.tot.inclusion.arr != rb.tot.inclusion.arr) {
    r.fail("coherence.tot", {}, "same Tot construction", "different arrow order");
    return r;
  }
  EffectusModel tot{rc.kl.base, rc.kl.base_final};
  LiftedFunctor lphi = lift_functor(rb.phi, dom, kd, tot, rc.kl, ex);
  r.add(lphi.report);
  const FinCategory& kb = rb.kl.cat();
  for (ObjId x = 0; x < kd.cat().num_objects(); ++x) {
    r.count();
    ObjId got = rc.image.inclusion.obj[rc.psi.obj[lphi.data.obj[x]]];
    ObjId want = rb.kl.obj_back[rb.domain.inclusion.obj[kd.obj_under[x]]];
    if (got != want) r.fail("coherence.object", {kd.cat().obj_name(x)}, kb.obj_name(want), kb.obj_name(got));
  }
  for (ArrId a = 0; a < kd.cat().num_arrows(); ++a) {
    r.count();
    ArrId got = rc.image.inclusion.arr[rc.psi.arr[lphi.data.arr[a]]];
    ArrId base = rb.domain.inclusion.arr[kd.under[a]];
    ObjId y = rb.kl.obj_back[rb.domain.inclusion.obj[kd.obj_under[kd.cat().cod(a)]]];
    ArrId want = rb.kl.from_base(base, y);
    if (got != want) r.fail("coherence.arrow", {kd.cat().arr_name(a)}, kb.arr_name(want), kb.arr_name(got));
  }
  return r;
}

}  // namespace liftcat
