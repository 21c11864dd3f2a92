#include <set>

#include "liftcat/effectus/effectus.hpp"
#include "liftcat/error.hpp"
#include "liftcat/fincat/universal.hpp"

namespace liftcat {

KleisliCategory kleisli_category(const EffectusModel& bm, Exec ex) {
  const FinCategory& c = *bm.cat;
  const ObjId one = bm.final;
  KleisliCategory k;
  k.obj_back.assign(c.num_objects(), kNoObj);
  std::vector<const Coproduct*> plus1(c.num_objects(), nullptr);
  FinCategory::Builder b;
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    plus1[x] = c.coproduct(x, one);
    if (!plus1[x]) {
      ++k.dropped_objects;
      continue;
    }
    k.obj_back[x] = b.add_object(c.obj_name(x));
    k.obj_under.push_back(x);
  }
  const auto n = k.obj_under.size();
  if (n == 0) throw PreconditionError("no object has a chosen X + 1");
  std::set<std::string> used;
  // first Kl arrow id of hom(X, Y); locals follow B's hom(X, Y+1)
  std::vector<ArrId> start(n * n, 0);
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      start[x * n + y] = static_cast<ArrId>(k.under.size());
      for (ArrId a : c.hom(k.obj_under[x], plus1[k.obj_under[y]]->apex)) {
        std::string name = "kl:" + c.arr_name(a);
        if (!used.insert(name).second) {
          name += "@" + c.obj_name(k.obj_under[y]);
          used.insert(name);
        }
        b.add_arrow(name, x, y);
        k.under.push_back(a);
      }
    }
  auto at = [&](ObjId x, ObjId y, std::uint32_t local) { return start[x * n + y] + local; };
  for (ObjId x = 0; x < n; ++x) b.set_identity(x, at(x, x, c.local(plus1[k.obj_under[x]]->k1)));

  // Kleisli extension [g, k2] : Y + 1 -> Z + 1 of every Kl arrow g : Y -> Z
  std::vector<ArrId> ext(k.under.size(), kNoArrow);
  for (ObjId y = 0; y < n; ++y)
    for (ObjId z = 0; z < n; ++z) {
      const Coproduct& wy = *plus1[k.obj_under[y]];
      const Coproduct& wz = *plus1[k.obj_under[z]];
      CotupleTable t(c, wy, wz.apex, ex);
      for (std::uint32_t i = 0; i < c.hom(k.obj_under[y], wz.apex).size(); ++i) {
        ArrId g = at(y, z, i);
        ext[g] = t.at(k.under[g], wz.k2);
      }
    }
  b.compose_with([&](ArrId g, ArrId f) {
    ArrId h = c.compose(ext[g], k.under[f]);
    return at(b.dom(f), b.cod(g), c.local(h));
  });

  for (const auto& w : c.coproducts()) {
    ObjId l = k.obj_back[w.left], r = k.obj_back[w.right], a = k.obj_back[w.apex];
    if (l == kNoObj || r == kNoObj || a == kNoObj) continue;
    ArrId kk1 = c.local(c.compose(plus1[w.apex]->k1, w.k1));
    ArrId kk2 = c.local(c.compose(plus1[w.apex]->k1, w.k2));
    b.add_coproduct({l, r, a, at(l, a, kk1), at(r, a, kk2)});
  }
  if (auto i = c.initial_object(); i && k.obj_back[*i] != kNoObj) b.set_initial(k.obj_back[*i]);
  if (k.obj_back[one] != kNoObj) {
    ObjId u = k.obj_back[one];
    b.set_unit(u);
    const Coproduct& w11 = *plus1[one];
    for (ObjId x = 0; x < n; ++x) {
      const auto& bang = c.hom(k.obj_under[x], one);
      if (bang.size() != 1) throw PreconditionError("final object is not final", {c.obj_name(one)});
      b.set_top(x, at(x, u, c.local(c.compose(w11.k1, bang.front()))));
    }
  }
  k.cat = std::make_shared<const FinCategory>(b.build());
  return k;
}

KleisliModel kleisli_lift(const EffectusModel& bm, Exec ex) {
  KleisliCategory kc = kleisli_category(bm, ex);
  if (!kc.cat->unit_object()) throw PreconditionError("1 + 1 is not a chosen coproduct");
  Derivation d = try_derive_enrichment(kc.cat, ex);
  if (!d.pac) {
    std::vector<std::string> w;
    if (const Witness* x = d.report.first_witness()) {
      w.push_back(x->law);
      w.insert(w.end(), x->inputs.begin(), x->inputs.end());
    }
    throw StructureError("enrichment of the Kleisli category failed", w);
  }
  KleisliModel k;
  k.fpe = FpeModel(std::move(*d.pac), *kc.cat->unit_object(), kc.cat->tops());
  k.base = bm.cat;
  k.base_final = bm.final;
  k.obj_under = std::move(kc.obj_under);
  k.obj_back = std::move(kc.obj_back);
  k.under = std::move(kc.under);
  k.derivation = std::move(d.report);
  if (kc.dropped_objects)
    k.derivation.note(std::to_string(kc.dropped_objects) + " objects without a chosen X+1 dropped");
  return k;
}

ArrId KleisliModel::from_base(ArrId b, ObjId kl_y) const {
  const FinCategory& c = *base;
  ObjId x = obj_back.at(c.dom(b));
  if (x == kNoObj) throw InputError("domain of " + c.arr_name(b) + " is not in the Kleisli category");
  const Coproduct* w = c.coproduct(obj_under.at(kl_y), base_final);
  if (!w || c.cod(b) != w->apex) throw InputError(c.arr_name(b) + " does not land in Y + 1");
  return cat().hom(x, kl_y)[c.local(b)];
}

ArrId KleisliModel::lift(ArrId f) const {
  const FinCategory& c = *base;
  ObjId y = obj_back.at(c.cod(f));
  if (y == kNoObj) throw InputError("codomain of " + c.arr_name(f) + " is not in the Kleisli category");
  return from_base(c.compose(c.coproduct(c.cod(f), base_final)->k1, f), y);
}

Report check_kleisli_basics(const KleisliModel& k, Exec ex) {
  const FinCategory& b = *k.base;
  const FinCategory& kl = k.cat();
  const auto nb = b.num_objects(), nk = kl.num_objects();
  Report r("kleisli-basics");

  Report mono("kappa-monic");
  for (const auto& w : b.coproducts()) {
    for (ArrId kap : {w.k1, w.k2}) {
      Report m = jointly_monic_report(b, {kap}, "m", ex);
      mono.count(m.checked());
      for (const auto& wt : m.witnesses()) mono.fail("kl.kappa-monic", wt.inputs, wt.expected, wt.actual);
    }
  }
  r.add(std::move(mono));

  // (K): top g : A -> B, left k1, right k1, bottom g + f.
  Report sk("squares-K");
  for (ObjId a = 0; a < nb; ++a)
    for (ObjId bb = 0; bb < nb; ++bb)
      for (ObjId x = 0; x < nb; ++x)
        for (ObjId y = 0; y < nb; ++y) {
          const Coproduct *ax = b.coproduct(a, x), *by = b.coproduct(bb, y);
          if (!ax || !by) {
            sk.skip("missing-coproduct", b.hom(a, bb).size() * b.hom(x, y).size());
            continue;
          }
          for (ArrId g : b.hom(a, bb))
            for (ArrId f : b.hom(x, y)) {
              Square sq{g, ax->k1, by->k1, coproduct_map(b, *ax, *by, g, f)};
              Report pb = is_pullback(b, sq, ex);
              sk.count(pb.checked());
              for (const auto& wt : pb.witnesses()) {
                auto in = wt.inputs;
                in.insert(in.begin(), {"g=" + b.arr_name(g), "f=" + b.arr_name(f)});
                sk.fail("kl.K-pullback", in, wt.expected, wt.actual);
              }
            }
        }
  r.add(std::move(sk));

  Report z("zero-arrows");
  for (ObjId x = 0; x < nk; ++x)
    for (ObjId y = 0; y < nk; ++y) {
      z.count();
      const auto& bang = b.hom(k.obj_under[x], k.base_final);
      ArrId want = k.from_base(b.compose(b.coproduct(k.obj_under[y], k.base_final)->k2, bang.front()), y);
      if (k.fpe.zero(x, y) != want)
        z.fail("kl.zero", {kl.obj_name(x), kl.obj_name(y)}, kl.arr_name(want),
               kl.arr_name(k.fpe.zero(x, y)));
    }
  r.add(std::move(z));

  Report pj("projections-jointly-monic");
  for (ObjId x = 0; x < nk; ++x) {
    const Coproduct* w = kl.coproduct(x, x);
    if (!w) {
      pj.skip("missing-coproduct");
      continue;
    }
    auto [p1, p2] = k.fpe.pac().projections(*w);
    Report m = jointly_monic_report(kl, {p1, p2}, "m", ex);
    pj.count(m.checked());
    for (const auto& wt : m.witnesses()) pj.fail("kl.projections-monic", wt.inputs, wt.expected, wt.actual);
  }
  r.add(std::move(pj));

  // total f : X -> Y; top f^ +^ id, left p1, right p1, bottom f^.
  Report tp("total-pullback");
  for (ObjId x = 0; x < nk; ++x)
    for (ObjId y = 0; y < nk; ++y)
      for (ObjId a = 0; a < nk; ++a) {
        const Coproduct *xa = kl.coproduct(x, a), *ya = kl.coproduct(y, a);
        const auto& fs = b.hom(k.obj_under[x], k.obj_under[y]);
        if (!xa || !ya) {
          tp.skip("missing-coproduct", fs.size());
          continue;
        }
        ArrId px = k.fpe.pac().projections(*xa).first, py = k.fpe.pac().projections(*ya).first;
        for (ArrId f : fs) {
          ArrId lf = k.lift(f);
          Square sq{coproduct_map(kl, *xa, *ya, lf, kl.id(a)), px, py, lf};
          std::vector<std::string> ctx{"f=" + b.arr_name(f), "A=" + kl.obj_name(a)};
          try {
            Report pb = is_pullback(kl, sq, ex);
            tp.count(pb.checked());
            for (const auto& wt : pb.witnesses()) {
              auto in = ctx;
              in.insert(in.end(), wt.inputs.begin(), wt.inputs.end());
              tp.fail("kl.total-pullback", in, wt.expected, wt.actual);
            }
          } catch (const PreconditionError& e) {
            tp.fail("kl.total-pullback.commute", ctx, "commuting square", e.what());
          }
        }
      }
  r.add(std::move(tp));
  return r;
}

Subcategory tot_subcategory(const FpeModel& c) {
  Subcategory s = subcategory(c.cat(), std::vector<bool>(c.cat().num_objects(), true),
                              [&](ArrId a) { return c.is_total(a); });
  s.cat.set_final(s.back_obj[c.unit()]);
  s.cat.set_unit(std::nullopt);
  s.cat.set_tops({});
  return s;
}

Subcategory kleisli_domain(const KleisliModel& k) {
  std::vector<bool> keep(k.base->num_objects(), false);
  for (ObjId x : k.obj_under) keep[x] = true;
  Subcategory s = subcategory(*k.base, keep, [](ArrId) { return true; });
  s.cat.set_final(s.back_obj[k.base_final]);
  return s;
}

}  // namespace liftcat
