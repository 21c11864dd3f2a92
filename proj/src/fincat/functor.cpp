#include "liftcat/fincat/functor.hpp"

#include "liftcat/error.hpp"
#include "liftcat/fincat/universal.hpp"

namespace liftcat {

Report check_functor(const FunctorData& f, const FinCategory& c, const FinCategory& d,
                     FunctorChecks checks, Exec ex) {
  Report r("functor");
  if (f.obj.size() != c.num_objects() || f.arr.size() != c.num_arrows()) {
    r.fail("functor.total", {}, "maps defined on every object and arrow", "size mismatch");
    return r;
  }
  for (ArrId a = 0; a < c.num_arrows(); ++a) {
    r.count();
    ArrId b = f.arr[a];
    if (b >= d.num_arrows() || f.obj[c.dom(a)] >= d.num_objects() || f.obj[c.cod(a)] >= d.num_objects()) {
      r.fail("functor.total", {c.arr_name(a)}, "image in target", "undefined");
      return r;
    }
    if (d.dom(b) != f.obj[c.dom(a)] || d.cod(b) != f.obj[c.cod(a)])
      r.fail("functor.typed", {c.arr_name(a)},
             d.obj_name(f.obj[c.dom(a)]) + "->" + d.obj_name(f.obj[c.cod(a)]),
             d.obj_name(d.dom(b)) + "->" + d.obj_name(d.cod(b)));
  }
  if (r.failed()) return r;
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    r.count();
    if (f.arr[c.id(x)] != d.id(f.obj[x]))
      r.fail("functor.id", {c.obj_name(x)}, d.arr_name(d.id(f.obj[x])), d.arr_name(f.arr[c.id(x)]));
  }
  const auto n = c.num_objects();
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ArrId a : c.hom(x, y))
        for (ObjId z = 0; z < n; ++z)
          for (ArrId b : c.hom(y, z)) {
            r.count();
            ArrId lhs = f.arr[c.compose(b, a)];
            ArrId rhs = d.compose(f.arr[b], f.arr[a]);
            if (lhs != rhs)
              r.fail("functor.comp", {c.arr_name(b), c.arr_name(a)}, d.arr_name(rhs), d.arr_name(lhs));
          }
  if (checks.final) {
    Report p("preserves-final");
    if (auto t = c.final_object()) {
      p.count();
      if (!verify_final(d, f.obj[*t]))
        p.fail("functor.final", {c.obj_name(*t)}, "final image", d.obj_name(f.obj[*t]) + " not final");
    } else {
      p.skip("no-final-object");
    }
    r.add(std::move(p));
  }
  if (checks.coproducts) {
    Report p("preserves-coproducts");
    for (const auto& w : c.coproducts()) {
      Coproduct img{f.obj[w.left], f.obj[w.right], f.obj[w.apex], f.arr[w.k1], f.arr[w.k2]};
      Report v = verify_coproduct(d, img, ex);
      p.count();
      if (v.failed()) {
        const Witness* wt = v.first_witness();
        p.fail("functor.coproduct", {c.obj_name(w.left), c.obj_name(w.right)}, "coproduct image",
               wt ? wt->law : "not a coproduct");
      }
    }
    r.add(std::move(p));
  }
  return r;
}

Report check_isomorphism(const FunctorData& f, const FinCategory& c, const FinCategory& d, Exec ex) {
  Report r("isomorphism");
  r.add(check_functor(f, c, d, {}, ex));
  if (r.failed()) return r;
  Report b("bijective");
  std::vector<int> hit_o(d.num_objects(), 0), hit_a(d.num_arrows(), 0);
  for (ObjId x : f.obj) ++hit_o[x];
  for (ArrId a : f.arr) ++hit_a[a];
  for (ObjId x = 0; x < d.num_objects(); ++x) {
    b.count();
    if (hit_o[x] != 1)
      b.fail("iso.objects", {d.obj_name(x)}, "1 preimage", std::to_string(hit_o[x]) + " preimages");
  }
  for (ArrId a = 0; a < d.num_arrows(); ++a) {
    b.count();
    if (hit_a[a] != 1)
      b.fail("iso.arrows", {d.arr_name(a)}, "1 preimage", std::to_string(hit_a[a]) + " preimages");
  }
  r.add(std::move(b));
  return r;
}

FunctorData identity_functor(const FinCategory& c) {
  FunctorData f;
  for (ObjId x = 0; x < c.num_objects(); ++x) f.obj.push_back(x);
  for (ArrId a = 0; a < c.num_arrows(); ++a) f.arr.push_back(a);
  return f;
}

FunctorData compose_functors(const FunctorData& g, const FunctorData& f) {
  FunctorData h;
  for (ObjId x : f.obj) h.obj.push_back(g.obj.at(x));
  for (ArrId a : f.arr) h.arr.push_back(g.arr.at(a));
  return h;
}

Subcategory subcategory(const FinCategory& c, const std::vector<bool>& keep_obj,
                        const std::function<bool(ArrId)>& keep_arr) {
  FinCategory::Builder b(kDefaultCap);
  Subcategory s;
  s.back_obj.assign(c.num_objects(), static_cast<ObjId>(-1));
  s.back.assign(c.num_arrows(), kNoArrow);
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    if (!keep_obj[x]) continue;
    s.back_obj[x] = b.add_object(c.obj_name(x));
    s.inclusion.obj.push_back(x);
  }
  auto kept_obj = [&](ObjId x) { return keep_obj[x]; };
  for (ArrId a = 0; a < c.num_arrows(); ++a) {
    if (!kept_obj(c.dom(a)) || !kept_obj(c.cod(a)) || !keep_arr(a)) continue;
    s.back[a] = b.add_arrow(c.arr_name(a), s.back_obj[c.dom(a)], s.back_obj[c.cod(a)]);
    s.inclusion.arr.push_back(a);
  }
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    if (!keep_obj[x]) continue;
    if (s.back[c.id(x)] == kNoArrow)
      throw StructureError("subcategory drops the identity of " + c.obj_name(x));
    b.set_identity(s.back_obj[x], s.back[c.id(x)]);
  }
  b.compose_with([&](ArrId g, ArrId f) {
    ArrId h = c.compose(s.inclusion.arr[g], s.inclusion.arr[f]);
    if (s.back[h] == kNoArrow)
      throw StructureError("subcategory not closed under composition",
                           {c.arr_name(s.inclusion.arr[g]), c.arr_name(s.inclusion.arr[f])});
    return s.back[h];
  });
  for (const auto& w : c.coproducts()) {
    if (!kept_obj(w.left) || !kept_obj(w.right) || !kept_obj(w.apex)) continue;
    if (s.back[w.k1] == kNoArrow || s.back[w.k2] == kNoArrow) continue;
    b.add_coproduct({s.back_obj[w.left], s.back_obj[w.right], s.back_obj[w.apex], s.back[w.k1],
                     s.back[w.k2]});
  }
  if (auto t = c.final_object(); t && kept_obj(*t)) b.set_final(s.back_obj[*t]);
  if (auto t = c.initial_object(); t && kept_obj(*t)) b.set_initial(s.back_obj[*t]);
  if (auto u = c.unit_object(); u && kept_obj(*u)) {
    b.set_unit(s.back_obj[*u]);
    if (c.tops().size() == c.num_objects()) {
      for (ObjId x = 0; x < c.num_objects(); ++x) {
        ArrId t = c.tops()[x];
        if (kept_obj(x) && t != kNoArrow && s.back[t] != kNoArrow) b.set_top(s.back_obj[x], s.back[t]);
      }
    }
  }
  s.cat = b.build();
  return s;
}

}  // namespace liftcat
