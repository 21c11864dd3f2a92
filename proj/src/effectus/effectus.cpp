#include "liftcat/effectus/effectus.hpp"

#include "liftcat/error.hpp"
#include "liftcat/fincat/universal.hpp"

namespace liftcat {

EffectusModel effectus_model(CatPtr cat) {
  const FinCategory& c = *cat;
  if (auto t = c.final_object()) return {cat, *t};
  if (auto u = c.unit_object()) return {cat, *u};
  for (ObjId x = 0; x < c.num_objects(); ++x)
    if (verify_final(c, x)) return {cat, x};
  throw PreconditionError("no candidate final object");
}

namespace {

ObjId final_candidate(const FinCategory& c, Report& r) {
  if (auto t = c.final_object()) return *t;
  if (auto u = c.unit_object()) {
    r.note("no final annotation; testing the unit object " + c.obj_name(*u));
    return *u;
  }
  for (ObjId x = 0; x < c.num_objects(); ++x)
    if (verify_final(c, x)) {
      r.note("final object found by search: " + c.obj_name(x));
      return x;
    }
  return kNoObj;
}

void merge_pullback(Report& into, const FinCategory& c, const Square& sq, const std::string& law,
                    const std::vector<std::string>& ctx, Exec ex) {
  try {
    Report pb = is_pullback(c, sq, ex);
    into.count(pb.checked());
    for (const auto& w : pb.witnesses()) {
      auto in = ctx;
      in.insert(in.end(), w.inputs.begin(), w.inputs.end());
      into.fail(law + (w.law == "pullback.no-mediator" ? ".no-mediator" : ".many-mediators"), in,
                w.expected, w.actual);
    }
    into.extra_violations(pb.violations() - pb.witnesses().size());
  } catch (const PreconditionError& e) {
    into.fail(law + ".commute", ctx, "commuting square", e.what());
  }
}

}  // namespace

Report check_effectus(const FinCategory& c, Exec ex) {
  Report r("effectus");
  r.add(verify_annotations(c, ex));
  const auto n = c.num_objects();

  Report fin("final");
  ObjId one = final_candidate(c, fin);
  if (one == kNoObj) {
    fin.fail("effectus.final", {}, "a final object", "none");
  } else {
    for (ObjId x = 0; x < n; ++x) {
      fin.count();
      auto k = c.hom(x, one).size();
      if (k != 1)
        fin.fail("effectus.final", {c.obj_name(x), c.obj_name(one)}, "1 arrow",
                 std::to_string(k) + " arrows");
    }
  }
  bool final_ok = !fin.failed();
  r.add(std::move(fin));

  // (E): top id_A + f, left g + id_X, right g + id_Y, bottom id_B + f.
  Report e("squares-E");
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId x = 0; x < n; ++x)
        for (ObjId y = 0; y < n; ++y) {
          const Coproduct *ax = c.coproduct(a, x), *ay = c.coproduct(a, y), *bx = c.coproduct(b, x),
                          *by = c.coproduct(b, y);
          const auto inst = c.hom(x, y).size() * c.hom(a, b).size();
          if (!ax || !ay || !bx || !by) {
            e.skip("missing-coproduct", inst);
            continue;
          }
          for (ArrId f : c.hom(x, y))
            for (ArrId g : c.hom(a, b)) {
              std::vector<std::string> ctx{"f=" + c.arr_name(f), "g=" + c.arr_name(g)};
              try {
                Square sq{coproduct_map(c, *ax, *ay, c.id(a), f), coproduct_map(c, *ax, *bx, g, c.id(x)),
                          coproduct_map(c, *ay, *by, g, c.id(y)), coproduct_map(c, *bx, *by, c.id(b), f)};
                merge_pullback(e, c, sq, "effectus.E", ctx, ex);
              } catch (const StructureError& err) {
                e.fail("effectus.E.cotuple", ctx, "cotuples exist", err.what());
              }
            }
        }
  r.add(std::move(e));

  // (K=): top id_A, left k1 : A -> A + X, right k1 : A -> A + Y, bottom id_A + f.
  Report k("squares-K=");
  for (ObjId a = 0; a < n; ++a)
    for (ObjId x = 0; x < n; ++x)
      for (ObjId y = 0; y < n; ++y) {
        const Coproduct *ax = c.coproduct(a, x), *ay = c.coproduct(a, y);
        if (!ax || !ay) {
          k.skip("missing-coproduct", c.hom(x, y).size());
          continue;
        }
        for (ArrId f : c.hom(x, y)) {
          std::vector<std::string> ctx{"A=" + c.obj_name(a), "f=" + c.arr_name(f)};
          try {
            Square sq{c.id(a), ax->k1, ay->k1, coproduct_map(c, *ax, *ay, c.id(a), f)};
            merge_pullback(k, c, sq, "effectus.K", ctx, ex);
          } catch (const StructureError& err) {
            k.fail("effectus.K.cotuple", ctx, "cotuples exist", err.what());
          }
        }
      }
  r.add(std::move(k));

  Report jm("ternary-joint-monicity");
  if (!final_ok) {
    jm.not_checkable("no final object");
  } else {
    const Coproduct* w2 = c.coproduct(one, one);
    const Coproduct* w3 = w2 ? c.coproduct(w2->apex, one) : nullptr;
    if (!w3) {
      jm.not_checkable("1+1+1 is not a chosen coproduct");
    } else {
      try {
        ArrId a = derive_cotuple(c, *w3, derive_cotuple(c, *w2, w2->k1, w2->k2), w2->k2);
        ArrId b = derive_cotuple(c, *w3, derive_cotuple(c, *w2, w2->k2, w2->k1), w2->k2);
        Report m = jointly_monic_report(c, {a, b}, "jm", ex);
        jm.count(m.checked());
        for (const auto& w : m.witnesses()) jm.fail("effectus.joint-monic", w.inputs, w.expected, w.actual);
      } catch (const StructureError& err) {
        jm.fail("effectus.joint-monic.cotuple", {}, "cotuples exist", err.what());
      }
    }
  }
  r.add(std::move(jm));
  return r;
}

}  // namespace liftcat
