#include "liftcat/fincat/universal.hpp"

#include "liftcat/error.hpp"

namespace liftcat {

std::string arrow_label(const FinCategory& c, ArrId a) {
  return c.arr_name(a) + ":" + c.obj_name(c.dom(a)) + "->" + c.obj_name(c.cod(a));
}

Report check_category(const FinCategory& c, Exec ex) {
  Report r("category");
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    ArrId i = c.id(x);
    for (ObjId y = 0; y < c.num_objects(); ++y) {
      for (ArrId f : c.hom(x, y)) {
        r.count();
        ArrId a = c.compose(f, i);
        if (a != f) r.fail("cat.id.right", {c.arr_name(f)}, c.arr_name(f), c.arr_name(a));
      }
      for (ArrId g : c.hom(y, x)) {
        r.count();
        ArrId a = c.compose(i, g);
        if (a != g) r.fail("cat.id.left", {c.arr_name(g)}, c.arr_name(g), c.arr_name(a));
      }
    }
  }
  AssocResult a = find_assoc_violations(c, ex);
  r.count(a.triples);
  for (const auto& v : a.first) {
    r.fail("cat.assoc", {c.arr_name(v.h), c.arr_name(v.g), c.arr_name(v.f)},
           c.arr_name(c.compose(v.h, c.compose(v.g, v.f))),
           c.arr_name(c.compose(c.compose(v.h, v.g), v.f)));
  }
  r.extra_violations(a.violations - a.first.size());
  return r;
}

bool verify_final(const FinCategory& c, ObjId t) {
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    if (c.hom(x, t).size() != 1) return false;
  }
  return true;
}

bool verify_initial(const FinCategory& c, ObjId t) {
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    if (c.hom(t, x).size() != 1) return false;
  }
  return true;
}

Report verify_coproduct(const FinCategory& c, const Coproduct& w, Exec ex) {
  Report r("coproduct " + c.obj_name(w.left) + "+" + c.obj_name(w.right) + "=" +
           c.obj_name(w.apex));
  for (ObjId z = 0; z < c.num_objects(); ++z) {
    MediatorTally t = tally_mediators(c, w, z, ex);
    const auto& h1 = c.hom(w.left, z);
    const auto& h2 = c.hom(w.right, z);
    for (std::size_t i = 0; i < h1.size(); ++i)
      for (std::size_t j = 0; j < h2.size(); ++j) {
        r.count();
        auto k = t.count[i * h2.size() + j];
        if (k == 1) continue;
        r.fail(k == 0 ? "coproduct.missing" : "coproduct.ambiguous",
               {c.obj_name(z), c.arr_name(h1[i]), c.arr_name(h2[j])}, "1 mediator",
               std::to_string(k) + " mediators");
      }
  }
  return r;
}

Report verify_annotations(const FinCategory& c, Exec ex) {
  Report r("annotations");
  for (const auto& w : c.coproducts()) r.add(verify_coproduct(c, w, ex));
  if (auto t = c.final_object()) {
    Report f("final");
    f.count();
    if (!verify_final(c, *t)) f.fail("final", {c.obj_name(*t)}, "one arrow from each object", "not final");
    r.add(std::move(f));
  }
  if (auto t = c.initial_object()) {
    Report f("initial");
    f.count();
    if (!verify_initial(c, *t))
      f.fail("initial", {c.obj_name(*t)}, "one arrow to each object", "not initial");
    r.add(std::move(f));
  }
  return r;
}

ArrId derive_cotuple(const FinCategory& c, const Coproduct& w, ArrId f1, ArrId f2) {
  if (c.dom(f1) != w.left || c.dom(f2) != w.right || c.cod(f1) != c.cod(f2))
    throw PreconditionError("cotuple family does not match the coproduct");
  ObjId z = c.cod(f1);
  ArrId found = kNoArrow;
  for (ArrId h : c.hom(w.apex, z)) {
    if (c.compose(h, w.k1) == f1 && c.compose(h, w.k2) == f2) {
      if (found != kNoArrow)
        throw StructureError("cotuple not unique",
                             {c.arr_name(f1), c.arr_name(f2), c.arr_name(found), c.arr_name(h)});
      found = h;
    }
  }
  if (found == kNoArrow)
    throw StructureError("no cotuple", {c.arr_name(f1), c.arr_name(f2)});
  return found;
}

CotupleTable::CotupleTable(const FinCategory& c, const Coproduct& w, ObjId z, Exec ex)
    : c_(&c), w_(w), z_(z), t_(tally_mediators(c, w, z, ex)) {}

std::uint32_t CotupleTable::count(ArrId f1, ArrId f2) const {
  const auto n2 = c_->hom(w_.right, z_).size();
  return t_.count[static_cast<std::size_t>(c_->local(f1)) * n2 + c_->local(f2)];
}

ArrId CotupleTable::at(ArrId f1, ArrId f2) const {
  if (c_->dom(f1) != w_.left || c_->dom(f2) != w_.right || c_->cod(f1) != z_ || c_->cod(f2) != z_)
    throw PreconditionError("cotuple family does not match the table");
  const auto n2 = c_->hom(w_.right, z_).size();
  auto idx = static_cast<std::size_t>(c_->local(f1)) * n2 + c_->local(f2);
  if (t_.count[idx] == 0) throw StructureError("no cotuple", {c_->arr_name(f1), c_->arr_name(f2)});
  if (t_.count[idx] > 1)
    throw StructureError("cotuple not unique", {c_->arr_name(f1), c_->arr_name(f2)});
  return t_.witness[idx];
}

namespace {

// Family generated by c in End(x0), or none if some hom is empty.
std::optional<ZeroFamily> family_from(const FinCategory& c, ObjId x0, ArrId cand) {
  const std::size_t n = c.num_objects();
  ZeroFamily f;
  f.n = n;
  f.z.assign(n * n, kNoArrow);
  for (ObjId x = 0; x < n; ++x) {
    if (c.hom(x, x0).empty() || c.hom(x0, x).empty()) return std::nullopt;
  }
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      f.z[x * n + y] = c.compose({c.hom(x0, y).front(), cand, c.hom(x, x0).front()});
  return f;
}

bool absorbing(const FinCategory& c, const ZeroFamily& f) {
  const std::size_t n = c.num_objects();
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      ArrId z = f.at(x, y);
      for (ObjId w = 0; w < n; ++w) {
        for (ArrId a : c.hom(w, x))
          if (c.compose(z, a) != f.at(w, y)) return false;
        for (ArrId b : c.hom(y, w))
          if (c.compose(b, z) != f.at(x, w)) return false;
      }
    }
  return true;
}

}  // namespace

std::optional<ZeroFamily> zero_arrows(const FinCategory& c) {
  const std::size_t n = c.num_objects();
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      if (c.hom(x, y).empty()) return std::nullopt;
  // Every zero family is generated by its endo-zero at object 0.
  std::optional<ZeroFamily> found;
  for (ArrId cand : c.hom(0, 0)) {
    auto f = family_from(c, 0, cand);
    if (!f || !absorbing(c, *f)) continue;
    if (found && found->z != f->z)
      throw StructureError("two distinct zero families",
                           {c.arr_name(found->at(0, 0)), c.arr_name(f->at(0, 0))});
    found = f;
  }
  return found;
}

ArrId partial_projection(const FinCategory& c, const Coproduct& w, int i, const ZeroFamily& zero) {
  if (i == 1) return derive_cotuple(c, w, c.id(w.left), zero.at(w.right, w.left));
  if (i == 2) return derive_cotuple(c, w, zero.at(w.left, w.right), c.id(w.right));
  throw InputError("partial projection index must be 1 or 2");
}

Report jointly_monic_report(const FinCategory& c, const std::vector<ArrId>& hs,
                            const std::string& suite, Exec ex) {
  Report r(suite);
  for (ArrId h : hs) {
    if (c.dom(h) != c.dom(hs.front())) throw PreconditionError("arrows do not share a domain");
  }
  for (ObjId z = 0; z < c.num_objects(); ++z) {
    r.count(c.hom(z, c.dom(hs.front())).size());
    if (auto p = find_monic_collision(c, hs, z, ex)) {
      std::vector<std::string> in{c.obj_name(z), c.arr_name(p->first), c.arr_name(p->second)};
      r.fail("jointly-monic", in, "distinct images", "equal images");
    }
  }
  return r;
}

bool is_jointly_monic(const FinCategory& c, const std::vector<ArrId>& hs, Exec ex) {
  return jointly_monic_report(c, hs, "jointly-monic", ex).passed();
}

Report is_pullback(const FinCategory& c, const Square& sq, Exec ex) {
  if (c.dom(sq.top) != c.dom(sq.left) || c.cod(sq.top) != c.dom(sq.right) ||
      c.cod(sq.left) != c.dom(sq.bottom) || c.cod(sq.right) != c.cod(sq.bottom))
    throw PreconditionError("square arrows do not line up");
  if (c.compose(sq.right, sq.top) != c.compose(sq.bottom, sq.left))
    throw PreconditionError("square does not commute",
                            {c.arr_name(sq.top), c.arr_name(sq.left), c.arr_name(sq.right),
                             c.arr_name(sq.bottom)});
  Report r("pullback");
  for (ObjId z = 0; z < c.num_objects(); ++z) {
    ConeTally t = tally_pullback_cones(c, sq, z, ex);
    r.count(t.cones);
    for (const auto& b : t.first) {
      r.fail(b.mediators == 0 ? "pullback.no-mediator" : "pullback.many-mediators",
             {c.obj_name(z), c.arr_name(b.u), c.arr_name(b.v)}, "1 mediator",
             std::to_string(b.mediators) + " mediators");
    }
    r.extra_violations(t.bad - t.first.size());
  }
  return r;
}

ArrId coproduct_map(const FinCategory& c, const Coproduct& src, const Coproduct& dst, ArrId f,
                    ArrId g) {
  return derive_cotuple(c, src, c.compose(dst.k1, f), c.compose(dst.k2, g));
}

ArrId codiagonal(const FinCategory& c, const Coproduct& w) {
  if (w.left != w.right) throw PreconditionError("codiagonal needs X + X");
  return derive_cotuple(c, w, c.id(w.left), c.id(w.left));
}

ArrId associator(const FinCategory& c, const Coproduct& ab, const Coproduct& ab_c,
                 const Coproduct& bc, const Coproduct& a_bc) {
  ArrId inner = derive_cotuple(c, ab, a_bc.k1, c.compose(a_bc.k2, bc.k1));
  return derive_cotuple(c, ab_c, inner, c.compose(a_bc.k2, bc.k2));
}

}  // namespace liftcat
