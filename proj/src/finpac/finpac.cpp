#include "liftcat/finpac/finpac.hpp"

#include "liftcat/algebra/laws.hpp"
#include "liftcat/error.hpp"

namespace liftcat {

FinPacStructure::FinPacStructure(CatPtr cat, ZeroFamily zero)
    : cat_(std::move(cat)), zero_(std::move(zero)) {
  hom_.assign(n() * n(), std::nullopt);
  bounds_.assign(n() * n(), {});
  for (const auto& w : cat_->coproducts()) {
    try {
      proj_.emplace_back(partial_projection(*cat_, w, 1, zero_), partial_projection(*cat_, w, 2, zero_));
    } catch (const StructureError&) {
      proj_.emplace_back(kNoArrow, kNoArrow);
    }
  }
}

const PcmTable& FinPacStructure::table(ObjId x, ObjId y) const {
  const auto& t = hom_[x * n() + y];
  if (!t)
    throw StructureError("no hom PCM for " + cat_->obj_name(x) + " -> " + cat_->obj_name(y));
  return *t;
}

void FinPacStructure::set_table(ObjId x, ObjId y, PcmTable t) {
  if (t.size() != cat_->hom(x, y).size()) throw StructureError("hom table has the wrong size");
  hom_[x * n() + y] = std::move(t);
}

std::optional<ArrId> FinPacStructure::sum(ArrId f, ArrId g) const {
  const FinCategory& c = *cat_;
  if (c.dom(f) != c.dom(g) || c.cod(f) != c.cod(g)) throw InputError("sum of arrows in different homs");
  const auto& t = table(c.dom(f), c.cod(f));
  auto s = t.sum(c.local(f), c.local(g));
  if (!s) return std::nullopt;
  return c.hom(c.dom(f), c.cod(f))[*s];
}

std::optional<ArrId> FinPacStructure::sum_all(const std::vector<ArrId>& fs) const {
  if (fs.empty()) throw InputError("empty family");
  ArrId acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) {
    auto s = sum(acc, fs[i]);
    if (!s) return std::nullopt;
    acc = *s;
  }
  return acc;
}

ArrId FinPacStructure::bound(ArrId f, ArrId g) const {
  const FinCategory& c = *cat_;
  const auto& b = bounds_[c.dom(f) * n() + c.cod(f)];
  if (b.empty()) return kNoArrow;
  return b[static_cast<std::size_t>(c.local(f)) * c.hom(c.dom(f), c.cod(f)).size() + c.local(g)];
}

std::pair<ArrId, ArrId> FinPacStructure::projections(const Coproduct& w) const {
  const auto& cs = cat_->coproducts();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].left == w.left && cs[i].right == w.right && cs[i].apex == w.apex && cs[i].k1 == w.k1 &&
        cs[i].k2 == w.k2) {
      if (proj_[i].first == kNoArrow) throw StructureError("partial projections do not exist");
      return proj_[i];
    }
  }
  return {partial_projection(*cat_, w, 1, zero_), partial_projection(*cat_, w, 2, zero_)};
}

std::vector<HomPcm> FinPacStructure::hom_pcms() const {
  std::vector<HomPcm> v;
  for (ObjId x = 0; x < n(); ++x)
    for (ObjId y = 0; y < n(); ++y)
      if (has_table(x, y)) v.push_back({x, y, table(x, y)});
  return v;
}

std::vector<ArrId> find_bounds(const FinCategory& c, const ZeroFamily& z, ArrId f, ArrId g) {
  ObjId y = c.cod(f);
  const Coproduct* w = c.coproduct(y, y);
  if (!w) throw PreconditionError("no chosen coproduct " + c.obj_name(y) + " + " + c.obj_name(y));
  ArrId p1 = partial_projection(c, *w, 1, z), p2 = partial_projection(c, *w, 2, z);
  std::vector<ArrId> out;
  for (ArrId b : c.hom(c.dom(f), w->apex)) {
    if (c.compose(p1, b) == f && c.compose(p2, b) == g) out.push_back(b);
  }
  return out;
}

namespace {

std::vector<std::string> names(const FinCategory& c, std::initializer_list<ArrId> as) {
  std::vector<std::string> v;
  for (ArrId a : as) v.push_back(c.arr_name(a));
  return v;
}

}  // namespace

Derivation try_derive_enrichment(const CatPtr& cp, Exec ex) {
  const FinCategory& c = *cp;
  Derivation d{std::nullopt, Report("derive-enrichment")};
  auto zero = zero_arrows(c);
  if (!zero) {
    d.report.fail("finpac.zero-arrows", {}, "a zero family", "none");
    return d;
  }
  FinPacStructure s(cp, *zero);
  const auto n = c.num_objects();
  Report& jm = d.report.add(Report("projections-jointly-monic"));
  Report& bd = d.report.add(Report("bounds"));
  for (ObjId y = 0; y < n; ++y) {
    const Coproduct* w = c.coproduct(y, y);
    if (!w) {
      jm.skip("missing-coproduct");
      bd.skip("missing-coproduct", n);
      continue;
    }
    auto [p1, p2] = s.projections(*w);
    jm.merge_counts(jointly_monic_report(c, {p1, p2}, "jm", ex));
    ArrId nabla = codiagonal(c, *w);
    for (ObjId x = 0; x < n; ++x) {
      const auto& h = c.hom(x, y);
      std::vector<std::string> nm;
      for (ArrId a : h) nm.push_back(c.arr_name(a));
      PcmTable t(nm, c.local(zero->at(x, y)));
      std::vector<ArrId> bounds(h.size() * h.size(), kNoArrow);
      for (ArrId b : c.hom(x, w->apex)) {
        bd.count();
        ArrId f = c.compose(p1, b), g = c.compose(p2, b);
        auto& slot = bounds[static_cast<std::size_t>(c.local(f)) * h.size() + c.local(g)];
        if (slot != kNoArrow) {
          bd.fail("finpac.bound-unique", names(c, {f, g}), c.arr_name(slot), c.arr_name(b));
          continue;
        }
        slot = b;
        t.set_sum_one_sided(c.local(f), c.local(g), c.local(c.compose(nabla, b)));
      }
      s.set_table(x, y, std::move(t));
      s.set_bounds(x, y, std::move(bounds));
    }
  }
  if (d.report.failed()) return d;
  d.report.add(check_hom_pcms(s));
  d.report.add(check_bihomomorphism(s));
  if (!d.report.failed()) d.pac = std::move(s);
  return d;
}

FinPacStructure derive_enrichment(const CatPtr& c, Exec ex) {
  Derivation d = try_derive_enrichment(c, ex);
  if (!d.pac) {
    std::vector<std::string> w;
    if (const Witness* x = d.report.first_witness()) {
      w.push_back(x->law);
      for (const auto& i : x->inputs) w.push_back(i);
    }
    throw StructureError("enrichment derivation failed", w);
  }
  return std::move(*d.pac);
}

FinPacStructure with_tables(const CatPtr& cp, const std::vector<HomPcm>& homs) {
  auto zero = zero_arrows(*cp);
  if (!zero) throw PreconditionError("category has no zero arrows");
  FinPacStructure s(cp, *zero);
  for (const auto& h : homs) s.set_table(h.x, h.y, h.table);
  return s;
}

Report check_hom_pcms(const FinPacStructure& s) {
  const FinCategory& c = s.cat();
  Report r("hom-pcm");
  for (ObjId x = 0; x < c.num_objects(); ++x)
    for (ObjId y = 0; y < c.num_objects(); ++y) {
      if (!s.has_table(x, y)) {
        r.skip("missing-hom-pcm");
        continue;
      }
      const PcmTable& t = s.table(x, y);
      TableAlgebra a(t);
      Report l = check_laws(a, Level::pcm, Sampling<Elem>::exhaustive(a.elements()));
      r.count(l.checked_total());
      if (l.failed()) {
        const Witness* w = l.first_witness();
        std::vector<std::string> in{c.obj_name(x) + "->" + c.obj_name(y)};
        if (w) in.insert(in.end(), w->inputs.begin(), w->inputs.end());
        r.fail(w ? w->law : "pcm", in, w ? w->expected : "", w ? w->actual : "");
      }
      if (t.zero() != c.local(s.zero(x, y)))
        r.fail("finpac.zero-unit", {c.obj_name(x) + "->" + c.obj_name(y)}, c.arr_name(s.zero(x, y)),
               t.name(t.zero()));
    }
  return r;
}

Report check_bihomomorphism(const FinPacStructure& s) {
  const FinCategory& c = s.cat();
  Report r("bihomomorphism");
  const auto n = c.num_objects();
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      if (!s.has_table(x, y)) continue;
      const PcmTable& t = s.table(x, y);
      const auto& h = c.hom(x, y);
      for (Elem i = 0; i < h.size(); ++i)
        for (Elem j = 0; j < h.size(); ++j) {
          auto sij = t.sum(i, j);
          if (!sij) continue;
          ArrId f = h[i], g = h[j], fg = h[*sij];
          for (ObjId z = 0; z < n; ++z) {
            if (s.has_table(x, z)) {
              for (ArrId k : c.hom(y, z)) {
                r.count();
                auto rhs = s.sum(c.compose(k, f), c.compose(k, g));
                ArrId lhs = c.compose(k, fg);
                if (rhs != std::optional<ArrId>(lhs))
                  r.fail("finpac.bihom.post", names(c, {k, f, g}), c.arr_name(lhs),
                         rhs ? c.arr_name(*rhs) : "undefined");
              }
            } else if (!c.hom(y, z).empty()) {
              r.skip("missing-hom-pcm", c.hom(y, z).size());
            }
            if (s.has_table(z, y)) {
              for (ArrId k : c.hom(z, x)) {
                r.count();
                auto rhs = s.sum(c.compose(f, k), c.compose(g, k));
                ArrId lhs = c.compose(fg, k);
                if (rhs != std::optional<ArrId>(lhs))
                  r.fail("finpac.bihom.pre", names(c, {f, g, k}), c.arr_name(lhs),
                         rhs ? c.arr_name(*rhs) : "undefined");
              }
            } else if (!c.hom(z, x).empty()) {
              r.skip("missing-hom-pcm", c.hom(z, x).size());
            }
          }
        }
    }
  return r;
}

Report check_finpac_axioms(const FinPacStructure& s, Exec ex) {
  const FinCategory& c = s.cat();
  Report r("finpac-axioms");
  r.add(check_hom_pcms(s));
  const auto n = c.num_objects();
  Report cs("compatible-sum");
  Report un("untying");
  for (ObjId y = 0; y < n; ++y) {
    const Coproduct* w = c.coproduct(y, y);
    if (!w) {
      cs.skip("missing-coproduct", n);
      un.skip("missing-coproduct", n);
      continue;
    }
    auto [p1, p2] = s.projections(*w);
    ArrId nabla = codiagonal(c, *w);
    for (ObjId x = 0; x < n; ++x) {
      if (!s.has_table(x, y)) {
        cs.skip("missing-hom-pcm");
        un.skip("missing-hom-pcm");
        continue;
      }
      // per (f, g) count bounds to confirm uniqueness as well
      const auto& h = c.hom(x, y);
      std::vector<ArrId> seen(h.size() * h.size(), kNoArrow);
      for (ArrId b : c.hom(x, w->apex)) {
        cs.count();
        ArrId f = c.compose(p1, b), g = c.compose(p2, b);
        auto& slot = seen[static_cast<std::size_t>(c.local(f)) * h.size() + c.local(g)];
        if (slot != kNoArrow)
          cs.fail("finpac.bound-unique", names(c, {f, g}), c.arr_name(slot), c.arr_name(b));
        slot = b;
        auto sfg = s.sum(f, g);
        if (!sfg) {
          cs.fail("finpac.compatible-sum", names(c, {f, g, b}), "orthogonal", "undefined");
          continue;
        }
        ArrId want = c.compose(nabla, b);
        if (*sfg != want) cs.fail("finpac.sum-codiagonal", names(c, {f, g, b}), c.arr_name(want), c.arr_name(*sfg));
      }
      if (!s.has_table(x, w->apex)) {
        un.skip("missing-hom-pcm");
        continue;
      }
      const PcmTable& t = s.table(x, y);
      for (Elem i = 0; i < h.size(); ++i)
        for (Elem j = 0; j < h.size(); ++j) {
          if (!t.sum(i, j)) continue;
          un.count();
          ArrId a = c.compose(w->k1, h[i]), b = c.compose(w->k2, h[j]);
          if (!s.orthogonal(a, b))
            un.fail("finpac.untying", names(c, {h[i], h[j]}), "orthogonal coprojected pair", "undefined");
        }
    }
  }
  r.add(std::move(cs));
  r.add(std::move(un));
  r.add(check_bihomomorphism(s));
  (void)ex;
  return r;
}

Report check_characterization(const CatPtr& cp, Exec ex) {
  const FinCategory& c = *cp;
  Report out("finpac");
  Report ch("characterization");
  auto zero = zero_arrows(c);
  if (!zero) {
    ch.fail("finpac.zero-arrows", {}, "a zero family", "none");
    out.add(std::move(ch));
    return out;
  }
  const auto n = c.num_objects();
  for (ObjId x = 0; x < n; ++x) {
    const Coproduct* xx = c.coproduct(x, x);
    if (!xx) {
      ch.skip("missing-coproduct");
      continue;
    }
    try {
      ArrId p1 = partial_projection(c, *xx, 1, *zero), p2 = partial_projection(c, *xx, 2, *zero);
      Report jm = jointly_monic_report(c, {p1, p2}, "projections " + c.obj_name(x) + "+" + c.obj_name(x), ex);
      ch.merge_counts(jm);
      const Coproduct* xxx = c.coproduct(xx->apex, x);
      if (!xxx) {
        ch.skip("missing-coproduct");
        continue;
      }
      ArrId nabla = codiagonal(c, *xx);
      Square sq{coproduct_map(c, *xxx, *xx, nabla, c.id(x)), partial_projection(c, *xxx, 1, *zero), p1,
                nabla};
      Report pb = is_pullback(c, sq, ex);
      ch.merge_counts(pb);
    } catch (const PreconditionError& e) {
      ch.fail("finpac.square", {c.obj_name(x)}, "commuting square", e.what());
    } catch (const StructureError& e) {
      ch.fail("finpac.structure", {c.obj_name(x)}, "cotuples exist", e.what());
    }
  }
  Derivation d = try_derive_enrichment(cp, ex);
  Report ax("axioms");
  if (d.pac) {
    ax.add(std::move(d.report));
    ax.add(check_finpac_axioms(*d.pac, ex));
  } else {
    ax.add(std::move(d.report));
  }
  Report ag("agreement");
  ag.count();
  bool cpass = !ch.failed(), apass = !ax.failed();
  if (cpass != apass)
    ag.fail("finpac.agreement", {}, cpass ? "axioms pass" : "axioms fail",
            apass ? "axioms pass" : "axioms fail");
  out.add(std::move(ch));
  out.add(std::move(ax));
  out.add(std::move(ag));
  return out;
}

Report compare_enrichments(const FinPacStructure& a, const FinPacStructure& b) {
  Report r("compare-enrichments");
  const FinCategory& c = a.cat();
  for (ObjId x = 0; x < c.num_objects(); ++x)
    for (ObjId y = 0; y < c.num_objects(); ++y) {
      if (!a.has_table(x, y) || !b.has_table(x, y)) {
        r.skip("missing-hom-pcm");
        continue;
      }
      const PcmTable& ta = a.table(x, y);
      const PcmTable& tb = b.table(x, y);
      for (Elem i = 0; i < ta.size(); ++i)
        for (Elem j = 0; j < ta.size(); ++j) {
          r.count();
          auto sa = ta.sum(i, j), sb = tb.sum(i, j);
          if (sa != sb)
            r.fail("finpac.enrichment-unique", {ta.name(i), ta.name(j)}, sa ? ta.name(*sa) : "undefined",
                   sb ? tb.name(*sb) : "undefined");
        }
    }
  return r;
}

}  // namespace liftcat
