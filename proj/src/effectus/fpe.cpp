#include "liftcat/algebra/laws.hpp"
#include "liftcat/effectus/effectus.hpp"
#include "liftcat/error.hpp"
#include "liftcat/fincat/universal.hpp"

namespace liftcat {

FpeModel::FpeModel(FinPacStructure pac, ObjId unit, std::vector<ArrId> tops)
    : pac_(std::move(pac)), unit_(unit), tops_(std::move(tops)) {
  const FinCategory& c = pac_.cat();
  if (unit_ >= c.num_objects()) throw InputError("unit object out of range");
  if (tops_.size() != c.num_objects()) throw InputError("one top per object required");
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    if (tops_[x] == kNoArrow || c.dom(tops_[x]) != x || c.cod(tops_[x]) != unit_)
      throw InputError("top of " + c.obj_name(x) + " is not an arrow into the unit");
  }
}

ArrId FpeModel::dp(ArrId f) const { return cat().compose(top(cat().cod(f)), f); }

ArrId FpeModel::pred_complement(ArrId p) const {
  const FinCategory& c = cat();
  ObjId x = c.dom(p);
  ArrId found = kNoArrow;
  for (ArrId q : c.hom(x, unit_)) {
    if (pac_.sum(p, q) == std::optional<ArrId>(top(x))) {
      if (found != kNoArrow) throw StructureError("orthocomplement not unique", {c.arr_name(p)});
      found = q;
    }
  }
  if (found == kNoArrow) throw StructureError("no orthocomplement", {c.arr_name(p)});
  return found;
}

std::vector<HomPcm> FpeModel::hom_pcms() const {
  auto v = pac_.hom_pcms();
  for (auto& h : v)
    if (h.y == unit_) h.table.set_one(cat().local(top(h.x)));
  return v;
}

ArrId dp(const FpeModel& c, ArrId f) { return c.dp(f); }
bool is_total(const FpeModel& c, ArrId f) { return c.is_total(f); }

FpeModel fpe_from_parsed(const ParsedModel& m, Exec ex) {
  auto cat = std::make_shared<const FinCategory>(m.cat);
  const FinCategory& c = *cat;
  auto unit = c.unit_object();
  if (!unit) throw PreconditionError("no unit object given");
  FinPacStructure pac = m.homs.empty() ? derive_enrichment(cat, ex) : with_tables(cat, m.homs);
  std::vector<ArrId> tops(c.num_objects(), kNoArrow);
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    if (c.tops().size() == c.num_objects() && c.tops()[x] != kNoArrow) {
      tops[x] = c.tops()[x];
      continue;
    }
    if (!pac.has_table(x, *unit))
      throw PreconditionError("no top and no hom PCM for " + c.obj_name(x) + " -> " + c.obj_name(*unit));
    const PcmTable& t = pac.table(x, *unit);
    if (auto o = t.one()) {
      tops[x] = c.hom(x, *unit)[*o];
      continue;
    }
    // greatest element of Hom(X, I)
    std::vector<Elem> greatest;
    for (Elem a = 0; a < t.size(); ++a) {
      bool top = true;
      for (Elem b = 0; b < t.size() && top; ++b) top = t.le(b, a);
      if (top) greatest.push_back(a);
    }
    if (greatest.size() != 1)
      throw PreconditionError("no unique greatest predicate on " + c.obj_name(x));
    tops[x] = c.hom(x, *unit)[greatest.front()];
  }
  return FpeModel(std::move(pac), *unit, std::move(tops));
}

namespace {

std::vector<std::string> nm(const FinCategory& c, std::initializer_list<ArrId> as) {
  std::vector<std::string> v;
  for (ArrId a : as) v.push_back(c.arr_name(a));
  return v;
}

std::vector<std::string> nm(const FinCategory& c, const std::vector<ArrId>& as) {
  std::vector<std::string> v;
  for (ArrId a : as) v.push_back(c.arr_name(a));
  return v;
}

DpDecomposition decompose_with(const FpeModel& m, const std::vector<ArrId>& ps, ArrId f) {
  const FinCategory& c = m.cat();
  DpDecomposition d;
  for (ArrId p : ps) {
    d.parts.push_back(c.compose(p, f));
    d.dps.push_back(m.dp(d.parts.back()));
  }
  auto s = m.pac().sum_all(d.dps);
  if (!s) throw StructureError("domain predicates of the parts are not orthogonal", nm(c, d.parts));
  d.dp_sum = *s;
  d.total = *s == m.top(c.dom(f));
  return d;
}

ArrId recompose_with(const FpeModel& m, const NaryCoproduct& w, const std::vector<ArrId>& ps,
                     const std::vector<ArrId>& parts) {
  const FinCategory& c = m.cat();
  if (parts.size() != w.summands.size()) throw InputError("family size differs from the coproduct");
  std::vector<ArrId> dps;
  for (ArrId f : parts) dps.push_back(m.dp(f));
  if (!m.pac().sum_all(dps))
    throw PreconditionError("domain predicates are not orthogonal", nm(c, parts));
  ObjId x = c.dom(parts.front());
  if (m.pac().has_table(x, w.apex)) {
    std::vector<ArrId> inj;
    for (std::size_t i = 0; i < parts.size(); ++i) inj.push_back(c.compose(w.kappa[i], parts[i]));
    auto s = m.pac().sum_all(inj);
    if (!s) throw StructureError("injected parts are not orthogonal", nm(c, parts));
    return *s;
  }
  // no table on Hom(X, apex): the arrow with the given projections
  ArrId found = kNoArrow;
  for (ArrId h : c.hom(x, w.apex)) {
    bool ok = true;
    for (std::size_t i = 0; i < ps.size() && ok; ++i) ok = c.compose(ps[i], h) == parts[i];
    if (!ok) continue;
    if (found != kNoArrow) throw StructureError("projections do not determine the arrow", nm(c, parts));
    found = h;
  }
  if (found == kNoArrow) throw StructureError("no arrow with the given projections", nm(c, parts));
  return found;
}

constexpr std::size_t kTernaryLimit = 40;

}  // namespace

DpDecomposition decompose_with_dp(const FpeModel& c, const NaryCoproduct& w, ArrId f) {
  if (c.cat().cod(f) != w.apex) throw InputError("arrow does not land in the coproduct");
  return decompose_with(c, nary_projections(c.pac(), w), f);
}

ArrId recompose_with_dp(const FpeModel& c, const NaryCoproduct& w, const std::vector<ArrId>& parts) {
  return recompose_with(c, w, nary_projections(c.pac(), w), parts);
}

Report check_fpe(const FpeModel& m, Exec ex) {
  const FinCategory& c = m.cat();
  const FinPacStructure& s = m.pac();
  const auto n = c.num_objects();
  const ObjId unit = m.unit();
  Report r("fpe");

  Report ea("hom-effect-algebras");
  for (ObjId x = 0; x < n; ++x) {
    if (!s.has_table(x, unit)) {
      ea.fail("fpe.pred-table", {c.obj_name(x)}, "a hom PCM on Hom(X,I)", "none");
      continue;
    }
    PcmTable t = s.table(x, unit);
    t.set_one(c.local(m.top(x)));
    TableAlgebra a(t);
    Report l = check_laws(a, Level::ea, Sampling<Elem>::exhaustive(a.elements()));
    ea.count(l.checked_total());
    if (l.failed()) {
      const Witness* w = l.first_witness();
      std::vector<std::string> in{c.obj_name(x)};
      if (w) in.insert(in.end(), w->inputs.begin(), w->inputs.end());
      ea.fail(w ? w->law : "ea", in, w ? w->expected : "", w ? w->actual : "");
    }
  }
  r.add(std::move(ea));
  if (r.failed()) return r;

  auto zero_pred = [&](ObjId x) { return m.zero(x, unit); };

  Report d8("effect-conditions");
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      const auto& h = c.hom(x, y);
      for (ArrId f : h) {
        d8.count();
        if (m.dp(f) == zero_pred(x) && f != m.zero(x, y))
          d8.fail("fpe.zero-monic", nm(c, {f}), c.arr_name(m.zero(x, y)), c.arr_name(f));
      }
      if (!s.has_table(x, y)) {
        d8.skip("missing-hom-pcm", h.size() * h.size());
        continue;
      }
      for (ArrId f : h)
        for (ArrId g : h) {
          d8.count();
          if (s.orthogonal(m.dp(f), m.dp(g)) && !s.orthogonal(f, g))
            d8.fail("fpe.reflect-perp", nm(c, {f, g}), "orthogonal", "not orthogonal");
        }
    }
  r.add(std::move(d8));

  Report l11("dp-laws");
  {
    Report i1("dp-zero");
    for (ObjId x = 0; x < n; ++x)
      for (ObjId y = 0; y < n; ++y)
        for (ArrId f : c.hom(x, y)) {
          i1.count();
          bool z = f == m.zero(x, y), dz = m.dp(f) == zero_pred(x);
          if (z != dz)
            i1.fail("fpe.dp-zero", nm(c, {f}), z ? "Dp = 0" : "Dp != 0", c.arr_name(m.dp(f)));
        }
    l11.add(std::move(i1));

    Report i2("dp-orthogonal");
    for (ObjId x = 0; x < n; ++x)
      for (ObjId y = 0; y < n; ++y) {
        const auto& h = c.hom(x, y);
        if (!s.has_table(x, y)) {
          i2.skip("missing-hom-pcm", h.size() * h.size());
          continue;
        }
        auto family = [&](const std::vector<ArrId>& fs) {
          i2.count();
          std::vector<ArrId> dps;
          for (ArrId f : fs) dps.push_back(m.dp(f));
          auto sf = s.sum_all(fs);
          auto sd = s.sum_all(dps);
          if (sf.has_value() != sd.has_value()) {
            i2.fail("fpe.dp-orthogonal", nm(c, fs), sf ? "Dp's orthogonal" : "Dp's not orthogonal",
                    sd ? "orthogonal" : "not orthogonal");
            return;
          }
          if (sf && m.dp(*sf) != *sd)
            i2.fail("fpe.dp-sum", nm(c, fs), c.arr_name(*sd), c.arr_name(m.dp(*sf)));
        };
        for (ArrId f : h)
          for (ArrId g : h) family({f, g});
        if (h.size() > kTernaryLimit) {
          i2.skip("ternary-over-limit", h.size() * h.size() * h.size());
          continue;
        }
        for (ArrId f : h)
          for (ArrId g : h)
            for (ArrId k : h) family({f, g, k});
      }
    l11.add(std::move(i2));

    Report i3("dp-composite");
    for (ObjId x = 0; x < n; ++x)
      for (ObjId y = 0; y < n; ++y)
        for (ArrId f : c.hom(x, y)) {
          ArrId df = m.dp(f);
          for (ObjId z = 0; z < n; ++z)
            for (ArrId g : c.hom(y, z)) {
              i3.count();
              ArrId dgf = m.dp(c.compose(g, f));
              ArrId want = c.compose(m.dp(g), f);
              if (dgf != want) i3.fail("fpe.dp-composite", nm(c, {g, f}), c.arr_name(want), c.arr_name(dgf));
              if (!s.table(x, unit).le(c.local(dgf), c.local(df)))
                i3.fail("fpe.dp-below", nm(c, {g, f}), "Dp(g.f) <= Dp(f)", c.arr_name(dgf));
              if (m.is_total(g) && dgf != df)
                i3.fail("fpe.dp-total", nm(c, {g, f}), c.arr_name(df), c.arr_name(dgf));
            }
        }
    l11.add(std::move(i3));

    Report i4("split-mono-total");
    for (ObjId x = 0; x < n; ++x)
      for (ObjId y = 0; y < n; ++y)
        for (ArrId f : c.hom(x, y)) {
          i4.count();
          for (ArrId g : c.hom(y, x)) {
            if (c.compose(g, f) != c.id(x)) continue;
            if (!m.is_total(f)) i4.fail("fpe.split-mono-total", nm(c, {f, g}), "total", c.arr_name(m.dp(f)));
            break;
          }
        }
    l11.add(std::move(i4));

    Report i5("coprojections-total");
    for (const auto& w : c.coproducts()) {
      try {
        auto [p1, p2] = s.projections(w);
        for (auto [k, p, obj] : {std::tuple{w.k1, p1, w.left}, std::tuple{w.k2, p2, w.right}}) {
          i5.count();
          if (c.compose(p, k) != c.id(obj))
            i5.fail("fpe.coprojection-split", nm(c, {k}), c.arr_name(c.id(obj)), c.arr_name(c.compose(p, k)));
          if (!m.is_total(k)) i5.fail("fpe.coprojection-total", nm(c, {k}), "total", c.arr_name(m.dp(k)));
        }
      } catch (const StructureError& e) {
        i5.fail("fpe.coprojection-split", {c.obj_name(w.apex)}, "partial projections", e.what());
      }
    }
    l11.add(std::move(i5));

    Report i6("top-unit-identity");
    i6.count();
    if (m.top(unit) != c.id(unit))
      i6.fail("fpe.top-unit", {c.obj_name(unit)}, c.arr_name(c.id(unit)), c.arr_name(m.top(unit)));
    l11.add(std::move(i6));
  }
  r.add(std::move(l11));

  Report l12("dp-decomposition");
  for (std::size_t k = 2; k <= 3; ++k) {
    std::vector<ObjId> ys(k, 0);
    for (;;) {
      if (auto w = nary_coproduct(c, ys)) {
        std::vector<ArrId> ps;
        try {
          ps = nary_projections(s, *w);
        } catch (const StructureError& e) {
          l12.fail("fpe.decompose.projections", {c.obj_name(w->apex)}, "partial projections", e.what());
          ps.clear();
        }
        if (!ps.empty()) {
          for (ObjId x = 0; x < n; ++x) {
            std::uint64_t arrows = 0;
            for (ArrId f : c.hom(x, w->apex)) {
              l12.count();
              ++arrows;
              try {
                DpDecomposition d = decompose_with(m, ps, f);
                if (m.dp(f) != d.dp_sum)
                  l12.fail("fpe.decompose.dp", nm(c, {f}), c.arr_name(m.dp(f)), c.arr_name(d.dp_sum));
                if (d.total != m.is_total(f))
                  l12.fail("fpe.decompose.total", nm(c, {f}), m.is_total(f) ? "total" : "partial",
                           d.total ? "total" : "partial");
                ArrId back = recompose_with(m, *w, ps, d.parts);
                if (back != f) l12.fail("fpe.decompose.roundtrip", nm(c, {f}), c.arr_name(f), c.arr_name(back));
              } catch (const Error& e) {
                l12.fail("fpe.decompose", nm(c, {f}), "decomposition", e.what());
              }
            }
            // families with orthogonal domain predicates, counted against the arrows
            std::uint64_t families = 0;
            std::vector<std::size_t> ix(k, 0);
            bool empty = false;
            for (std::size_t i = 0; i < k; ++i) empty = empty || c.hom(x, ys[i]).empty();
            while (!empty) {
              std::vector<ArrId> parts, dps;
              for (std::size_t i = 0; i < k; ++i) {
                parts.push_back(c.hom(x, ys[i])[ix[i]]);
                dps.push_back(m.dp(parts.back()));
              }
              if (s.sum_all(dps)) {
                ++families;
                try {
                  ArrId f = recompose_with(m, *w, ps, parts);
                  DpDecomposition d = decompose_with(m, ps, f);
                  if (d.parts != parts)
                    l12.fail("fpe.decompose.inverse", nm(c, parts), "same family", "different family");
                } catch (const Error& e) {
                  l12.fail("fpe.decompose.inverse", nm(c, parts), "an arrow", e.what());
                }
              }
              std::size_t i = k;
              while (i > 0) {
                --i;
                if (++ix[i] < c.hom(x, ys[i]).size()) break;
                ix[i] = 0;
                if (i == 0) empty = true;
              }
            }
            l12.count();
            if (families != arrows)
              l12.fail("fpe.decompose.bijection", {c.obj_name(x), c.obj_name(w->apex)},
                       std::to_string(arrows) + " families", std::to_string(families));
          }
        }
      } else {
        l12.skip("missing-coproduct");
      }
      std::size_t i = k;
      bool done = false;
      while (i > 0) {
        --i;
        if (++ys[i] < n) break;
        ys[i] = 0;
        if (i == 0) done = true;
      }
      if (done) break;
    }
  }
  r.add(std::move(l12));
  (void)ex;
  return r;
}

}  // namespace liftcat
