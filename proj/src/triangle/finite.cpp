#include "liftcat/algebra/division.hpp"
#include "liftcat/algebra/laws.hpp"
#include "liftcat/error.hpp"
#include "liftcat/triangle/triangle.hpp"

namespace liftcat {

ScalarMonoid scalars_of(const FpeModel& c) {
  const FinCategory& cc = c.cat();
  const ObjId i = c.unit();
  if (!c.pac().has_table(i, i)) throw PreconditionError("no chosen I + I, Hom(I,I) has no sum table");
  ScalarMonoid s;
  s.unit = i;
  s.table = c.pac().table(i, i);
  const auto& hs = cc.hom(i, i);
  s.table.set_one(cc.local(c.top(i)));
  s.table.enable_mul(s.table.zero());
  for (Elem a = 0; a < hs.size(); ++a)
    for (Elem b = 0; b < hs.size(); ++b) s.table.set_mul(a, b, cc.local(cc.compose(hs[a], hs[b])));
  TableAlgebra alg(s.table);
  s.laws = check_laws(alg, Level::emonoid, Sampling<Elem>::exhaustive(alg.elements()));
  s.laws.count();
  if (c.top(i) != cc.id(i)) s.laws.fail("scalars.unit", {cc.obj_name(i)}, "1_I = id_I", cc.arr_name(c.top(i)));
  if (s.laws.failed()) {
    const Witness* w = s.laws.first_witness();
    throw StructureError("scalars are not an effect monoid", w ? std::vector<std::string>{w->law} : std::vector<std::string>{});
  }
  return s;
}

ArrId born(const FpeModel& c, ArrId omega, ArrId p) { return c.cat().compose(p, omega); }
ArrId alpha(const FpeModel& c, ArrId p, ArrId omega) { return c.cat().compose(p, omega); }
ArrId beta(const FpeModel& c, ArrId omega, ArrId p) { return c.cat().compose(p, omega); }

Normalized normalize(const FpeModel& c, ArrId omega) {
  const FinCategory& cc = c.cat();
  if (c.pac().is_zero(omega)) throw PreconditionError("cannot normalize the zero substate", {cc.arr_name(omega)});
  const ArrId t = c.dp(omega);
  std::vector<std::string> found;
  ArrId state = kNoArrow;
  for (ArrId s : cc.hom(c.unit(), cc.cod(omega))) {
    if (!c.is_total(s) || cc.compose(s, t) != omega) continue;
    found.push_back(cc.arr_name(s));
    state = s;
  }
  if (found.size() != 1)
    throw StructureError("normalization failure for " + cc.arr_name(omega) + ": " + std::to_string(found.size()) +
                             " states",
                         found);
  return {state, t};
}

ArrId division_via_normalization(const FpeModel& c, ArrId s, ArrId t) {
  const FinCategory& cc = c.cat();
  const ObjId i = c.unit();
  const Coproduct* w = cc.coproduct(i, i);
  if (!w) throw PreconditionError("no chosen I + I");
  if (c.pac().is_zero(t)) throw PreconditionError("division by the zero scalar");
  ArrId rest = kNoArrow;
  for (ArrId q : cc.hom(i, i))
    if (c.pac().sum(s, q) == std::optional<ArrId>(t)) rest = q;
  if (rest == kNoArrow) throw PreconditionError(cc.arr_name(s) + " is not below " + cc.arr_name(t));
  NaryCoproduct nw{{i, i}, w->apex, {w->k1, w->k2}, {*w}};
  ArrId omega = recompose_with_dp(c, nw, {s, rest});
  Normalized n = normalize(c, omega);
  return cc.compose(c.pac().projections(*w).first, n.state);
}

namespace {

std::vector<std::string> nm(const FinCategory& c, std::initializer_list<ArrId> as) {
  std::vector<std::string> v;
  for (ArrId a : as) v.push_back(c.arr_name(a));
  return v;
}

}  // namespace

Report check_triangle(const FpeModel& c, Exec) {
  const FinCategory& cc = c.cat();
  const auto& pac = c.pac();
  const ObjId i = c.unit();
  const auto n = cc.num_objects();
  Report r("triangle");
  ScalarMonoid sm;
  try {
    sm = scalars_of(c);
  } catch (const Error& e) {
    Report s("scalars");
    s.fail("scalars.emonoid", {}, "effect monoid", e.what());
    r.add(std::move(s));
    return r;
  }
  Report sl("scalars");
  sl.add(sm.laws);
  r.add(std::move(sl));
  const auto& scal = cc.hom(i, i);
  TableAlgebra malg(sm.table);

  // Pred(X) = Hom(X, I), scalars acting by postcomposition
  Report pred("pred-modules");
  Report sst("sstat-modules");
  for (ObjId x = 0; x < n; ++x) {
    if (!pac.has_table(x, i)) {
      pred.skip("no-table");
    } else {
      const auto& ps = cc.hom(x, i);
      TableAlgebra ealg(pac.table(x, i));
      auto act = [&](Elem s, Elem p) { return cc.local(cc.compose(scal[s], ps[p])); };
      Report m = check_module_laws(malg, ealg, act, Side::left, false, Mode::exhaustive(), malg.elements(),
                                   ealg.elements());
      pred.count(m.checked());
      for (const auto& wt : m.witnesses()) pred.fail(wt.law, {cc.obj_name(x)}, wt.expected, wt.actual);
    }
    if (!pac.has_table(i, x)) {
      sst.skip("no-table");
      continue;
    }
    const auto& ws = cc.hom(i, x);
    TableAlgebra ealg(pac.table(i, x));
    auto act = [&](Elem s, Elem w) { return cc.local(cc.compose(ws[w], scal[s])); };
    Report m = check_module_laws(malg, ealg, act, Side::right, true, Mode::exhaustive(), malg.elements(),
                                 ealg.elements());
    sst.count(m.checked());
    for (const auto& wt : m.witnesses()) sst.fail(wt.law, {cc.obj_name(x)}, wt.expected, wt.actual);
    for (ArrId w : ws)
      for (ArrId s : scal) {
        sst.count();
        ArrId d = c.dp(cc.compose(w, s));
        if (!pac.table(i, i).le(cc.local(d), cc.local(s)))
          sst.fail("sstat.dp-below", nm(cc, {w, s}), "Dp(w.r) <= r", cc.arr_name(d));
      }
  }
  r.add(std::move(pred));
  r.add(std::move(sst));

  Report born_r("born");
  Report nat("naturality");
  Report inj("alpha-injective");
  for (ObjId x = 0; x < n; ++x) {
    const auto& ps = cc.hom(x, i);
    const auto& ws = cc.hom(i, x);
    for (ArrId w : ws) {
      born_r.count(2);
      if (born(c, w, c.top(x)) != c.dp(w))
        born_r.fail("born.top", nm(cc, {w}), cc.arr_name(c.dp(w)), cc.arr_name(born(c, w, c.top(x))));
      ArrId z = c.zero(x, i);
      if (born(c, w, z) != c.zero(i, i))
        born_r.fail("born.zero", nm(cc, {w}), cc.arr_name(c.zero(i, i)), cc.arr_name(born(c, w, z)));
      for (ArrId p : ps) {
        born_r.count();
        if (alpha(c, p, w) != beta(c, w, p))
          born_r.fail("born.transpose", nm(cc, {p, w}), cc.arr_name(beta(c, w, p)), cc.arr_name(alpha(c, p, w)));
        // beta(w) preserves sums and scalars
        if (pac.has_table(x, i))
          for (ArrId q : ps) {
            auto pq = pac.sum(p, q);
            if (!pq) continue;
            auto want = pac.sum(beta(c, w, p), beta(c, w, q));
            if (want != std::optional<ArrId>(beta(c, w, *pq)))
              born_r.fail("born.beta-additive", nm(cc, {w, p, q}), cc.arr_name(beta(c, w, *pq)),
                          want ? cc.arr_name(*want) : "undefined");
          }
        for (ArrId s : scal) {
          if (beta(c, w, cc.compose(s, p)) != cc.compose(s, beta(c, w, p)))
            born_r.fail("born.beta-scalar", nm(cc, {w, p, s}), cc.arr_name(cc.compose(s, beta(c, w, p))),
                        cc.arr_name(beta(c, w, cc.compose(s, p))));
          if (alpha(c, p, cc.compose(w, s)) != cc.compose(alpha(c, p, w), s))
            born_r.fail("born.alpha-scalar", nm(cc, {p, w, s}), cc.arr_name(cc.compose(alpha(c, p, w), s)),
                        cc.arr_name(alpha(c, p, cc.compose(w, s))));
        }
        if (pac.has_table(i, x))
          for (ArrId v : ws) {
            auto wv = pac.sum(w, v);
            if (!wv) continue;
            auto want = pac.sum(alpha(c, p, w), alpha(c, p, v));
            if (want != std::optional<ArrId>(alpha(c, p, *wv)))
              born_r.fail("born.alpha-additive", nm(cc, {p, w, v}), cc.arr_name(alpha(c, p, *wv)),
                          want ? cc.arr_name(*want) : "undefined");
          }
      }
    }
    // alpha_Y(p) . SStat(f) = alpha_X(p . f)
    for (ObjId y = 0; y < n; ++y)
      for (ArrId f : cc.hom(x, y))
        for (ArrId p : cc.hom(y, i))
          for (ArrId w : ws) {
            nat.count();
            ArrId lhs = alpha(c, p, cc.compose(f, w)), rhs = alpha(c, cc.compose(p, f), w);
            if (lhs != rhs) nat.fail("alpha.natural", nm(cc, {f, p, w}), cc.arr_name(rhs), cc.arr_name(lhs));
            ArrId bl = beta(c, cc.compose(f, w), p), br = beta(c, w, cc.compose(p, f));
            if (bl != br) nat.fail("beta.natural", nm(cc, {f, p, w}), cc.arr_name(br), cc.arr_name(bl));
          }
    for (std::size_t a = 0; a < ps.size(); ++a)
      for (std::size_t b = a + 1; b < ps.size(); ++b) {
        inj.count();
        bool differ = false;
        for (ArrId w : ws) differ = differ || alpha(c, ps[a], w) != alpha(c, ps[b], w);
        if (!differ) inj.fail("alpha.injective", nm(cc, {ps[a], ps[b]}), "distinct transposes", "equal on all states");
      }
  }
  r.add(std::move(born_r));
  r.add(std::move(nat));
  r.add(std::move(inj));

  Report norm("normalization");
  for (ObjId x = 0; x < n; ++x) {
    for (ArrId w : cc.hom(i, x)) {
      if (pac.is_zero(w)) continue;
      norm.count();
      try {
        Normalized nn = normalize(c, w);
        if (!c.is_total(nn.state) || cc.compose(nn.state, nn.scalar) != w)
          norm.fail("normalize.factor", nm(cc, {w}), cc.arr_name(w), cc.arr_name(cc.compose(nn.state, nn.scalar)));
      } catch (const StructureError& e) {
        auto in = nm(cc, {w});
        in.insert(in.end(), e.witnesses().begin(), e.witnesses().end());
        norm.fail("normalize.unique", in, "exactly one state", e.what());
      }
    }
    for (ArrId sigma : cc.hom(i, x)) {
      if (!c.is_total(sigma)) continue;
      for (ArrId t : scal) {
        if (pac.is_zero(t)) continue;
        norm.count();
        try {
          Normalized nn = normalize(c, cc.compose(sigma, t));
          if (nn.state != sigma || nn.scalar != t)
            norm.fail("normalize.scale", nm(cc, {sigma, t}), cc.arr_name(sigma) + "," + cc.arr_name(t),
                      cc.arr_name(nn.state) + "," + cc.arr_name(nn.scalar));
        } catch (const Error& e) {
          norm.fail("normalize.scale", nm(cc, {sigma, t}), "normalizable", e.what());
        }
      }
    }
  }
  r.add(std::move(norm));

  Report div("division");
  if (!cc.coproduct(i, i)) {
    div.not_checkable("no chosen I + I");
  } else {
    for (Elem s = 0; s < scal.size(); ++s)
      for (Elem t = 0; t < scal.size(); ++t) {
        if (t == sm.table.zero() || !sm.table.le(s, t)) continue;
        div.count();
        try {
          ArrId got = division_via_normalization(c, scal[s], scal[t]);
          Elem want = em_div_search(malg, s, t, malg.elements());
          if (got != scal[want])
            div.fail("division.agree", nm(cc, {scal[s], scal[t]}), cc.arr_name(scal[want]), cc.arr_name(got));
        } catch (const Error& e) {
          div.fail("division.error", nm(cc, {scal[s], scal[t]}), "quotient", e.what());
        }
      }
  }
  r.add(std::move(div));
  return r;
}

}  // namespace liftcat
