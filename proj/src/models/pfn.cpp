#include <algorithm>

#include "liftcat/error.hpp"
#include "liftcat/fincat/universal.hpp"
#include "liftcat/models/sets.hpp"
#include "liftcat/models/substochastic.hpp"

namespace liftcat {

FpeModel pfn_fpe(const FunctionModel& pfn, Exec ex) {
  if (!pfn.partial) throw PreconditionError("not a model of partial functions");
  const FinCategory& c = *pfn.cat;
  if (!c.unit_object()) throw PreconditionError("no singleton among the sets");
  return FpeModel(derive_enrichment(pfn.cat, ex), *c.unit_object(), c.tops());
}

Report check_pfn_sum_oracle(const FunctionModel& pfn, const FinPacStructure& s) {
  Report r("pfn-sum-oracle");
  const FinCategory& c = *pfn.cat;
  for (ObjId x = 0; x < c.num_objects(); ++x)
    for (ObjId y = 0; y < c.num_objects(); ++y) {
      const auto& hs = c.hom(x, y);
      if (!s.has_table(x, y)) {
        r.skip("no-table", hs.size() * hs.size());
        continue;
      }
      for (ArrId f : hs)
        for (ArrId g : hs) {
          r.count();
          const auto& fv = pfn.fn[f];
          const auto& gv = pfn.fn[g];
          std::optional<ArrId> want;
          bool disjoint = true;
          std::vector<std::uint32_t> u(fv.size());
          for (std::size_t i = 0; i < fv.size(); ++i) {
            if (fv[i] != kUndefined && gv[i] != kUndefined) disjoint = false;
            u[i] = fv[i] != kUndefined ? fv[i] : gv[i];
          }
          if (disjoint) want = pfn.find(x, y, u);
          auto got = s.sum(f, g);
          if (got != want)
            r.fail("pfn.sum", {c.arr_name(f), c.arr_name(g)}, want ? c.arr_name(*want) : "undefined",
                   got ? c.arr_name(*got) : "undefined");
        }
    }
  return r;
}

FunctorData kleisli_to_pfn(const KleisliModel& kl, const FunctionModel& finset, const FunctionModel& pfn) {
  const FinCategory& b = *finset.cat;
  if (kl.base.get() != finset.cat.get()) throw InputError("Kleisli model is not over this FinSet model");
  FunctorData f;
  const FinCategory& k = kl.cat();
  for (ObjId x = 0; x < k.num_objects(); ++x) f.obj.push_back(pfn.object_of_size(finset.sizes[kl.obj_under[x]]));
  for (ArrId a = 0; a < k.num_arrows(); ++a) {
    ObjId y = kl.obj_under[k.cod(a)];
    const Coproduct& w = *b.coproduct(y, kl.base_final);
    const auto& k1 = finset.fn[w.k1];
    const std::uint32_t star = finset.fn[w.k2].at(0);
    std::vector<std::uint32_t> v;
    for (auto val : finset.fn[kl.under[a]]) {
      if (val == star) {
        v.push_back(kUndefined);
        continue;
      }
      auto it = std::find(k1.begin(), k1.end(), val);
      if (it == k1.end()) throw StructureError("value outside both summands of Y + 1");
      v.push_back(static_cast<std::uint32_t>(it - k1.begin()));
    }
    f.arr.push_back(pfn.find(f.obj[k.dom(a)], f.obj[k.cod(a)], v));
  }
  return f;
}

Report check_kleisli_pfn_iso(const KleisliModel& kl, const FunctionModel& finset, const FunctionModel& pfn,
                             const FpeModel& pfn_model, Exec ex) {
  Report r("kleisli-pfn-iso");
  FunctorData f = kleisli_to_pfn(kl, finset, pfn);
  const FinCategory& k = kl.cat();
  const FinCategory& p = *pfn.cat;
  // only the Pfn objects that Kl reaches
  std::vector<bool> keep(p.num_objects(), false);
  for (ObjId y : f.obj) keep[y] = true;
  Subcategory sub = subcategory(p, keep, [](ArrId) { return true; });
  FunctorData g;
  for (ObjId x : f.obj) g.obj.push_back(sub.back_obj[x]);
  for (ArrId a : f.arr) g.arr.push_back(sub.back[a]);
  if (auto d = p.num_objects() - sub.cat.num_objects()) r.note(std::to_string(d) + " Pfn objects not in Kl");
  r.add(check_isomorphism(g, k, sub.cat, ex));

  Report pcm("hom-pcms");
  const auto& kp = kl.fpe.pac();
  for (ObjId x = 0; x < k.num_objects(); ++x)
    for (ObjId y = 0; y < k.num_objects(); ++y) {
      const auto& hs = k.hom(x, y);
      if (!kp.has_table(x, y) || !pfn_model.pac().has_table(f.obj[x], f.obj[y])) {
        pcm.skip("no-table", hs.size() * hs.size());
        continue;
      }
      for (ArrId a : hs)
        for (ArrId b : hs) {
          pcm.count();
          auto s = kp.sum(a, b);
          auto t = pfn_model.pac().sum(f.arr[a], f.arr[b]);
          std::optional<ArrId> ms;
          if (s) ms = f.arr[*s];
          if (ms != t)
            pcm.fail("iso.sum", {k.arr_name(a), k.arr_name(b)}, t ? p.arr_name(*t) : "undefined",
                     ms ? p.arr_name(*ms) : "undefined");
        }
    }
  for (ObjId x = 0; x < k.num_objects(); ++x) {
    pcm.count();
    if (f.arr[kl.fpe.top(x)] != pfn_model.top(f.obj[x]))
      pcm.fail("iso.top", {k.obj_name(x)}, p.arr_name(pfn_model.top(f.obj[x])), p.arr_name(f.arr[kl.fpe.top(x)]));
  }
  pcm.count();
  if (f.obj[kl.fpe.unit()] != pfn_model.unit())
    pcm.fail("iso.unit", {}, p.obj_name(pfn_model.unit()), p.obj_name(f.obj[kl.fpe.unit()]));
  r.add(std::move(pcm));
  return r;
}

FunctorData reversal_functor(const FunctionModel& m) {
  const FinCategory& c = *m.cat;
  FunctorData f;
  for (ObjId x = 0; x < c.num_objects(); ++x) f.obj.push_back(x);
  for (ArrId a = 0; a < c.num_arrows(); ++a) {
    const auto& v = m.fn[a];
    const std::uint32_t ny = m.sizes[c.cod(a)];
    std::vector<std::uint32_t> h(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      auto val = v[v.size() - 1 - i];
      h[i] = val == kUndefined ? kUndefined : ny - 1 - val;
    }
    f.arr.push_back(m.find(c.dom(a), c.cod(a), h));
  }
  return f;
}

namespace {

template <class M>
SsArrow<M> as_matrix(const M& m, const FunctionModel& fm, ArrId a) {
  const FinCategory& c = *fm.cat;
  auto f = ss_zero(m, fm.sizes[c.cod(a)], fm.sizes[c.dom(a)]);
  const auto& v = fm.fn[a];
  for (std::size_t x = 0; x < v.size(); ++x)
    if (v[x] != kUndefined) f.at(v[x], x) = m.one();
  return f;
}

template <class M>
Report matrix_iso(const M& m, const FunctionModel& fm, const FpeModel* fpe, const std::string& suite) {
  Report r(suite);
  const FinCategory& c = *fm.cat;
  const auto n = c.num_objects();
  std::vector<SsArrow<M>> mat;
  for (ArrId a = 0; a < c.num_arrows(); ++a) mat.push_back(as_matrix(m, fm, a));
  Report bij("bijection");
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      auto all = ss_enumerate_boolean(m, fm.sizes[y], fm.sizes[x], fm.partial);
      bij.count();
      if (all.size() != c.hom(x, y).size())
        bij.fail("matrix.count", {c.obj_name(x), c.obj_name(y)}, std::to_string(all.size()),
                 std::to_string(c.hom(x, y).size()));
      for (const auto& f : all) {
        bij.count();
        std::size_t hits = 0;
        for (ArrId a : c.hom(x, y)) hits += mat[a] == f;
        if (hits != 1) bij.fail("matrix.preimage", {ss_show(m, f)}, "1", std::to_string(hits));
      }
    }
  r.add(std::move(bij));
  Report fun("functor");
  for (ObjId x = 0; x < n; ++x) {
    fun.count();
    if (!(mat[c.id(x)] == ss_identity(m, fm.sizes[x])))
      fun.fail("matrix.identity", {c.obj_name(x)}, "identity", ss_show(m, mat[c.id(x)]));
  }
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ObjId z = 0; z < n; ++z)
        for (ArrId f : c.hom(x, y))
          for (ArrId g : c.hom(y, z)) {
            fun.count();
            auto want = ss_compose(m, mat[g], mat[f]);
            ArrId h = c.compose(g, f);
            if (!(mat[h] == want))
              fun.fail("matrix.compose", {c.arr_name(g), c.arr_name(f)}, ss_show(m, want), ss_show(m, mat[h]));
          }
  r.add(std::move(fun));
  if (fpe) {
    Report sums("sums");
    for (ObjId x = 0; x < n; ++x)
      for (ObjId y = 0; y < n; ++y) {
        if (!fpe->pac().has_table(x, y)) {
          sums.skip("no-table", c.hom(x, y).size() * c.hom(x, y).size());
          continue;
        }
        for (ArrId f : c.hom(x, y))
          for (ArrId g : c.hom(x, y)) {
            sums.count();
            auto s = fpe->pac().sum(f, g);
            auto t = ss_sum(m, mat[f], mat[g]);
            std::optional<SsArrow<M>> sm;
            if (s) sm = mat[*s];
            if (sm != t)
              sums.fail("matrix.sum", {c.arr_name(f), c.arr_name(g)}, t ? ss_show(m, *t) : "undefined",
                        s ? c.arr_name(*s) : "undefined");
          }
      }
    r.add(std::move(sums));
  }
  return r;
}

}  // namespace

Report check_boolean_matrix_iso(const FunctionModel& pfn, const FpeModel& pfn_model) {
  if (!pfn.partial) throw PreconditionError("not a model of partial functions");
  return matrix_iso(BooleanMonoid{}, pfn, &pfn_model, "boolean-matrix-iso");
}

Report check_deterministic_embedding(const FunctionModel& finset) {
  if (finset.partial) throw PreconditionError("not a model of total functions");
  return matrix_iso(RationalMonoid{}, finset, nullptr, "deterministic-embedding");
}

}  // namespace liftcat
