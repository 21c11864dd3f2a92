#include <functional>

#include "liftcat/error.hpp"
#include "liftcat/finpac/finpac.hpp"

namespace liftcat {

std::optional<NaryCoproduct> nary_coproduct(const FinCategory& c, const std::vector<ObjId>& ys) {
  if (ys.size() < 2) throw InputError("n-ary coproduct needs at least two summands");
  NaryCoproduct w;
  w.summands = ys;
  const Coproduct* first = c.coproduct(ys[0], ys[1]);
  if (!first) return std::nullopt;
  w.chain.push_back(*first);
  w.kappa = {first->k1, first->k2};
  ObjId apex = first->apex;
  for (std::size_t i = 2; i < ys.size(); ++i) {
    const Coproduct* next = c.coproduct(apex, ys[i]);
    if (!next) return std::nullopt;
    for (auto& k : w.kappa) k = c.compose(next->k1, k);
    w.kappa.push_back(next->k2);
    w.chain.push_back(*next);
    apex = next->apex;
  }
  w.apex = apex;
  return w;
}

ArrId nary_cotuple(const FinCategory& c, const NaryCoproduct& w, const std::vector<ArrId>& fs) {
  if (fs.size() != w.summands.size()) throw InputError("family size differs from the coproduct");
  ArrId acc = derive_cotuple(c, w.chain[0], fs[0], fs[1]);
  for (std::size_t i = 2; i < fs.size(); ++i) acc = derive_cotuple(c, w.chain[i - 1], acc, fs[i]);
  return acc;
}

std::vector<ArrId> nary_projections(const FinPacStructure& s, const NaryCoproduct& w) {
  const FinCategory& c = s.cat();
  std::vector<ArrId> ps;
  for (std::size_t i = 0; i < w.summands.size(); ++i) {
    std::vector<ArrId> fam;
    for (std::size_t j = 0; j < w.summands.size(); ++j)
      fam.push_back(i == j ? c.id(w.summands[i]) : s.zero(w.summands[j], w.summands[i]));
    ps.push_back(nary_cotuple(c, w, fam));
  }
  return ps;
}

std::vector<ArrId> nary_decompose(const FinPacStructure& s, const NaryCoproduct& w, ArrId f) {
  const FinCategory& c = s.cat();
  if (c.cod(f) != w.apex) throw InputError("arrow does not land in the coproduct");
  auto ps = nary_projections(s, w);
  std::vector<ArrId> fs, parts;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    fs.push_back(c.compose(ps[i], f));
    parts.push_back(c.compose(w.kappa[i], fs.back()));
  }
  if (s.has_table(c.dom(f), w.apex)) {
    auto back = s.sum_all(parts);
    if (back != std::optional<ArrId>(f))
      throw StructureError("decomposition does not re-sum to the arrow", {c.arr_name(f)});
  }
  return fs;
}

namespace {

void for_each_tuple(std::size_t k, std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> ix(n, 0);
  if (k == 0) return;
  for (;;) {
    fn(ix);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++ix[i] < k) break;
      ix[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace

Report check_nary_axioms(const FinPacStructure& s, std::size_t nmax) {
  const FinCategory& c = s.cat();
  Report r("nary-axioms");
  const auto n = c.num_objects();
  for (std::size_t k = 2; k <= nmax; ++k) {
    Report cs("compatible-sum n=" + std::to_string(k));
    Report un("untying n=" + std::to_string(k));
    Report dc("decomposition n=" + std::to_string(k));
    for (ObjId y = 0; y < n; ++y) {
      auto w = nary_coproduct(c, std::vector<ObjId>(k, y));
      if (!w) {
        cs.skip("missing-coproduct");
        un.skip("missing-coproduct");
        continue;
      }
      std::vector<ArrId> ps;
      ArrId nabla;
      try {
        ps = nary_projections(s, *w);
        nabla = nary_cotuple(c, *w, std::vector<ArrId>(k, c.id(y)));
      } catch (const StructureError& e) {
        cs.fail("finpac.nary.cotuple", {c.obj_name(y)}, "cotuples exist", e.what());
        continue;
      }
      for (ObjId x = 0; x < n; ++x) {
        if (!s.has_table(x, y)) {
          cs.skip("missing-hom-pcm");
          un.skip("missing-hom-pcm");
          continue;
        }
        for (ArrId b : c.hom(x, w->apex)) {
          cs.count();
          std::vector<ArrId> fs;
          for (ArrId p : ps) fs.push_back(c.compose(p, b));
          auto sum = s.sum_all(fs);
          ArrId want = c.compose(nabla, b);
          if (sum != std::optional<ArrId>(want)) {
            std::vector<std::string> in;
            for (ArrId f : fs) in.push_back(c.arr_name(f));
            cs.fail("finpac.nary.compatible-sum", in, c.arr_name(want), sum ? c.arr_name(*sum) : "undefined");
          }
        }
        if (!s.has_table(x, w->apex)) {
          un.skip("missing-hom-pcm");
          continue;
        }
        const auto& h = c.hom(x, y);
        for_each_tuple(h.size(), k, [&](const std::vector<std::size_t>& ix) {
          std::vector<ArrId> fs;
          for (auto i : ix) fs.push_back(h[i]);
          if (!s.sum_all(fs)) return;
          un.count();
          std::vector<ArrId> kf;
          for (std::size_t i = 0; i < k; ++i) kf.push_back(c.compose(w->kappa[i], fs[i]));
          if (!s.sum_all(kf)) {
            std::vector<std::string> in;
            for (ArrId f : fs) in.push_back(c.arr_name(f));
            un.fail("finpac.nary.untying", in, "orthogonal", "undefined");
          }
        });
      }
    }
    // decomposition round trip into every chosen k-fold coproduct of any summands
    std::function<void(std::vector<ObjId>&)> rec = [&](std::vector<ObjId>& ys) {
      if (ys.size() == k) {
        auto w = nary_coproduct(c, ys);
        if (!w) return;
        for (ObjId x = 0; x < n; ++x) {
          if (!s.has_table(x, w->apex)) {
            dc.skip("missing-hom-pcm", c.hom(x, w->apex).size());
            continue;
          }
          for (ArrId f : c.hom(x, w->apex)) {
            dc.count();
            try {
              nary_decompose(s, *w, f);
            } catch (const StructureError& e) {
              dc.fail("finpac.nary.decompose", {c.arr_name(f)}, "re-sum equals arrow", e.what());
            }
          }
        }
        return;
      }
      for (ObjId y = 0; y < n; ++y) {
        ys.push_back(y);
        rec(ys);
        ys.pop_back();
      }
    };
    std::vector<ObjId> ys;
    rec(ys);
    r.add(std::move(cs));
    r.add(std::move(un));
    r.add(std::move(dc));
  }
  return r;
}

}  // namespace liftcat
