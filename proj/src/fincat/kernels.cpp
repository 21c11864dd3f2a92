#include "liftcat/fincat/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <string>
#include <unordered_map>

#include "liftcat/error.hpp"

namespace liftcat {

namespace {

struct Quad {
  ObjId w, x, y, z;
  std::uint32_t f;
};

}  // namespace

AssocResult find_assoc_violations(const FinCategory& c, Exec ex) {
  const ObjId n = static_cast<ObjId>(c.num_objects());
  std::vector<Quad> tasks;
  for (ObjId w = 0; w < n; ++w)
    for (ObjId x = 0; x < n; ++x) {
      const auto nf = c.hom(w, x).size();
      if (!nf) continue;
      for (ObjId y = 0; y < n; ++y) {
        if (c.hom(x, y).empty()) continue;
        for (ObjId z = 0; z < n; ++z) {
          if (c.hom(y, z).empty()) continue;
          for (std::uint32_t f = 0; f < nf; ++f) tasks.push_back({w, x, y, z, f});
        }
      }
    }
  std::vector<std::uint64_t> counts(tasks.size(), 0), bad(tasks.size(), 0);
  std::vector<std::vector<AssocViolation>> found(tasks.size());
  auto run = [&](std::size_t t) {
    const Quad& q = tasks[t];
    const auto& hxy = c.hom(q.x, q.y);
    const auto& hyz = c.hom(q.y, q.z);
    for (std::uint32_t g = 0; g < hxy.size(); ++g) {
      std::uint32_t gf = c.compose_local(q.w, q.x, q.y, g, q.f);
      for (std::uint32_t h = 0; h < hyz.size(); ++h) {
        std::uint32_t hg = c.compose_local(q.x, q.y, q.z, h, g);
        std::uint32_t lhs = c.compose_local(q.w, q.x, q.z, hg, q.f);
        std::uint32_t rhs = c.compose_local(q.w, q.y, q.z, h, gf);
        ++counts[t];
        if (lhs != rhs) {
          ++bad[t];
          if (found[t].size() < kKernelKeep)
            found[t].push_back({hyz[h], hxy[g], c.hom(q.w, q.x)[q.f]});
        }
      }
    }
  };
  const auto nt = static_cast<std::int64_t>(tasks.size());
  if (ex == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t t = 0; t < nt; ++t) run(static_cast<std::size_t>(t));
  } else {
    for (std::int64_t t = 0; t < nt; ++t) run(static_cast<std::size_t>(t));
  }
  AssocResult r;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    r.triples += counts[t];
    r.violations += bad[t];
    for (const auto& v : found[t]) {
      if (r.first.size() < kKernelKeep) r.first.push_back(v);
    }
  }
  return r;
}

ConeTally tally_pullback_cones(const FinCategory& c, const Square& sq, ObjId z, Exec ex) {
  const ObjId p = c.dom(sq.top), rr = c.cod(sq.top), l = c.cod(sq.left), s = c.cod(sq.right);
  const auto& hzp = c.hom(z, p);
  const auto& hzr = c.hom(z, rr);
  const auto& hzl = c.hom(z, l);
  const auto nzs = c.hom(z, s).size();
  const std::uint32_t top = c.local(sq.top), left = c.local(sq.left);
  const std::uint32_t right = c.local(sq.right), bottom = c.local(sq.bottom);

  // key per mediator candidate, computed in parallel, tallied serially
  std::vector<std::uint64_t> keys(hzp.size());
  const auto np = static_cast<std::int64_t>(hzp.size());
  auto key = [&](std::int64_t m) {
    std::uint32_t u = c.compose_local(z, p, rr, top, static_cast<std::uint32_t>(m));
    std::uint32_t v = c.compose_local(z, p, l, left, static_cast<std::uint32_t>(m));
    keys[m] = static_cast<std::uint64_t>(u) * hzl.size() + v;
  };
  if (ex == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t m = 0; m < np; ++m) key(m);
  } else {
    for (std::int64_t m = 0; m < np; ++m) key(m);
  }
  std::unordered_map<std::uint64_t, std::uint32_t> mult;
  mult.reserve(keys.size() * 2 + 1);
  for (auto k : keys) ++mult[k];

  std::vector<std::vector<std::uint32_t>> bucket(nzs);
  for (std::uint32_t v = 0; v < hzl.size(); ++v)
    bucket[c.compose_local(z, l, s, bottom, v)].push_back(v);

  const auto nu = static_cast<std::int64_t>(hzr.size());
  std::vector<std::uint64_t> cones(hzr.size(), 0), bad(hzr.size(), 0);
  std::vector<std::vector<BadCone>> found(hzr.size());
  auto run = [&](std::int64_t u) {
    std::uint32_t sv = c.compose_local(z, rr, s, right, static_cast<std::uint32_t>(u));
    for (std::uint32_t v : bucket[sv]) {
      ++cones[u];
      auto it = mult.find(static_cast<std::uint64_t>(u) * hzl.size() + v);
      std::uint32_t k = it == mult.end() ? 0 : it->second;
      if (k != 1) {
        ++bad[u];
        if (found[u].size() < kKernelKeep) found[u].push_back({hzr[u], hzl[v], k});
      }
    }
  };
  if (ex == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t u = 0; u < nu; ++u) run(u);
  } else {
    for (std::int64_t u = 0; u < nu; ++u) run(u);
  }
  ConeTally t;
  for (std::size_t u = 0; u < hzr.size(); ++u) {
    t.cones += cones[u];
    t.bad += bad[u];
    for (const auto& b : found[u]) {
      if (t.first.size() < kKernelKeep) t.first.push_back(b);
    }
  }
  return t;
}

std::optional<std::pair<ArrId, ArrId>> find_monic_collision(const FinCategory& c,
                                                            const std::vector<ArrId>& hs,
                                                            ObjId z, Exec ex) {
  if (hs.empty()) throw PreconditionError("joint monicity of an empty family");
  const ObjId a = c.dom(hs.front());
  const auto& hza = c.hom(z, a);
  const std::size_t k = hs.size();
  std::vector<std::uint32_t> keys(hza.size() * k);
  const auto nf = static_cast<std::int64_t>(hza.size());
  auto run = [&](std::int64_t f) {
    for (std::size_t i = 0; i < k; ++i)
      keys[f * k + i] = c.compose_local(z, a, c.cod(hs[i]), c.local(hs[i]), static_cast<std::uint32_t>(f));
  };
  if (ex == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t f = 0; f < nf; ++f) run(f);
  } else {
    for (std::int64_t f = 0; f < nf; ++f) run(f);
  }
  std::unordered_map<std::string, std::uint32_t> seen;
  seen.reserve(hza.size() * 2 + 1);
  for (std::uint32_t f = 0; f < hza.size(); ++f) {
    std::string key(reinterpret_cast<const char*>(keys.data() + f * k), k * sizeof(std::uint32_t));
    auto [it, fresh] = seen.emplace(std::move(key), f);
    if (!fresh) return std::make_pair(hza[it->second], hza[f]);
  }
  return std::nullopt;
}

MediatorTally tally_mediators(const FinCategory& c, const Coproduct& w, ObjId z, Exec ex) {
  const auto& haz = c.hom(w.apex, z);
  const auto n1 = c.hom(w.left, z).size(), n2 = c.hom(w.right, z).size();
  std::vector<std::uint64_t> keys(haz.size());
  const auto nh = static_cast<std::int64_t>(haz.size());
  const std::uint32_t k1 = c.local(w.k1), k2 = c.local(w.k2);
  auto run = [&](std::int64_t h) {
    auto hl = static_cast<std::uint32_t>(h);
    keys[h] = static_cast<std::uint64_t>(c.compose_local(w.left, w.apex, z, hl, k1)) * n2 +
              c.compose_local(w.right, w.apex, z, hl, k2);
  };
  if (ex == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t h = 0; h < nh; ++h) run(h);
  } else {
    for (std::int64_t h = 0; h < nh; ++h) run(h);
  }
  MediatorTally t;
  t.count.assign(n1 * n2, 0);
  t.witness.assign(n1 * n2, kNoArrow);
  for (std::size_t h = 0; h < haz.size(); ++h) {
    if (t.count[keys[h]]++ == 0) t.witness[keys[h]] = haz[h];
  }
  return t;
}

}  // namespace liftcat
