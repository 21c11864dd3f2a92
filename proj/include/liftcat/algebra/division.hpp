#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "liftcat/error.hpp"
#include "liftcat/report.hpp"
#include "liftcat/rng.hpp"

namespace liftcat {

// All q among `candidates` with q*t = s; unique or DivisionFailure.
template <class M>
typename M::value_type em_div_search(const M& m, const typename M::value_type& s,
                                     const typename M::value_type& t,
                                     const std::vector<typename M::value_type>& candidates) {
  std::vector<typename M::value_type> found;
  for (const auto& q : candidates) {
    if (m.mul(q, t) == s) found.push_back(q);
  }
  if (found.size() == 1) return found.front();
  std::vector<std::string> w;
  for (const auto& q : found) w.push_back(m.show(q));
  if (found.empty())
    throw DivisionFailure("no quotient " + m.show(s) + "/" + m.show(t), w);
  throw DivisionFailure("quotient " + m.show(s) + "/" + m.show(t) + " not unique (" +
                            std::to_string(found.size()) + " solutions)",
                        w);
}

template <class M>
void check_div_pre(const M& m, const typename M::value_type& s, const typename M::value_type& t) {
  if (t == m.zero()) throw PreconditionError("division by zero scalar");
  if (!m.le(s, t)) throw PreconditionError(m.show(s) + " is not below " + m.show(t));
}

// The unique q with q*t = s. Arithmetic division is re-verified; monoids
// without division are searched over their carrier (or search grid).
template <class M>
typename M::value_type em_div(const M& m, const typename M::value_type& s,
                              const typename M::value_type& t) {
  check_div_pre(m, s, t);
  if constexpr (M::has_division) {
    auto q = m.div(s, t);
    if (!(m.mul(q, t) == s))
      throw StructureError("quotient check failed for " + m.show(s) + "/" + m.show(t));
    return q;
  } else {
    return em_div_search(m, s, t, m.search_space());
  }
}

// Seeded check of the quotient laws. `draw` yields an arbitrary scalar.
template <class M>
Report check_division_laws(const M& m, std::uint64_t seed, std::uint64_t n,
                           std::function<typename M::value_type(std::mt19937_64&)> draw) {
  using V = typename M::value_type;
  Report r("division", Mode::sampling(seed, n));
  const V zero = m.zero(), one = m.one();
  auto nz = [&](std::mt19937_64& g) {
    for (;;) {
      V v = draw(g);
      if (!(v == zero)) return v;
    }
  };
  auto dv = [&](const V& a, const V& b) { return em_div(m, a, b); };
  for (std::uint64_t i = 0; i < n; ++i) {
    auto g = rng_for(seed, i);
    V s = nz(g), t = nz(g);
    V rr = m.mul(draw(g), s);  // r <= s
    V st = m.mul(s, t);
    V u = *m.sum(st, m.mul(m.ocomp(st), draw(g)));  // st <= u
    if (u == zero) u = one;
    auto in = [&] { return std::vector<std::string>{m.show(rr), m.show(s), m.show(t), m.show(u)}; };
    try {
      r.count();
      V lhs = m.mul(dv(rr, s), dv(st, u));
      V rhs = dv(m.mul(rr, t), u);
      if (!(lhs == rhs)) r.fail("div.cancel", in(), m.show(rhs), m.show(lhs));
      if (!(dv(zero, t) == zero)) r.fail("div.zero", in(), m.show(zero), m.show(dv(zero, t)));
      if (!(dv(t, t) == one)) r.fail("div.self", in(), m.show(one), m.show(dv(t, t)));
      V a = m.mul(draw(g), t);
      V b = m.mul(draw(g), *m.ominus(t, a));  // a + b <= t
      V ab = *m.sum(a, b);
      auto want = m.sum(dv(a, t), dv(b, t));
      if (!want || !(*want == dv(ab, t)))
        r.fail("div.sum", {m.show(a), m.show(b), m.show(t)}, m.show(dv(ab, t)),
               want ? m.show(*want) : "undefined");
      V c = draw(g);
      V cs = m.mul(c, a);  // c*a <= a <= t
      if (!(dv(cs, t) == m.mul(c, dv(a, t))))
        r.fail("div.mul", {m.show(c), m.show(a), m.show(t)}, m.show(m.mul(c, dv(a, t))),
               m.show(dv(cs, t)));
      V q = draw(g);
      if (!(dv(m.mul(q, t), t) == q))
        r.fail("div.iso", {m.show(q), m.show(t)}, m.show(q), m.show(dv(m.mul(q, t), t)));
      if (!(m.mul(dv(a, t), t) == a))
        r.fail("div.iso", {m.show(a), m.show(t)}, m.show(a), m.show(m.mul(dv(a, t), t)));
    } catch (const Error& e) {
      r.fail("div.error", in(), "defined", e.what());
    }
  }
  return r;
}

}  // namespace liftcat
