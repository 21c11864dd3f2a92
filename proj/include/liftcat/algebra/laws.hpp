#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "liftcat/error.hpp"
#include "liftcat/report.hpp"

namespace liftcat {

enum class Level { pcm, gea, ea, emonoid };

const char* to_string(Level l);
Level parse_level(const std::string& s);

// Where law instances come from: every tuple over a finite carrier, or n
// seeded draws.
template <class V>
struct Sampling {
  Mode mode;
  std::vector<V> elements;
  std::function<std::array<V, 3>(std::uint64_t)> draw;

  static Sampling exhaustive(std::vector<V> elems) {
    Sampling s;
    s.mode = Mode::exhaustive();
    s.elements = std::move(elems);
    return s;
  }
  static Sampling sampled(std::uint64_t seed, std::uint64_t n,
                          std::function<std::array<V, 3>(std::uint64_t)> draw) {
    Sampling s;
    s.mode = Mode::sampling(seed, n);
    s.draw = std::move(draw);
    return s;
  }

  template <class F1, class F2, class F3>
  void visit(F1&& unary, F2&& binary, F3&& ternary) const {
    if (!mode.sampled) {
      for (const auto& a : elements) unary(a);
      for (const auto& a : elements)
        for (const auto& b : elements) binary(a, b);
      for (const auto& a : elements)
        for (const auto& b : elements)
          for (const auto& c : elements) ternary(a, b, c);
      return;
    }
    for (std::uint64_t i = 0; i < mode.n; ++i) {
      auto t = draw(i);
      unary(t[0]);
      binary(t[0], t[1]);
      ternary(t[0], t[1], t[2]);
    }
  }
};

namespace detail {

template <class A, class V>
std::string show_opt(const A& a, const std::optional<V>& v) {
  return v ? a.show(*v) : std::string("undefined");
}

template <class A>
Report pcm_laws(const A& alg, const Sampling<typename A::value_type>& s) {
  using V = typename A::value_type;
  Report r("pcm", s.mode);
  const V z = alg.zero();
  s.visit(
      [&](const V& a) {
        r.count();
        auto u = alg.sum(a, z);
        if (u != std::optional<V>(a)) r.fail("pcm.unit", {alg.show(a)}, alg.show(a), show_opt(alg, u));
      },
      [&](const V& a, const V& b) {
        r.count();
        auto x = alg.sum(a, b), y = alg.sum(b, a);
        if (x != y)
          r.fail("pcm.comm", {alg.show(a), alg.show(b)}, show_opt(alg, x), show_opt(alg, y));
      },
      [&](const V& a, const V& b, const V& c) {
        r.count();
        auto ab = alg.sum(a, b);
        auto bc = alg.sum(b, c);
        std::optional<V> l = ab ? alg.sum(*ab, c) : std::nullopt;
        std::optional<V> rr = bc ? alg.sum(a, *bc) : std::nullopt;
        if (l != rr)
          r.fail("pcm.assoc", {alg.show(a), alg.show(b), alg.show(c)}, show_opt(alg, l),
                 show_opt(alg, rr));
      });
  return r;
}

template <class A>
Report gea_laws(const A& alg, const Sampling<typename A::value_type>& s) {
  using V = typename A::value_type;
  Report r("gea", s.mode);
  const V z = alg.zero();
  s.visit(
      [&](const V&) {},
      [&](const V& a, const V& b) {
        r.count();
        auto ab = alg.sum(a, b);
        if (ab && *ab == z && !(a == z && b == z))
          r.fail("gea.positive", {alg.show(a), alg.show(b)}, "both zero", alg.show(*ab));
        if (ab) {
          try {
            auto d = alg.ominus(*ab, a);
            if (d != std::optional<V>(b))
              r.fail("gea.ominus", {alg.show(*ab), alg.show(a)}, alg.show(b), show_opt(alg, d));
          } catch (const StructureError& e) {
            auto in = e.witnesses();
            r.fail("gea.ominus", in, "unique difference", e.what());
          }
        }
      },
      [&](const V& a, const V& b, const V& c) {
        r.count();
        if (b == c) return;
        auto ab = alg.sum(a, b), ac = alg.sum(a, c);
        if (ab && ab == ac)
          r.fail("gea.cancel", {alg.show(a), alg.show(b), alg.show(c)}, alg.show(b) + "=" + alg.show(c),
                 alg.show(*ab));
      });
  return r;
}

template <class A>
Report ea_laws(const A& alg, const Sampling<typename A::value_type>& s) {
  using V = typename A::value_type;
  Report r("ea", s.mode);
  if (!alg.has_one()) {
    r.fail("ea.top", {}, "a top element", "none");
    return r;
  }
  const V one = alg.one();
  auto oc = [&](const V& a) -> std::optional<V> {
    try {
      return alg.ocomp(a);
    } catch (const StructureError& e) {
      r.fail("ea.ocomp", {alg.show(a)}, "unique orthocomplement", e.what());
      return std::nullopt;
    }
  };
  s.visit(
      [&](const V& a) {
        r.count();
        if (!alg.le(a, one)) r.fail("ea.top", {alg.show(a)}, "a <= 1", "not below top");
        auto c = oc(a);
        if (c) {
          auto t = alg.sum(a, *c);
          if (t != std::optional<V>(one))
            r.fail("ea.ocomp", {alg.show(a)}, alg.show(one), show_opt(alg, t));
        }
      },
      [&](const V& a, const V& b) {
        r.count();
        if (alg.sum(a, b) == std::optional<V>(one)) {
          auto c = oc(a);
          if (c && !(*c == b)) r.fail("ea.ocomp", {alg.show(a), alg.show(b)}, alg.show(*c), alg.show(b));
        }
        bool ab = alg.le(a, b), ba = alg.le(b, a);
        if (ab && ba && !(a == b))
          r.fail("ea.order", {alg.show(a), alg.show(b)}, "antisymmetry", "a<=b, b<=a, a!=b");
        if (ab) {
          auto ca = oc(a), cb = oc(b);
          if (ca && cb && !alg.le(*cb, *ca))
            r.fail("ea.antitone", {alg.show(a), alg.show(b)}, alg.show(*cb) + "<=" + alg.show(*ca),
                   "not below");
        }
      },
      [&](const V& a, const V& b, const V& c) {
        r.count();
        if (alg.le(a, b) && alg.le(b, c) && !alg.le(a, c))
          r.fail("ea.order", {alg.show(a), alg.show(b), alg.show(c)}, "transitivity", "a not <= c");
      });
  return r;
}

template <class A>
Report emonoid_laws(const A& alg, const Sampling<typename A::value_type>& s) {
  using V = typename A::value_type;
  Report r("emonoid", s.mode);
  const V z = alg.zero();
  const V one = alg.one();
  s.visit(
      [&](const V& a) {
        r.count();
        V l = alg.mul(one, a), rr = alg.mul(a, one);
        if (!(l == a) || !(rr == a))
          r.fail("em.unit", {alg.show(a)}, alg.show(a), alg.show(l) + "," + alg.show(rr));
        V zl = alg.mul(z, a), zr = alg.mul(a, z);
        if (!(zl == z) || !(zr == z))
          r.fail("em.zero", {alg.show(a)}, alg.show(z), alg.show(zl) + "," + alg.show(zr));
      },
      [&](const V&, const V&) {},
      [&](const V& a, const V& b, const V& c) {
        r.count();
        V l = alg.mul(alg.mul(a, b), c), rr = alg.mul(a, alg.mul(b, c));
        if (!(l == rr))
          r.fail("em.assoc", {alg.show(a), alg.show(b), alg.show(c)}, alg.show(l), alg.show(rr));
        auto ab = alg.sum(a, b);
        if (!ab) return;
        auto lhs = alg.mul(*ab, c);
        auto rhs = alg.sum(alg.mul(a, c), alg.mul(b, c));
        if (rhs != std::optional<V>(lhs))
          r.fail("em.bihom.left", {alg.show(a), alg.show(b), alg.show(c)}, alg.show(lhs),
                 show_opt(alg, rhs));
        auto lhs2 = alg.mul(c, *ab);
        auto rhs2 = alg.sum(alg.mul(c, a), alg.mul(c, b));
        if (rhs2 != std::optional<V>(lhs2))
          r.fail("em.bihom.right", {alg.show(a), alg.show(b), alg.show(c)}, alg.show(lhs2),
                 show_opt(alg, rhs2));
      });
  return r;
}

}  // namespace detail

// Runs every level up to `level`; a failing level marks the higher ones as
// skipped.
template <class A>
Report check_laws(const A& alg, Level level, const Sampling<typename A::value_type>& s) {
  Report out(std::string("laws.") + to_string(level), s.mode);
  bool broken = false;
  auto run = [&](Level l, auto&& fn) {
    if (static_cast<int>(l) > static_cast<int>(level)) return;
    if (broken) {
      Report sk(to_string(l), s.mode);
      sk.skip("lower-level-failed");
      sk.not_checkable("lower level failed");
      out.add(std::move(sk));
      return;
    }
    Report r = fn();
    broken = r.failed();
    out.add(std::move(r));
  };
  run(Level::pcm, [&] { return detail::pcm_laws(alg, s); });
  run(Level::gea, [&] { return detail::gea_laws(alg, s); });
  run(Level::ea, [&] { return detail::ea_laws(alg, s); });
  run(Level::emonoid, [&] { return detail::emonoid_laws(alg, s); });
  return out;
}

enum class Side { left, right };

template <class S, class V>
struct ModuleSample {
  S r, s;
  V x, y;
};

// Action laws for a module E over scalars M. For a right action act(r, x)
// means x acted on by r, so act(r, act(s, x)) = act(s*r, x).
template <class MA, class EA, class Act>
Report check_module_laws(
    const MA& m, const EA& e, Act act, Side side, bool subconvex,
    Mode mode, const std::vector<typename MA::value_type>& scalars,
    const std::vector<typename EA::value_type>& vectors,
    std::function<ModuleSample<typename MA::value_type, typename EA::value_type>(std::uint64_t)>
        draw = {}) {
  using S = typename MA::value_type;
  using V = typename EA::value_type;
  Report r("module", mode);
  const S one = m.one(), zs = m.zero();
  const V ze = e.zero();
  auto law = [&](const S& a, const S& b, const V& x, const V& y) {
    r.count();
    auto in = [&] { return std::vector<std::string>{m.show(a), m.show(b), e.show(x), e.show(y)}; };
    if (!(act(one, x) == x)) r.fail("mod.unit", in(), e.show(x), e.show(act(one, x)));
    if (!(act(zs, x) == ze)) r.fail("mod.zero", in(), e.show(ze), e.show(act(zs, x)));
    if (!(act(a, ze) == ze)) r.fail("mod.zero", in(), e.show(ze), e.show(act(a, ze)));
    S ab = side == Side::left ? m.mul(a, b) : m.mul(b, a);
    V lhs = act(a, act(b, x)), rhs = act(ab, x);
    if (!(lhs == rhs)) r.fail("mod.assoc", in(), e.show(rhs), e.show(lhs));
    if (auto sab = m.sum(a, b)) {
      auto want = e.sum(act(a, x), act(b, x));
      V got = act(*sab, x);
      if (want != std::optional<V>(got))
        r.fail("mod.bihom.scalar", in(), detail::show_opt(e, want), e.show(got));
      if (subconvex && !e.sum(act(a, x), act(b, y)))
        r.fail("mod.subconvex", in(), "defined", "undefined");
    }
    if (auto sxy = e.sum(x, y)) {
      auto want = e.sum(act(a, x), act(a, y));
      V got = act(a, *sxy);
      if (want != std::optional<V>(got))
        r.fail("mod.bihom.vector", in(), detail::show_opt(e, want), e.show(got));
    }
  };
  if (!mode.sampled) {
    for (const auto& a : scalars)
      for (const auto& b : scalars)
        for (const auto& x : vectors)
          for (const auto& y : vectors) law(a, b, x, y);
  } else {
    for (std::uint64_t i = 0; i < mode.n; ++i) {
      auto t = draw(i);
      law(t.r, t.s, t.x, t.y);
    }
  }
  return r;
}

}  // namespace liftcat
