#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "liftcat/algebra/division.hpp"
#include "liftcat/error.hpp"
#include "liftcat/models/substochastic.hpp"
#include "liftcat/report.hpp"

namespace liftcat {

// The bottom point of X_*; always paired with weight 0.
struct Bottom {
  bool operator==(const Bottom&) const = default;
};

template <class X, class V>
struct Lifted {
  std::variant<Bottom, X> point;
  V r;
  bool is_bottom() const { return std::holds_alternative<Bottom>(point); }
  const X& x() const { return std::get<X>(point); }
  bool operator==(const Lifted&) const = default;
};

template <class E, class V>
struct Weighted {
  E elem;
  V weight;
};
template <class E, class V>
using FormalSum = std::vector<Weighted<E, V>>;

template <class M, class E>
void require_convex_weights(const M& m, const FormalSum<E, typename M::value_type>& s) {
  std::optional<typename M::value_type> t = m.zero();
  for (const auto& w : s) {
    if (!t) break;
    t = m.sum(*t, w.weight);
  }
  if (!t || !(*t == m.one())) throw PreconditionError("weights do not total 1");
}

// M as a convex set.
template <class M>
struct ScalarConvex {
  using elem = typename M::value_type;
  elem eval(const M& m, const FormalSum<elem, elem>& s) const {
    require_convex_weights(m, s);
    elem acc = m.zero();
    for (const auto& w : s) {
      auto n = m.sum(acc, m.mul(w.weight, w.elem));
      if (!n) throw StructureError("convex sum of scalars undefined");
      acc = *n;
    }
    return acc;
  }
  bool valid(const M&, const elem&) const { return true; }
  std::string show(const M& m, const elem& e) const { return m.show(e); }
};

// The one-point convex set.
template <class M>
struct PointConvex {
  using elem = std::monostate;
  elem eval(const M& m, const FormalSum<elem, typename M::value_type>& s) const {
    require_convex_weights(m, s);
    return {};
  }
  bool valid(const M&, const elem&) const { return true; }
  std::string show(const M&, const elem&) const { return "*"; }
};

// D_M(S) for S = {0..n-1}.
template <class M>
struct FreeConvex {
  using V = typename M::value_type;
  using elem = std::vector<V>;
  std::size_t n = 0;

  elem delta(const M& m, std::size_t i) const {
    elem e(n, m.zero());
    e.at(i) = m.one();
    return e;
  }
  elem eval(const M& m, const FormalSum<elem, V>& s) const {
    require_convex_weights(m, s);
    elem out(n, m.zero());
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& w : s) {
        auto v = m.sum(out[j], m.mul(w.weight, w.elem.at(j)));
        if (!v) throw StructureError("convex sum undefined");
        out[j] = *v;
      }
    return out;
  }
  bool valid(const M& m, const elem& e) const {
    if (e.size() != n) return false;
    std::optional<V> t = m.zero();
    for (const auto& v : e)
      if (t) t = m.sum(*t, v);
    return t && *t == m.one();
  }
  std::string show(const M& m, const elem& e) const {
    std::string s;
    for (std::size_t j = 0; j < n; ++j) {
      if (e[j] == m.zero()) continue;
      if (!s.empty()) s += " + ";
      s += m.show(e[j]) + "|" + std::to_string(j) + ">";
    }
    return s.empty() ? "0" : s;
  }
};

template <class E, class V>
struct LiftTrace {
  E value;
  V t;
  std::optional<V> inner_total;  // none when t = 0
};

template <class M, class Base>
struct LiftedConvex;

// sum_i |(x_i, r_i)> s_i = (sum_i x_i (r_i s_i / t), t) with t = sum_i r_i s_i,
// or (*, 0) when t = 0.
template <class M, class Base>
LiftTrace<typename LiftedConvex<M, Base>::elem, typename M::value_type> conv_lift_sum(
    const M& m, const LiftedConvex<M, Base>& lx,
    const FormalSum<typename LiftedConvex<M, Base>::elem, typename M::value_type>& s) {
  using V = typename M::value_type;
  using E = typename LiftedConvex<M, Base>::elem;
  if constexpr (!M::has_division) {
    throw StructureError("division unavailable");
  } else {
    require_convex_weights(m, s);
    V t = m.zero();
    for (const auto& w : s) {
      if (w.elem.is_bottom() && !(w.elem.r == m.zero())) throw PreconditionError("bottom with nonzero weight");
      auto n = m.sum(t, m.mul(w.elem.r, w.weight));
      if (!n) throw StructureError("lifted total undefined");
      t = *n;
    }
    if (t == m.zero()) return {E{Bottom{}, m.zero()}, t, std::nullopt};
    FormalSum<typename Base::elem, V> inner;
    V total = m.zero();
    for (const auto& w : s) {
      if (w.elem.is_bottom()) continue;
      V q = em_div(m, m.mul(w.elem.r, w.weight), t);
      auto n = m.sum(total, q);
      if (!n) throw StructureError("inner weights overflow");
      total = *n;
      inner.push_back({w.elem.x(), q});
    }
    if (!(total == m.one())) throw StructureError("inner weights total " + m.show(total) + ", not 1");
    return {E{lx.base.eval(m, inner), t}, t, total};
  }
}

// X_* = {(x, r) : x = * iff r = 0}.
template <class M, class Base>
struct LiftedConvex {
  using V = typename M::value_type;
  using elem = Lifted<typename Base::elem, V>;
  Base base;

  elem bottom(const M& m) const { return {Bottom{}, m.zero()}; }
  elem eval(const M& m, const FormalSum<elem, V>& s) const { return conv_lift_sum(m, *this, s).value; }
  bool valid(const M& m, const elem& e) const {
    if (e.is_bottom()) return e.r == m.zero();
    return !(e.r == m.zero()) && base.valid(m, e.x());
  }
  std::string show(const M& m, const elem& e) const {
    return e.is_bottom() ? "(*, 0)" : "(" + base.show(m, e.x()) + ", " + m.show(e.r) + ")";
  }
};

// X + Y = {((x, r), (y, s)) in X_* x Y_* : r + s = 1}.
template <class M, class A, class B>
struct CoproductConvex {
  using V = typename M::value_type;
  using LA = LiftedConvex<M, A>;
  using LB = LiftedConvex<M, B>;
  using elem = std::pair<typename LA::elem, typename LB::elem>;
  LA la;
  LB lb;

  CoproductConvex(A a, B b) : la{std::move(a)}, lb{std::move(b)} {}

  elem kappa1(const M& m, const typename A::elem& x) const { return {{x, m.one()}, lb.bottom(m)}; }
  elem kappa2(const M& m, const typename B::elem& y) const { return {la.bottom(m), {y, m.one()}}; }
  elem eval(const M& m, const FormalSum<elem, V>& s) const {
    FormalSum<typename LA::elem, V> l;
    FormalSum<typename LB::elem, V> r;
    for (const auto& w : s) {
      l.push_back({w.elem.first, w.weight});
      r.push_back({w.elem.second, w.weight});
    }
    return {la.eval(m, l), lb.eval(m, r)};
  }
  bool valid(const M& m, const elem& e) const {
    return la.valid(m, e.first) && lb.valid(m, e.second) &&
           m.sum(e.first.r, e.second.r) == std::optional<V>(m.one());
  }
  std::string show(const M& m, const elem& e) const {
    return "(" + la.show(m, e.first) + ", " + lb.show(m, e.second) + ")";
  }
};

// [f, g]((x, r), (y, s)) = f(x) r + g(y) s
template <class M, class A, class B, class Z, class F, class G>
typename Z::elem conv_cotuple(const M& m, const CoproductConvex<M, A, B>&, const Z& z, F&& f, G&& g,
                              const typename CoproductConvex<M, A, B>::elem& e) {
  FormalSum<typename Z::elem, typename M::value_type> s;
  if (!e.first.is_bottom()) s.push_back({f(e.first.x()), e.first.r});
  if (!e.second.is_bottom()) s.push_back({g(e.second.x()), e.second.r});
  return z.eval(m, s);
}

// 1 + 1 + 1 as ((1 + 1) + 1); the two cotuples [k1,k2,k2] and [k2,k1,k2]
// evaluated on (r, s, t) must return r and s, and (r, s) must fix t.
template <class M>
Report check_conv_joint_monicity(const M& m, const std::vector<std::array<typename M::value_type, 3>>& triples,
                                 Mode mode = Mode::exhaustive()) {
  using V = typename M::value_type;
  Report rep("conv-joint-monicity", mode);
  if (m.one() == m.zero()) {
    rep.not_checkable("trivial monoid");
    return rep;
  }
  if constexpr (!M::has_division) {
    rep.not_checkable("division unavailable");
    return rep;
  } else {
    using P = PointConvex<M>;
    using Two = CoproductConvex<M, P, P>;
    using Three = CoproductConvex<M, Two, P>;
    const Two two(P{}, P{});
    const Three three(two, P{});
    auto lifted_point = [&](const V& w) {
      return w == m.zero() ? typename Two::LA::elem{Bottom{}, m.zero()} : typename Two::LA::elem{std::monostate{}, w};
    };
    auto encode = [&](const V& r, const V& s, const V& t) {
      typename Three::elem e;
      auto u = m.sum(r, s);
      if (!u) throw PreconditionError("r + s undefined");
      if (*u == m.zero()) {
        e.first = {Bottom{}, m.zero()};
      } else {
        typename Two::elem in{lifted_point(em_div(m, r, *u)), lifted_point(em_div(m, s, *u))};
        e.first = {in, *u};
      }
      e.second = t == m.zero() ? typename Three::LB::elem{Bottom{}, m.zero()}
                               : typename Three::LB::elem{std::monostate{}, t};
      return e;
    };
    auto k1 = [&](std::monostate) { return two.kappa1(m, {}); };
    auto k2 = [&](std::monostate) { return two.kappa2(m, {}); };
    auto read = [&](const typename Two::elem& e) { return e.first.r; };
    for (const auto& [r, s, t] : triples) {
      rep.count();
      const std::vector<std::string> in{m.show(r), m.show(s), m.show(t)};
      try {
        auto e = encode(r, s, t);
        if (!three.valid(m, e)) {
          rep.fail("conv.M3.valid", in, "element of 1+1+1", three.show(m, e));
          continue;
        }
        auto first = conv_cotuple(m, three, two,
                                  [&](const typename Two::elem& a) { return conv_cotuple(m, two, two, k1, k2, a); },
                                  k2, e);
        auto second = conv_cotuple(m, three, two,
                                   [&](const typename Two::elem& a) { return conv_cotuple(m, two, two, k2, k1, a); },
                                   k2, e);
        if (!(read(first) == r)) rep.fail("conv.M3.first", in, m.show(r), m.show(read(first)));
        if (!(read(second) == s)) rep.fail("conv.M3.second", in, m.show(s), m.show(read(second)));
        V t2 = m.ocomp(*m.sum(read(first), read(second)));
        if (!(t2 == t)) rep.fail("conv.M3.determined", in, m.show(t), m.show(t2));
        if (!(encode(read(first), read(second), t2) == e))
          rep.fail("conv.M3.determined", in, three.show(m, e), three.show(m, encode(read(first), read(second), t2)));
      } catch (const Error& ex) {
        rep.fail("conv.M3.error", in, "no error", ex.what());
      }
    }
    return rep;
  }
}

// Lifted sums, coproduct equations and the M3 determinacy on seeded data.
template <class M>
Report check_convex(const M& m, std::uint64_t seed, std::uint64_t n, const SsSampler& smp = {}) {
  using V = typename M::value_type;
  const Mode mode = Mode::sampling(seed, n);
  Report out("convex", mode);
  if constexpr (!M::has_division) {
    out.not_checkable("division unavailable");
    return out;
  } else {
    const FreeConvex<M> x3{3};
    const LiftedConvex<M, FreeConvex<M>> lx{x3};
    auto dist = [&](std::mt19937_64& g, std::size_t k) {
      auto col = smp.column(g, k, true);
      std::vector<V> v;
      for (const auto& q : col) v.push_back(m.from_rational(q));
      return v;
    };
    auto unit = [&](std::mt19937_64& g) { return m.from_rational(smp.column(g, 1, false)[0]); };

    Report lift("lift-sum", mode);
    for (std::uint64_t i = 0; i < n; ++i) {
      auto g = rng_for(seed, i);
      const std::size_t k = uniform(g, 1, 4);
      auto weights = dist(g, k);
      FormalSum<typename decltype(lx)::elem, V> s;
      for (std::size_t j = 0; j < k; ++j) {
        V r = uniform(g, 0, 3) == 0 ? m.zero() : unit(g);
        if (r == m.zero())
          s.push_back({lx.bottom(m), weights[j]});
        else
          s.push_back({{dist(g, 3), r}, weights[j]});
      }
      lift.count();
      std::vector<std::string> in;
      for (const auto& w : s) in.push_back(m.show(w.weight) + lx.show(m, w.elem));
      try {
        auto tr = conv_lift_sum(m, lx, s);
        if (!lx.valid(m, tr.value)) lift.fail("lift.valid", in, "element of X_*", lx.show(m, tr.value));
        if (!(tr.t == m.zero()) && !(tr.inner_total && *tr.inner_total == m.one()))
          lift.fail("lift.inner-total", in, "1", tr.inner_total ? m.show(*tr.inner_total) : "none");
        // x(j) * t = sum_i r_i s_i x_i(j)
        for (std::size_t j = 0; j < 3 && !tr.value.is_bottom(); ++j) {
          V u = m.zero();
          for (const auto& w : s)
            if (!w.elem.is_bottom()) u = *m.sum(u, m.mul(m.mul(w.elem.r, w.weight), w.elem.x()[j]));
          if (!(m.mul(tr.value.x()[j], tr.t) == u))
            lift.fail("lift.coordinates", in, m.show(u), m.show(m.mul(tr.value.x()[j], tr.t)));
        }
      } catch (const Error& e) {
        lift.fail("lift.error", in, "no error", e.what());
      }
    }
    out.add(std::move(lift));

    Report cop("coproduct", mode);
    cop.note("sampled uniqueness");
    const CoproductConvex<M, FreeConvex<M>, FreeConvex<M>> co(FreeConvex<M>{2}, FreeConvex<M>{3});
    const FreeConvex<M> z{2};
    using D = std::vector<V>;
    for (std::uint64_t i = 0; i < n; ++i) {
      auto g = rng_for(seed + 0xc0ULL, i);
      // affine maps given by stochastic matrices
      std::vector<D> fc, gc;
      for (int j = 0; j < 2; ++j) fc.push_back(dist(g, 2));
      for (int j = 0; j < 3; ++j) gc.push_back(dist(g, 2));
      auto apply = [&](const std::vector<D>& cols, const D& v) {
        FormalSum<D, V> s;
        for (std::size_t j = 0; j < cols.size(); ++j) s.push_back({cols[j], v[j]});
        return z.eval(m, s);
      };
      auto f = [&](const D& v) { return apply(fc, v); };
      auto gg = [&](const D& v) { return apply(gc, v); };
      const D xa = dist(g, 2), yb = dist(g, 3);
      const V r = unit(g);
      const V rs = m.ocomp(r);
      cop.count();
      try {
        if (!(conv_cotuple(m, co, z, f, gg, co.kappa1(m, xa)) == f(xa)))
          cop.fail("conv.cotuple.k1", {x3.show(m, xa)}, z.show(m, f(xa)), z.show(m, conv_cotuple(m, co, z, f, gg, co.kappa1(m, xa))));
        if (!(conv_cotuple(m, co, z, f, gg, co.kappa2(m, yb)) == gg(yb)))
          cop.fail("conv.cotuple.k2", {x3.show(m, yb)}, z.show(m, gg(yb)), z.show(m, conv_cotuple(m, co, z, f, gg, co.kappa2(m, yb))));
        typename decltype(co)::elem e{
            r == m.zero() ? co.la.bottom(m) : typename decltype(co)::LA::elem{xa, r},
            rs == m.zero() ? co.lb.bottom(m) : typename decltype(co)::LB::elem{yb, rs}};
        if (!co.valid(m, e)) {
          cop.fail("conv.coproduct.valid", {co.show(m, e)}, "element of X + Y", "invalid");
          continue;
        }
        // e = k1(x) r + k2(y) r^perp
        FormalSum<typename decltype(co)::elem, V> dec;
        if (!(r == m.zero())) dec.push_back({co.kappa1(m, xa), r});
        if (!(rs == m.zero())) dec.push_back({co.kappa2(m, yb), rs});
        auto back = co.eval(m, dec);
        if (!(back == e)) cop.fail("conv.coproduct.decompose", {co.show(m, e)}, co.show(m, e), co.show(m, back));
        FormalSum<D, V> img;
        if (!(r == m.zero())) img.push_back({f(xa), r});
        if (!(rs == m.zero())) img.push_back({gg(yb), rs});
        if (!(z.eval(m, img) == conv_cotuple(m, co, z, f, gg, e)))
          cop.fail("conv.coproduct.mediator", {co.show(m, e)}, z.show(m, z.eval(m, img)),
                   z.show(m, conv_cotuple(m, co, z, f, gg, e)));
      } catch (const Error& ex) {
        cop.fail("conv.coproduct.error", {x3.show(m, xa)}, "no error", ex.what());
      }
    }
    out.add(std::move(cop));

    std::vector<std::array<V, 3>> triples;
    for (std::uint64_t i = 0; i < n; ++i) {
      auto g = rng_for(seed + 0x3aULL, i);
      auto d = dist(g, 3);
      triples.push_back({d[0], d[1], d[2]});
    }
    out.add(check_conv_joint_monicity(m, triples, mode));
    return out;
  }
}

}  // namespace liftcat
