#pragma once

#include <cstdint>
#include <type_traits>

#include "liftcat/algebra/division.hpp"
#include "liftcat/algebra/laws.hpp"
#include "liftcat/models/substochastic.hpp"
#include "liftcat/report.hpp"

namespace liftcat {

// omega : I -> X is |X| x 1, p : X -> I is 1 x |X|.
template <class M>
typename M::value_type ss_born(const M& m, const SsArrow<M>& omega, const SsArrow<M>& p) {
  return ss_compose(m, p, omega).at(0, 0);
}

template <class M>
struct SsNormalized {
  SsArrow<M> state;
  typename M::value_type scalar;
};

// Columnwise division by Dp(omega).
template <class M>
SsNormalized<M> ss_normalize(const M& m, const SsArrow<M>& omega) {
  if (omega.cols != 1) throw InputError("a substate has one column");
  if (ss_is_zero(m, omega)) throw PreconditionError("cannot normalize the zero substate");
  if constexpr (!M::has_division) {
    throw StructureError("normalization not available: the scalars have no division");
  } else {
    auto t = ss_column_total(m, omega, 0);
    if (!t) throw StructureError("substate has no defined total");
    SsNormalized<M> n{ss_zero(m, omega.rows, 1), *t};
    for (std::size_t y = 0; y < omega.rows; ++y) n.state.at(y, 0) = em_div(m, omega.at(y, 0), *t);
    if (!ss_is_total(m, n.state)) throw StructureError("normalized state is not total");
    if (!(ss_compose(m, n.state, ss_scalar(m, n.scalar)) == omega))
      throw StructureError("normalized state does not rescale to the substate");
    return n;
  }
}

template <class M>
typename M::value_type ss_division_via_normalization(const M& m, const typename M::value_type& s,
                                                     const typename M::value_type& t) {
  auto rest = m.ominus(t, s);
  if (!rest) throw PreconditionError(m.show(s) + " is not below " + m.show(t));
  SsArrow<M> omega = ss_stack(m, ss_scalar(m, s), ss_scalar(m, *rest));
  auto n = ss_normalize(m, omega);
  return ss_compose(m, ss_proj(m, 1, 1, 1), n.state).at(0, 0);
}

// Hom(X, Y) as a PCM, for the module law checker.
template <class M>
struct SsHom {
  using value_type = SsArrow<M>;
  M m;
  std::size_t rows, cols;
  value_type zero() const { return ss_zero(m, rows, cols); }
  std::optional<value_type> sum(const value_type& a, const value_type& b) const { return ss_sum(m, a, b); }
  std::string show(const value_type& a) const { return ss_show(m, a); }
};

// Born rule, transposes, naturality, module laws, normalization and
// division on seeded substochastic data.
template <class M>
Report check_ss_triangle(const M& m, std::uint64_t seed, std::uint64_t n, const SsSampler& smp = {}) {
  using A = SsArrow<M>;
  using V = typename M::value_type;
  using detail::ss_in;
  const Mode mode = Mode::sampling(seed, n);
  Report out("ss-triangle", mode);
  auto scalar = [&](std::mt19937_64& g) { return smp.matrix(m, g, 1, 1).at(0, 0); };

  Report born("born", mode), nat("naturality", mode);
  for (std::uint64_t i = 0; i < n; ++i) {
    auto g = rng_for(seed, i);
    const std::size_t x = smp.size(g), y = smp.size(g);
    const A w = smp.matrix(m, g, x, 1), w2 = smp.matrix(m, g, x, 1);
    const A p = smp.matrix(m, g, 1, x), q = smp.matrix(m, g, 1, x);
    const A f = smp.matrix(m, g, y, x), py = smp.matrix(m, g, 1, y);
    const V r = scalar(g);
    born.count();
    try {
      if constexpr (!std::is_same_v<V, Pair>) {
        // sum_x p(x) w(x) in plain rationals
        Rational e = 0;
        for (std::size_t k = 0; k < x; ++k) e += m.to_rational(p.at(0, k)) * m.to_rational(w.at(k, 0));
        if (m.to_rational(ss_born(m, w, p)) != e)
          born.fail("born.expectation", ss_in(m, {&w, &p}), to_string(e), m.show(ss_born(m, w, p)));
      }
      if (!(ss_born(m, w, ss_top(m, x)) == ss_dp(m, w).at(0, 0)))
        born.fail("born.top", ss_in(m, {&w}), m.show(ss_dp(m, w).at(0, 0)), m.show(ss_born(m, w, ss_top(m, x))));
      if (!(ss_born(m, w, ss_zero(m, 1, x)) == m.zero()))
        born.fail("born.zero", ss_in(m, {&w}), m.show(m.zero()), m.show(ss_born(m, w, ss_zero(m, 1, x))));
      // alpha(p)(w) and beta(w)(p) are the one composite p . w
      const V a = ss_compose(m, p, w).at(0, 0), b = ss_born(m, w, p);
      if (!(a == b)) born.fail("born.transpose", ss_in(m, {&p, &w}), m.show(b), m.show(a));
      if (auto pq = ss_sum(m, p, q)) {
        auto want = m.sum(ss_born(m, w, p), ss_born(m, w, q));
        if (want != std::optional<V>(ss_born(m, w, *pq)))
          born.fail("born.beta-additive", ss_in(m, {&w, &p, &q}), m.show(ss_born(m, w, *pq)),
                    want ? m.show(*want) : "undefined");
      }
      if (auto ww = ss_sum(m, w, w2)) {
        auto want = m.sum(ss_born(m, w, p), ss_born(m, w2, p));
        if (want != std::optional<V>(ss_born(m, *ww, p)))
          born.fail("born.alpha-additive", ss_in(m, {&w, &w2, &p}), m.show(ss_born(m, *ww, p)),
                    want ? m.show(*want) : "undefined");
      }
      const A wr = ss_compose(m, w, ss_scalar(m, r));
      if (!(ss_born(m, wr, p) == m.mul(ss_born(m, w, p), r)))
        born.fail("born.alpha-scalar", ss_in(m, {&w, &p}), m.show(m.mul(ss_born(m, w, p), r)), m.show(ss_born(m, wr, p)));
      if (!m.le(ss_dp(m, wr).at(0, 0), r))
        born.fail("sstat.dp-below", ss_in(m, {&w}), "Dp(w.r) <= r", m.show(ss_dp(m, wr).at(0, 0)));
      nat.count();
      const V lhs = ss_born(m, ss_compose(m, f, w), py), rhs = ss_born(m, w, ss_compose(m, py, f));
      if (!(lhs == rhs)) nat.fail("alpha.natural", ss_in(m, {&f, &py, &w}), m.show(rhs), m.show(lhs));
    } catch (const Error& e) {
      born.fail("born.error", {"sample " + std::to_string(i)}, "no error", e.what());
    }
  }
  out.add(std::move(born));
  out.add(std::move(nat));

  // module laws of Pred(X) and SStat(X) at |X| = 2
  auto draw_pred = [&](bool states) {
    return [&, states](std::uint64_t k) {
      auto g = rng_for(seed ^ (states ? 0x5157ULL : 0x9ed1ULL), k);
      ModuleSample<V, A> s;
      s.r = scalar(g);
      s.s = k % 2 ? m.mul(scalar(g), m.ocomp(s.r)) : scalar(g);
      if (states && k % 2) {
        A big = smp.matrix(m, g, 4, 1);
        s.x = ss_compose(m, ss_proj(m, 2, 2, 1), big);
        s.y = ss_compose(m, ss_proj(m, 2, 2, 2), big);
      } else {
        s.x = states ? smp.matrix(m, g, 2, 1) : smp.matrix(m, g, 1, 2);
        s.y = states ? smp.matrix(m, g, 2, 1) : smp.matrix(m, g, 1, 2);
      }
      return s;
    };
  };
  {
    SsHom<M> e{m, 1, 2};
    auto act = [&](const V& r, const A& p) { return ss_compose(m, ss_scalar(m, r), p); };
    Report pm = check_module_laws(m, e, act, Side::left, false, mode, {}, {},
                                  std::function<ModuleSample<V, A>(std::uint64_t)>(draw_pred(false)));
    Report wrap("pred-modules", mode);
    wrap.add(std::move(pm));
    out.add(std::move(wrap));
  }
  {
    SsHom<M> e{m, 2, 1};
    auto act = [&](const V& r, const A& w) { return ss_compose(m, w, ss_scalar(m, r)); };
    Report sm = check_module_laws(m, e, act, Side::right, true, mode, {}, {},
                                  std::function<ModuleSample<V, A>(std::uint64_t)>(draw_pred(true)));
    Report wrap("sstat-modules", mode);
    wrap.add(std::move(sm));
    out.add(std::move(wrap));
  }

  Report norm("normalization", mode), div("division", mode);
  if constexpr (!M::has_division) {
    norm.not_checkable("normalization not available");
    div.not_checkable("normalization not available");
  } else {
    for (std::uint64_t i = 0; i < n; ++i) {
      auto g = rng_for(seed + 0x7a11ULL, i);
      const std::size_t x = smp.size(g);
      A w = smp.matrix(m, g, x, 1);
      while (ss_is_zero(m, w)) w = smp.matrix(m, g, x, 1);
      norm.count();
      try {
        auto nn = ss_normalize(m, w);
        if (!ss_is_total(m, nn.state)) norm.fail("normalize.total", ss_in(m, {&w}), "total", ss_show(m, nn.state));
        if (!(nn.scalar == ss_dp(m, w).at(0, 0)))
          norm.fail("normalize.scalar", ss_in(m, {&w}), m.show(ss_dp(m, w).at(0, 0)), m.show(nn.scalar));
        if (!(ss_compose(m, nn.state, ss_scalar(m, nn.scalar)) == w))
          norm.fail("normalize.factor", ss_in(m, {&w}), ss_show(m, w),
                    ss_show(m, ss_compose(m, nn.state, ss_scalar(m, nn.scalar))));
        // scale, then normalize
        const A sigma = smp.matrix(m, g, x, 1, true);
        V t = scalar(g);
        while (t == m.zero()) t = scalar(g);
        auto back = ss_normalize(m, ss_compose(m, sigma, ss_scalar(m, t)));
        if (!(back.state == sigma) || !(back.scalar == t))
          norm.fail("normalize.scale", ss_in(m, {&sigma}), ss_show(m, sigma) + "," + m.show(t),
                    ss_show(m, back.state) + "," + m.show(back.scalar));
        div.count();
        const V s = m.mul(scalar(g), t);
        const V q = ss_division_via_normalization(m, s, t);
        if (!(q == em_div(m, s, t)))
          div.fail("division.agree", {m.show(s), m.show(t)}, m.show(em_div(m, s, t)), m.show(q));
      } catch (const Error& e) {
        norm.fail("normalize.error", ss_in(m, {&w}), "no error", e.what());
      }
    }
  }
  out.add(std::move(norm));
  out.add(std::move(div));
  return out;
}

}  // namespace liftcat
