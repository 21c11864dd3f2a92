#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "liftcat/error.hpp"
#include "liftcat/models/monoids.hpp"
#include "liftcat/report.hpp"
#include "liftcat/rng.hpp"

namespace liftcat {

// Arrow X -> Y: a |Y| x |X| matrix, stored column-major (e[x * rows + y]).
template <class V>
struct SubMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<V> e;

  const V& at(std::size_t y, std::size_t x) const { return e[x * rows + y]; }
  V& at(std::size_t y, std::size_t x) { return e[x * rows + y]; }
  bool operator==(const SubMatrix& o) const = default;
};

template <class M>
using SsArrow = SubMatrix<typename M::value_type>;

template <class M>
SsArrow<M> ss_zero(const M& m, std::size_t rows, std::size_t cols) {
  return {rows, cols, std::vector<typename M::value_type>(rows * cols, m.zero())};
}

template <class M>
SsArrow<M> ss_identity(const M& m, std::size_t n) {
  auto a = ss_zero(m, n, n);
  for (std::size_t i = 0; i < n; ++i) a.at(i, i) = m.one();
  return a;
}

// 1_X : X -> 1
template <class M>
SsArrow<M> ss_top(const M& m, std::size_t n) {
  return {1, n, std::vector<typename M::value_type>(n, m.one())};
}

template <class M>
std::optional<typename M::value_type> ss_column_total(const M& m, const SsArrow<M>& f, std::size_t x) {
  std::optional<typename M::value_type> t = m.zero();
  for (std::size_t y = 0; y < f.rows && t; ++y) t = m.sum(*t, f.at(y, x));
  return t;
}

template <class M>
bool ss_valid(const M& m, const SsArrow<M>& f) {
  if (f.e.size() != f.rows * f.cols) return false;
  for (std::size_t x = 0; x < f.cols; ++x)
    if (!ss_column_total(m, f, x)) return false;
  return true;
}

// (g . f)(x)(z) = sum_y g(y)(z) * f(x)(y)
template <class M>
SsArrow<M> ss_compose(const M& m, const SsArrow<M>& g, const SsArrow<M>& f) {
  if (g.cols != f.rows)
    throw InputError("shape mismatch: " + std::to_string(g.cols) + " vs " + std::to_string(f.rows));
  auto h = ss_zero(m, g.rows, f.cols);
  for (std::size_t x = 0; x < f.cols; ++x)
    for (std::size_t z = 0; z < g.rows; ++z) {
      typename M::value_type acc = m.zero();
      for (std::size_t y = 0; y < f.rows; ++y) {
        auto s = m.sum(acc, m.mul(g.at(z, y), f.at(y, x)));
        if (!s) throw StructureError("composite entry undefined at column " + std::to_string(x));
        acc = *s;
      }
      h.at(z, x) = acc;
    }
  return h;
}

// Entrywise sum, defined iff every column total stays defined.
template <class M>
std::optional<SsArrow<M>> ss_sum(const M& m, const SsArrow<M>& f, const SsArrow<M>& g) {
  if (f.rows != g.rows || f.cols != g.cols) throw InputError("shape mismatch in sum");
  SsArrow<M> h = f;
  for (std::size_t i = 0; i < f.e.size(); ++i) {
    auto s = m.sum(f.e[i], g.e[i]);
    if (!s) return std::nullopt;
    h.e[i] = *s;
  }
  if (!ss_valid(m, h)) return std::nullopt;
  return h;
}

template <class M>
SsArrow<M> ss_dp(const M& m, const SsArrow<M>& f) {
  return ss_compose(m, ss_top(m, f.rows), f);
}

template <class M>
bool ss_is_total(const M& m, const SsArrow<M>& f) {
  return ss_dp(m, f) == ss_top(m, f.cols);
}

template <class M>
bool ss_is_zero(const M& m, const SsArrow<M>& f) {
  for (const auto& v : f.e)
    if (!(v == m.zero())) return false;
  return true;
}

// kappa_i : A -> A + B (i = 1) or B -> A + B (i = 2)
template <class M>
SsArrow<M> ss_kappa(const M& m, std::size_t a, std::size_t b, int i) {
  std::size_t n = i == 1 ? a : b, off = i == 1 ? 0 : a;
  auto k = ss_zero(m, a + b, n);
  for (std::size_t j = 0; j < n; ++j) k.at(off + j, j) = m.one();
  return k;
}

// partial projection A + B -> A (i = 1) or -> B (i = 2)
template <class M>
SsArrow<M> ss_proj(const M& m, std::size_t a, std::size_t b, int i) {
  std::size_t n = i == 1 ? a : b, off = i == 1 ? 0 : a;
  auto p = ss_zero(m, n, a + b);
  for (std::size_t j = 0; j < n; ++j) p.at(j, off + j) = m.one();
  return p;
}

// The unique h : X -> A + B with p1 . h = f and p2 . h = g.
template <class M>
std::string ss_show(const M& m, const SsArrow<M>& f);

template <class M>
SsArrow<M> ss_stack(const M& m, const SsArrow<M>& f, const SsArrow<M>& g) {
  if (f.cols != g.cols) throw InputError("stacked arrows need a common domain");
  auto df = ss_dp(m, f), dg = ss_dp(m, g);
  if (!ss_sum(m, df, dg)) throw PreconditionError("domain predicates are not orthogonal", {ss_show(m, f), ss_show(m, g)});
  SsArrow<M> h = ss_zero(m, f.rows + g.rows, f.cols);
  for (std::size_t x = 0; x < f.cols; ++x) {
    for (std::size_t y = 0; y < f.rows; ++y) h.at(y, x) = f.at(y, x);
    for (std::size_t y = 0; y < g.rows; ++y) h.at(f.rows + y, x) = g.at(y, x);
  }
  return h;
}

// Scalar r as a 1x1 matrix.
template <class M>
SsArrow<M> ss_scalar(const M&, const typename M::value_type& r) {
  return {1, 1, {r}};
}

template <class M>
std::string ss_show(const M& m, const SsArrow<M>& f) {
  std::string s = "[";
  for (std::size_t x = 0; x < f.cols; ++x) {
    if (x) s += " | ";
    for (std::size_t y = 0; y < f.rows; ++y) {
      if (y) s += " ";
      s += m.show(f.at(y, x));
    }
  }
  return s + "]";
}

// Seeded matrices: per column a denominator d from `denoms`, entries
// multiples of 1/d, rejected until the column total is <= 1 (exactly 1 in
// total mode).
struct SsSampler {
  std::vector<int> denoms{2, 3, 4, 6};
  std::size_t max_size = 3;

  // k[y] / d per entry, one column
  std::vector<Rational> column(std::mt19937_64& g, std::size_t rows, bool total) const {
    const int d = denoms[uniform(g, 0, denoms.size() - 1)];
    for (;;) {
      std::vector<long> k(rows);
      long sum = 0;
      for (std::size_t y = 0; y < rows; ++y) {
        k[y] = static_cast<long>(uniform(g, 0, d));
        sum += k[y];
      }
      if (total && rows > 0) {
        // last entry absorbs the remainder
        sum -= k[rows - 1];
        if (sum > d) continue;
        k[rows - 1] = d - sum;
        sum = d;
      }
      if (sum > d) continue;
      std::vector<Rational> out;
      for (auto v : k) out.emplace_back(v, d);
      return out;
    }
  }

  template <class M>
  SsArrow<M> matrix(const M& m, std::mt19937_64& g, std::size_t rows, std::size_t cols, bool total = false) const {
    SsArrow<M> f = ss_zero(m, rows, cols);
    for (std::size_t x = 0; x < cols; ++x) {
      if constexpr (std::is_same_v<typename M::value_type, Pair>) {
        auto a = column(g, rows, total), b = column(g, rows, total);
        for (std::size_t y = 0; y < rows; ++y) f.at(y, x) = Pair{a[y], b[y]};
      } else {
        auto a = column(g, rows, total);
        for (std::size_t y = 0; y < rows; ++y) f.at(y, x) = m.from_rational(a[y]);
      }
    }
    return f;
  }

  std::size_t size(std::mt19937_64& g, std::size_t lo = 1) const { return uniform(g, lo, max_size); }
};

namespace detail {

template <class M>
std::vector<std::string> ss_in(const M& m, std::initializer_list<const SsArrow<M>*> as) {
  std::vector<std::string> v;
  for (auto* a : as) v.push_back(ss_show(m, *a));
  return v;
}

template <class M>
std::string ss_opt(const M& m, const std::optional<SsArrow<M>>& a) {
  return a ? ss_show(m, *a) : std::string("undefined");
}

}  // namespace detail

// Sampled arrow-algebra suite over substochastic matrices.
template <class M>
Report check_substochastic(const M& m, std::uint64_t seed, std::uint64_t n, const SsSampler& smp = {}) {
  using A = SsArrow<M>;
  using detail::ss_in;
  using detail::ss_opt;
  Report out("substochastic", Mode::sampling(seed, n));
  Report pcm("pcm", out.mode()), bihom("bihom", out.mode()), l11("dp-laws", out.mode()),
      l12("dp-decomposition", out.mode()), assoc("assoc", out.mode());
  for (std::uint64_t i = 0; i < n; ++i) {
    auto g = rng_for(seed, i);
    const std::size_t x = smp.size(g), y = smp.size(g), z = smp.size(g), w = smp.size(g);
    try {
      // three arrows, every other sample split from one X -> Y+Y+Y so they are orthogonal
      A f1, f2, f3;
      if (i % 2 == 0) {
        A big = smp.matrix(m, g, 3 * y, x);
        auto blk = [&](std::size_t k) {
          A b = ss_zero(m, y, x);
          for (std::size_t c = 0; c < x; ++c)
            for (std::size_t r = 0; r < y; ++r) b.at(r, c) = big.at(k * y + r, c);
          return b;
        };
        f1 = blk(0), f2 = blk(1), f3 = blk(2);
      } else {
        f1 = smp.matrix(m, g, y, x), f2 = smp.matrix(m, g, y, x), f3 = smp.matrix(m, g, y, x);
      }
      const A zero = ss_zero(m, y, x);

      pcm.count();
      if (ss_sum(m, f1, zero) != std::optional<A>(f1))
        pcm.fail("ss.pcm.unit", ss_in(m, {&f1}), ss_show(m, f1), ss_opt(m, ss_sum(m, f1, zero)));
      if (ss_sum(m, f1, f2) != ss_sum(m, f2, f1))
        pcm.fail("ss.pcm.comm", ss_in(m, {&f1, &f2}), ss_opt(m, ss_sum(m, f1, f2)), ss_opt(m, ss_sum(m, f2, f1)));
      auto s12 = ss_sum(m, f1, f2), s23 = ss_sum(m, f2, f3);
      std::optional<A> l = s12 ? ss_sum(m, *s12, f3) : std::nullopt;
      std::optional<A> r = s23 ? ss_sum(m, f1, *s23) : std::nullopt;
      if (l != r) pcm.fail("ss.pcm.assoc", ss_in(m, {&f1, &f2, &f3}), ss_opt(m, l), ss_opt(m, r));

      const A gg = smp.matrix(m, g, z, y), gg2 = smp.matrix(m, g, z, y), e = smp.matrix(m, g, x, w);
      bihom.count();
      if (s12) {
        auto want = ss_sum(m, ss_compose(m, gg, f1), ss_compose(m, gg, f2));
        A got = ss_compose(m, gg, *s12);
        if (want != std::optional<A>(got))
          bihom.fail("ss.bihom.post", ss_in(m, {&gg, &f1, &f2}), ss_opt(m, want), ss_show(m, got));
        A got2 = ss_compose(m, *s12, e);
        auto want2 = ss_sum(m, ss_compose(m, f1, e), ss_compose(m, f2, e));
        if (want2 != std::optional<A>(got2))
          bihom.fail("ss.bihom.pre", ss_in(m, {&f1, &f2, &e}), ss_opt(m, want2), ss_show(m, got2));
      }
      if (!(ss_compose(m, gg, zero) == ss_zero(m, z, x)))
        bihom.fail("ss.bihom.zero", ss_in(m, {&gg}), "0", ss_show(m, ss_compose(m, gg, zero)));

      // domain predicate laws
      l11.count();
      const A d1 = ss_dp(m, f1), d2 = ss_dp(m, f2);
      if (ss_is_zero(m, f1) != ss_is_zero(m, d1))
        l11.fail("ss.l11.zero", ss_in(m, {&f1}), "f = 0 iff Dp f = 0", ss_show(m, d1));
      if (s12.has_value() != ss_sum(m, d1, d2).has_value())
        l11.fail("ss.l11.orthogonal", ss_in(m, {&f1, &f2}), s12 ? "Dp orthogonal" : "Dp not orthogonal",
                 ss_opt(m, ss_sum(m, d1, d2)));
      if (s12 && std::optional<A>(ss_dp(m, *s12)) != ss_sum(m, d1, d2))
        l11.fail("ss.l11.dp-sum", ss_in(m, {&f1, &f2}), ss_opt(m, ss_sum(m, d1, d2)), ss_show(m, ss_dp(m, *s12)));
      const A gf = ss_compose(m, gg, f1);
      const A dgf = ss_dp(m, gf), dg_f = ss_compose(m, ss_dp(m, gg), f1);
      if (!(dgf == dg_f)) l11.fail("ss.l11.dp-composite", ss_in(m, {&gg, &f1}), ss_show(m, dg_f), ss_show(m, dgf));
      for (std::size_t c = 0; c < x; ++c)
        if (!m.le(dgf.at(0, c), d1.at(0, c)))
          l11.fail("ss.l11.dp-below", ss_in(m, {&gg, &f1}), "Dp(g.f) <= Dp f", ss_show(m, dgf));
      const A gt = smp.matrix(m, g, z, y, true);
      if (!(ss_dp(m, ss_compose(m, gt, f1)) == d1))
        l11.fail("ss.l11.dp-total", ss_in(m, {&gt, &f1}), ss_show(m, d1), ss_show(m, ss_dp(m, ss_compose(m, gt, f1))));
      // split mono: kappa_1 followed by a permutation, split by the inverse permutation then p1
      std::vector<std::size_t> perm(x + y);
      for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
      std::shuffle(perm.begin(), perm.end(), g);
      A pm = ss_zero(m, x + y, x + y), pinv = ss_zero(m, x + y, x + y);
      for (std::size_t k = 0; k < perm.size(); ++k) {
        pm.at(perm[k], k) = m.one();
        pinv.at(k, perm[k]) = m.one();
      }
      const A mono = ss_compose(m, pm, ss_kappa(m, x, y, 1));
      const A retr = ss_compose(m, ss_proj(m, x, y, 1), pinv);
      if (!(ss_compose(m, retr, mono) == ss_identity(m, x)))
        l11.fail("ss.l11.split", ss_in(m, {&mono}), "split mono", ss_show(m, ss_compose(m, retr, mono)));
      else if (!ss_is_total(m, mono))
        l11.fail("ss.l11.split-mono-total", ss_in(m, {&mono}), "total", ss_show(m, ss_dp(m, mono)));
      for (int k : {1, 2}) {
        const A kap = ss_kappa(m, x, y, k), pr = ss_proj(m, x, y, k);
        if (!(ss_compose(m, pr, kap) == ss_identity(m, k == 1 ? x : y)))
          l11.fail("ss.l11.kappa-split", {std::to_string(k)}, "p_i . k_i = id", ss_show(m, ss_compose(m, pr, kap)));
        if (!ss_is_total(m, kap)) l11.fail("ss.l11.kappa-total", {std::to_string(k)}, "total", ss_show(m, ss_dp(m, kap)));
      }
      if (!(ss_top(m, 1) == ss_identity(m, 1))) l11.fail("ss.l11.top-unit", {}, "1_I = id_I", ss_show(m, ss_top(m, 1)));

      // X -> Y1 + Y2 + Y3 against its three blocks
      l12.count();
      const A h = smp.matrix(m, g, x + y + z, w);
      const A p1 = ss_compose(m, ss_proj(m, x, y + z, 1), h);
      const A rest = ss_compose(m, ss_proj(m, x, y + z, 2), h);
      const A p2 = ss_compose(m, ss_proj(m, y, z, 1), rest), p3 = ss_compose(m, ss_proj(m, y, z, 2), rest);
      auto dsum = ss_sum(m, ss_dp(m, p1), ss_dp(m, p2));
      if (dsum) dsum = ss_sum(m, *dsum, ss_dp(m, p3));
      if (dsum != std::optional<A>(ss_dp(m, h)))
        l12.fail("ss.l12.dp", ss_in(m, {&h}), ss_show(m, ss_dp(m, h)), ss_opt(m, dsum));
      const A back = ss_stack(m, p1, ss_stack(m, p2, p3));
      if (!(back == h)) l12.fail("ss.l12.roundtrip", ss_in(m, {&h}), ss_show(m, h), ss_show(m, back));
      // and from an orthogonal family
      if (s12) {
        const A st = ss_stack(m, f1, f2);
        if (!(ss_compose(m, ss_proj(m, y, y, 1), st) == f1) || !(ss_compose(m, ss_proj(m, y, y, 2), st) == f2))
          l12.fail("ss.l12.inverse", ss_in(m, {&f1, &f2}), "p_i . stack = f_i", ss_show(m, st));
        auto ksum = ss_sum(m, ss_compose(m, ss_kappa(m, y, y, 1), f1), ss_compose(m, ss_kappa(m, y, y, 2), f2));
        if (ksum != std::optional<A>(st))
          l12.fail("ss.l12.kappa-sum", ss_in(m, {&f1, &f2}), ss_show(m, st), ss_opt(m, ksum));
      }

      assoc.count();
      const A hh = smp.matrix(m, g, w, z);
      const A lft = ss_compose(m, hh, ss_compose(m, gg, f1)), rgt = ss_compose(m, ss_compose(m, hh, gg), f1);
      if (!(lft == rgt)) assoc.fail("ss.assoc", ss_in(m, {&hh, &gg, &f1}), ss_show(m, lft), ss_show(m, rgt));
    } catch (const Error& ex) {
      out.fail("ss.error", {"sample " + std::to_string(i)}, "no error", ex.what());
    }
  }
  out.add(std::move(pcm));
  out.add(std::move(bihom));
  out.add(std::move(l11));
  out.add(std::move(l12));
  out.add(std::move(assoc));
  return out;
}

// Every (partial) function as a 0/1 matrix; Pfn-style when partial.
template <class M>
std::vector<SsArrow<M>> ss_enumerate_boolean(const M& m, std::size_t rows, std::size_t cols, bool partial) {
  std::vector<SsArrow<M>> out;
  const std::size_t base = rows + (partial ? 1 : 0);
  std::vector<std::size_t> d(cols, 0);
  if (base == 0 && cols > 0) return out;
  for (;;) {
    SsArrow<M> f = ss_zero(m, rows, cols);
    for (std::size_t x = 0; x < cols; ++x) {
      std::size_t v = d[x];
      if (partial) {
        if (v == 0) continue;
        --v;
      }
      f.at(v, x) = m.one();
    }
    out.push_back(std::move(f));
    std::size_t i = cols;
    bool done = true;
    while (i > 0) {
      --i;
      if (++d[i] < base) {
        done = false;
        break;
      }
      d[i] = 0;
    }
    if (done) break;
  }
  return out;
}

}  // namespace liftcat
