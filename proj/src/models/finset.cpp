#include <algorithm>
#include <optional>
#include <sstream>

#include "liftcat/error.hpp"
#include "liftcat/models/sets.hpp"

namespace liftcat {

ObjId FunctionModel::object_of_size(std::uint32_t n) const {
  for (ObjId x = 0; x < sizes.size(); ++x)
    if (sizes[x] == n) return x;
  throw InputError("no set of size " + std::to_string(n));
}

ArrId FunctionModel::find(ObjId x, ObjId y, const std::vector<std::uint32_t>& values) const {
  if (values.size() != sizes[x]) throw InputError("value list has the wrong length");
  const std::uint64_t base = sizes[y] + (partial ? 1 : 0);
  std::uint64_t local = 0;
  for (auto v : values) {
    std::uint64_t d;
    if (v == kUndefined) {
      if (!partial) throw InputError("undefined value in a total function");
      d = 0;
    } else {
      if (v >= sizes[y]) throw InputError("value out of range");
      d = partial ? v + 1 : v;
    }
    local = local * base + d;
  }
  return cat->hom(x, y)[local];
}

namespace {

std::string arrow_name(bool partial, std::uint32_t m, std::uint32_t n, const std::vector<std::uint32_t>& v) {
  std::string s = (partial ? "p" : "f") + std::to_string(m) + "-" + std::to_string(n) + ":";
  if (v.empty()) return s + "()";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ".";
    s += v[i] == kUndefined ? "_" : std::to_string(v[i]);
  }
  return s;
}

FunctionModel build_functions(const std::vector<std::uint32_t>& sizes, bool partial, std::size_t cap) {
  if (sizes.empty()) throw InputError("no set sizes given");
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (sizes[i] == sizes[j]) throw InputError("duplicate set size " + std::to_string(sizes[i]));
  // estimated table size, before allocating anything
  long double arrows = 0, entries = 0;
  auto homsize = [&](std::uint32_t m, std::uint32_t n) {
    long double b = n + (partial ? 1 : 0), r = 1;
    for (std::uint32_t i = 0; i < m; ++i) r *= b;
    return r;
  };
  for (auto m : sizes)
    for (auto n : sizes) {
      arrows += homsize(m, n);
      for (auto k : sizes) entries += homsize(m, n) * homsize(n, k);
    }
  if (arrows > static_cast<long double>(cap) || entries > static_cast<long double>(cap))
    throw CapExceeded("model too large for exhaustive tables (cap " + std::to_string(cap) + ")");

  FunctionModel m;
  m.partial = partial;
  m.sizes = sizes;
  FinCategory::Builder b(cap);
  for (auto s : sizes) b.add_object(std::to_string(s));
  const ObjId n = static_cast<ObjId>(sizes.size());
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      const std::uint32_t base = sizes[y] + (partial ? 1 : 0);
      std::vector<std::uint32_t> digits(sizes[x], 0);
      if (base == 0 && sizes[x] > 0) continue;
      for (;;) {
        std::vector<std::uint32_t> v(sizes[x]);
        for (std::size_t i = 0; i < v.size(); ++i)
          v[i] = partial ? (digits[i] == 0 ? kUndefined : digits[i] - 1) : digits[i];
        b.add_arrow(arrow_name(partial, sizes[x], sizes[y], v), x, y);
        m.fn.push_back(std::move(v));
        std::size_t i = digits.size();
        bool done = true;
        while (i > 0) {
          --i;
          if (++digits[i] < base) {
            done = false;
            break;
          }
          digits[i] = 0;
        }
        if (done) break;
      }
    }
  auto find_in_builder = [&](ObjId x, ObjId y, const std::vector<std::uint32_t>& v) {
    return *b.find_arr(arrow_name(partial, sizes[x], sizes[y], v));
  };
  for (ObjId x = 0; x < n; ++x) {
    std::vector<std::uint32_t> v(sizes[x]);
    for (std::uint32_t i = 0; i < sizes[x]; ++i) v[i] = i;
    b.set_identity(x, find_in_builder(x, x, v));
  }
  b.compose_with([&](ArrId g, ArrId f) {
    const auto& fv = m.fn[f];
    const auto& gv = m.fn[g];
    std::vector<std::uint32_t> h(fv.size());
    for (std::size_t i = 0; i < fv.size(); ++i) h[i] = fv[i] == kUndefined ? kUndefined : gv[fv[i]];
    return find_in_builder(b.dom(f), b.cod(g), h);
  });
  auto obj = [&](std::uint32_t s) -> std::optional<ObjId> {
    for (ObjId x = 0; x < n; ++x)
      if (sizes[x] == s) return x;
    return std::nullopt;
  };
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      auto a = obj(sizes[x] + sizes[y]);
      if (!a) continue;
      std::vector<std::uint32_t> k1(sizes[x]), k2(sizes[y]);
      for (std::uint32_t i = 0; i < sizes[x]; ++i) k1[i] = i;
      for (std::uint32_t j = 0; j < sizes[y]; ++j) k2[j] = sizes[x] + j;
      b.add_coproduct({x, y, *a, find_in_builder(x, *a, k1), find_in_builder(y, *a, k2)});
    }
  if (auto z = obj(0)) b.set_initial(*z);
  if (auto one = obj(1)) {
    if (partial) {
      b.set_unit(*one);
      for (ObjId x = 0; x < n; ++x) b.set_top(x, find_in_builder(x, *one, std::vector<std::uint32_t>(sizes[x], 0)));
    } else {
      b.set_final(*one);
    }
  }
  m.cat = std::make_shared<const FinCategory>(b.build());
  return m;
}

}  // namespace

FunctionModel build_finset(const std::vector<std::uint32_t>& sizes, std::size_t cap) {
  return build_functions(sizes, false, cap);
}

FunctionModel build_pfn(const std::vector<std::uint32_t>& sizes, std::size_t cap) {
  return build_functions(sizes, true, cap);
}

std::vector<std::uint32_t> parse_sizes(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw InputError("bad size list '" + s + "'");
    out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
  }
  if (out.empty()) throw InputError("empty size list");
  return out;
}

}  // namespace liftcat
