#include "liftcat/fincat/category.hpp"

#include "liftcat/error.hpp"

namespace liftcat {

ObjId FinCategory::obj(const std::string& name) const {
  auto it = obj_index_.find(name);
  if (it == obj_index_.end()) throw InputError("unknown object '" + name + "'");
  return it->second;
}

ArrId FinCategory::arr(const std::string& name) const {
  auto it = arr_index_.find(name);
  if (it == arr_index_.end()) throw InputError("unknown arrow '" + name + "'");
  return it->second;
}

std::optional<ObjId> FinCategory::find_obj(const std::string& name) const {
  auto it = obj_index_.find(name);
  if (it == obj_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrId> FinCategory::find_arr(const std::string& name) const {
  auto it = arr_index_.find(name);
  if (it == arr_index_.end()) return std::nullopt;
  return it->second;
}

ArrId FinCategory::compose(ArrId g, ArrId f) const {
  if (g >= num_arrows() || f >= num_arrows()) throw InputError("unknown arrow id");
  if (cod_[f] != dom_[g])
    throw InputError("not composable: " + arr_names_[g] + " . " + arr_names_[f]);
  ObjId x = dom_[f], y = cod_[f], z = cod_[g];
  return hom(x, z)[compose_local(x, y, z, local_[g], local_[f])];
}

ArrId FinCategory::compose(std::initializer_list<ArrId> chain) const {
  auto it = chain.end();
  ArrId acc = *--it;
  while (it != chain.begin()) acc = compose(*--it, acc);
  return acc;
}

std::size_t FinCategory::composition_entries() const {
  std::size_t n = 0;
  for (const auto& b : comp_) n += b.size();
  return n;
}

const Coproduct* FinCategory::coproduct(ObjId l, ObjId r) const {
  for (const auto& c : coproducts_) {
    if (c.left == l && c.right == r) return &c;
  }
  return nullptr;
}

bool FinCategory::has_tops() const {
  if (tops_.size() != num_objects()) return false;
  for (ArrId t : tops_) {
    if (t == kNoArrow) return false;
  }
  return true;
}

void FinCategory::add_coproduct(const Coproduct& c) {
  for (auto& e : coproducts_) {
    if (e.left == c.left && e.right == c.right) {
      e = c;
      return;
    }
  }
  coproducts_.push_back(c);
}

ObjId FinCategory::Builder::add_object(const std::string& name) {
  if (tables_ready_) throw Error("objects must be added before compositions");
  if (name.empty()) throw FormatError("empty object name");
  ObjId id = static_cast<ObjId>(c_.obj_names_.size());
  if (!c_.obj_index_.emplace(name, id).second) throw FormatError("duplicate object '" + name + "'");
  c_.obj_names_.push_back(name);
  c_.ident_.push_back(kNoArrow);
  return id;
}

ArrId FinCategory::Builder::add_arrow(const std::string& name, ObjId dom, ObjId cod) {
  if (tables_ready_) throw Error("arrows must be added before compositions");
  if (dom >= num_objects() || cod >= num_objects())
    throw FormatError("arrow '" + name + "' has unknown endpoint");
  ArrId id = static_cast<ArrId>(c_.arr_names_.size());
  if (!c_.arr_index_.emplace(name, id).second) throw FormatError("duplicate arrow '" + name + "'");
  c_.arr_names_.push_back(name);
  c_.dom_.push_back(dom);
  c_.cod_.push_back(cod);
  return id;
}

void FinCategory::Builder::set_identity(ObjId x, ArrId a) {
  if (x >= num_objects() || a >= num_arrows()) throw FormatError("identity refers to unknown id");
  if (c_.dom_[a] != x || c_.cod_[a] != x)
    throw FormatError("identity '" + c_.arr_names_[a] + "' is not an endo-arrow of '" +
                      c_.obj_names_[x] + "'");
  if (c_.ident_[x] != kNoArrow && c_.ident_[x] != a)
    throw FormatError("second identity for '" + c_.obj_names_[x] + "'");
  c_.ident_[x] = a;
}

void FinCategory::Builder::set_top(ObjId x, ArrId a) { tops_.push_back({x, a}); }

std::optional<ObjId> FinCategory::Builder::find_obj(const std::string& n) const {
  return c_.find_obj(n);
}
std::optional<ArrId> FinCategory::Builder::find_arr(const std::string& n) const {
  return c_.find_arr(n);
}

void FinCategory::Builder::ensure_tables() {
  if (tables_ready_) return;
  const std::size_t n = num_objects();
  c_.homs_.assign(n * n, {});
  c_.local_.resize(num_arrows());
  for (ArrId a = 0; a < num_arrows(); ++a) {
    auto& h = c_.homs_[c_.dom_[a] * n + c_.cod_[a]];
    c_.local_[a] = static_cast<std::uint32_t>(h.size());
    h.push_back(a);
  }
  std::size_t total = 0;
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ObjId z = 0; z < n; ++z) total += c_.homs_[x * n + y].size() * c_.homs_[y * n + z].size();
  if (total > cap_)
    throw CapExceeded("composition table needs " + std::to_string(total) +
                      " entries, cap is " + std::to_string(cap_));
  c_.comp_.assign(n * n * n, {});
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ObjId z = 0; z < n; ++z)
        c_.comp_[(x * n + y) * n + z].assign(c_.homs_[x * n + y].size() * c_.homs_[y * n + z].size(),
                                             kNoLocal);
  tables_ready_ = true;
}

std::uint32_t* FinCategory::Builder::slot(ArrId g, ArrId f) {
  const std::size_t n = num_objects();
  ObjId x = c_.dom_[f], y = c_.cod_[f], z = c_.cod_[g];
  auto& b = c_.comp_[(x * n + y) * n + z];
  return &b[static_cast<std::size_t>(c_.local_[g]) * c_.homs_[x * n + y].size() + c_.local_[f]];
}

void FinCategory::Builder::set_compose(ArrId g, ArrId f, ArrId h, std::size_t line) {
  ensure_tables();
  if (g >= num_arrows() || f >= num_arrows() || h >= num_arrows())
    throw FormatError("composition refers to unknown arrow", line);
  if (c_.cod_[f] != c_.dom_[g])
    throw FormatError("composition of non-composable arrows " + c_.arr_names_[g] + " . " +
                          c_.arr_names_[f],
                      line);
  if (c_.dom_[h] != c_.dom_[f] || c_.cod_[h] != c_.cod_[g])
    throw FormatError("composite " + c_.arr_names_[h] + " has the wrong type", line);
  std::uint32_t* s = slot(g, f);
  if (*s != kNoLocal && *s != c_.local_[h])
    throw FormatError("contradictory composition for " + c_.arr_names_[g] + " . " +
                          c_.arr_names_[f],
                      line);
  *s = c_.local_[h];
}

void FinCategory::Builder::compose_with(const std::function<ArrId(ArrId, ArrId)>& fn) {
  ensure_tables();
  const std::size_t n = num_objects();
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ArrId f : c_.homs_[x * n + y])
        for (ObjId z = 0; z < n; ++z)
          for (ArrId g : c_.homs_[y * n + z]) set_compose(g, f, fn(g, f));
}

FinCategory FinCategory::Builder::build() {
  ensure_tables();
  const std::size_t n = num_objects();
  if (n == 0) throw FormatError("category has no objects");
  for (ObjId x = 0; x < n; ++x) {
    if (c_.ident_[x] == kNoArrow)
      throw FormatError("object '" + c_.obj_names_[x] + "' has no identity");
  }
  for (ArrId f = 0; f < num_arrows(); ++f) {
    std::uint32_t* a = slot(c_.ident_[c_.cod_[f]], f);
    if (*a == kNoLocal) *a = c_.local_[f];
    std::uint32_t* b = slot(f, c_.ident_[c_.dom_[f]]);
    if (*b == kNoLocal) *b = c_.local_[f];
  }
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ObjId z = 0; z < n; ++z) {
        const auto& b = c_.comp_[(x * n + y) * n + z];
        for (std::size_t i = 0; i < b.size(); ++i) {
          if (b[i] != kNoLocal) continue;
          const auto& hxy = c_.homs_[x * n + y];
          ArrId f = hxy[i % hxy.size()];
          ArrId g = c_.homs_[y * n + z][i / hxy.size()];
          throw FormatError("missing composition " + c_.arr_names_[g] + " . " + c_.arr_names_[f]);
        }
      }
  auto typed = [&](ArrId a, ObjId d, ObjId c) {
    return a < num_arrows() && c_.dom_[a] == d && c_.cod_[a] == c;
  };
  for (const auto& cp : coproducts_) {
    if (cp.left >= n || cp.right >= n || cp.apex >= n || !typed(cp.k1, cp.left, cp.apex) ||
        !typed(cp.k2, cp.right, cp.apex))
      throw FormatError("ill-typed coproduct annotation");
    c_.add_coproduct(cp);
  }
  if (final_ && *final_ >= n) throw FormatError("final object unknown");
  if (initial_ && *initial_ >= n) throw FormatError("initial object unknown");
  if (unit_ && *unit_ >= n) throw FormatError("unit object unknown");
  c_.final_ = final_;
  c_.initial_ = initial_;
  c_.unit_ = unit_;
  if (!tops_.empty()) {
    if (!unit_) throw FormatError("top given without unit object");
    c_.tops_.assign(n, kNoArrow);
    for (auto [x, a] : tops_) {
      if (!typed(a, x, *unit_))
        throw FormatError("top for '" + c_.obj_names_[x] + "' is not an arrow into the unit");
      if (c_.tops_[x] != kNoArrow && c_.tops_[x] != a) throw FormatError("two tops for one object");
      c_.tops_[x] = a;
    }
  }
  return std::move(c_);
}

}  // namespace liftcat
