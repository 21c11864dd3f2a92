#include "liftcat/algebra/pcm_table.hpp"

#include "liftcat/error.hpp"

namespace liftcat {

PcmTable::PcmTable(std::vector<std::string> names, Elem zero) : names_(std::move(names)) {
  for (Elem i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second)
      throw InputError("duplicate element '" + names_[i] + "'");
  }
  sum_.assign(names_.size() * names_.size(), std::nullopt);
  if (!names_.empty()) set_zero(zero);
}

void PcmTable::check(Elem e) const {
  if (e >= names_.size()) throw InputError("unknown element id " + std::to_string(e));
}

const std::string& PcmTable::name(Elem e) const {
  check(e);
  return names_[e];
}

Elem PcmTable::elem(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw InputError("unknown element '" + name + "'");
  return it->second;
}

void PcmTable::set_zero(Elem z) {
  check(z);
  zero_ = z;
}

void PcmTable::set_one(Elem o) {
  check(o);
  one_ = o;
}

std::optional<Elem> PcmTable::sum(Elem a, Elem b) const {
  check(a);
  check(b);
  return sum_[a * names_.size() + b];
}

void PcmTable::set_sum(Elem a, Elem b, Elem c) {
  check(a);
  check(b);
  check(c);
  sum_[a * names_.size() + b] = c;
  sum_[b * names_.size() + a] = c;
}

void PcmTable::set_sum_one_sided(Elem a, Elem b, std::optional<Elem> c) {
  check(a);
  check(b);
  if (c) check(*c);
  sum_[a * names_.size() + b] = c;
}

void PcmTable::clear_sum(Elem a, Elem b) {
  check(a);
  check(b);
  sum_[a * names_.size() + b].reset();
  sum_[b * names_.size() + a].reset();
}

void PcmTable::add_unit_sums() {
  for (Elem a = 0; a < names_.size(); ++a) set_sum(a, zero_, a);
}

Elem PcmTable::mul(Elem a, Elem b) const {
  check(a);
  check(b);
  if (mul_.empty()) throw StructureError("table has no multiplication");
  return mul_[a * names_.size() + b];
}

void PcmTable::enable_mul(Elem fill) {
  check(fill);
  mul_.assign(names_.size() * names_.size(), fill);
}

void PcmTable::set_mul(Elem a, Elem b, Elem c) {
  check(a);
  check(b);
  check(c);
  if (mul_.empty()) enable_mul(zero_);
  mul_[a * names_.size() + b] = c;
}

bool PcmTable::le(Elem a, Elem b) const {
  check(a);
  check(b);
  for (Elem z = 0; z < names_.size(); ++z) {
    if (sum_[a * names_.size() + z] == b) return true;
  }
  return false;
}

std::size_t PcmTable::defined_sums() const {
  std::size_t n = 0;
  for (const auto& s : sum_) n += s.has_value();
  return n;
}

Elem TableAlgebra::one() const {
  if (!t_->one()) throw StructureError("table has no top element");
  return *t_->one();
}

std::optional<Elem> TableAlgebra::ominus(Elem b, Elem a) const {
  std::optional<Elem> found;
  for (Elem z = 0; z < t_->size(); ++z) {
    if (t_->sum(a, z) == b) {
      if (found)
        throw StructureError("partial difference not unique",
                             {t_->name(b) + " - " + t_->name(a), t_->name(*found), t_->name(z)});
      found = z;
    }
  }
  return found;
}

Elem TableAlgebra::ocomp(Elem a) const {
  Elem top = one();
  auto z = ominus(top, a);
  if (!z) throw StructureError("no orthocomplement", {t_->name(a)});
  return *z;
}

std::vector<Elem> TableAlgebra::elements() const {
  std::vector<Elem> v(t_->size());
  for (Elem i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

}  // namespace liftcat

#include "liftcat/algebra/laws.hpp"

namespace liftcat {

const char* to_string(Level l) {
  switch (l) {
    case Level::pcm: return "pcm";
    case Level::gea: return "gea";
    case Level::ea: return "ea";
    case Level::emonoid: return "emonoid";
  }
  return "?";
}

Level parse_level(const std::string& s) {
  if (s == "pcm") return Level::pcm;
  if (s == "gea") return Level::gea;
  if (s == "ea") return Level::ea;
  if (s == "emonoid") return Level::emonoid;
  throw InputError("unknown level '" + s + "'");
}

}  // namespace liftcat
