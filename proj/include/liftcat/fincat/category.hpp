#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace liftcat {

using ObjId = std::uint32_t;
using ArrId = std::uint32_t;
inline constexpr ArrId kNoArrow = std::numeric_limits<ArrId>::max();
inline constexpr std::uint32_t kNoLocal = std::numeric_limits<std::uint32_t>::max();

// Chosen binary coproduct left + right = apex with coprojections k1, k2.
struct Coproduct {
  ObjId left, right, apex;
  ArrId k1, k2;
};

// Commuting square: right . top = bottom . left, apex dom(top).
struct Square {
  ArrId top, left, right, bottom;
};

inline constexpr std::size_t kDefaultCap = 40'000'000;

// A finite category stored as dense per-(X,Y,Z) composition blocks.
class FinCategory {
 public:
  class Builder;

  std::size_t num_objects() const { return obj_names_.size(); }
  std::size_t num_arrows() const { return arr_names_.size(); }
  const std::string& obj_name(ObjId x) const { return obj_names_.at(x); }
  const std::string& arr_name(ArrId a) const { return arr_names_.at(a); }
  const std::vector<std::string>& obj_names() const { return obj_names_; }
  ObjId obj(const std::string& name) const;
  ArrId arr(const std::string& name) const;
  std::optional<ObjId> find_obj(const std::string& name) const;
  std::optional<ArrId> find_arr(const std::string& name) const;

  ObjId dom(ArrId a) const { return dom_[a]; }
  ObjId cod(ArrId a) const { return cod_[a]; }
  ArrId id(ObjId x) const { return ident_[x]; }
  const std::vector<ArrId>& hom(ObjId x, ObjId y) const { return homs_[x * num_objects() + y]; }
  std::uint32_t local(ArrId a) const { return local_[a]; }

  // g . f; InputError when cod(f) != dom(g).
  ArrId compose(ArrId g, ArrId f) const;
  ArrId compose(std::initializer_list<ArrId> chain) const;  // left to right is outer to inner
  // Local index of (g . f) in hom(x, z) from local indices.
  std::uint32_t compose_local(ObjId x, ObjId y, ObjId z, std::uint32_t g, std::uint32_t f) const {
    const auto& b = comp_[(x * num_objects() + y) * num_objects() + z];
    return b[static_cast<std::size_t>(g) * hom(x, y).size() + f];
  }
  std::size_t composition_entries() const;

  const std::vector<Coproduct>& coproducts() const { return coproducts_; }
  const Coproduct* coproduct(ObjId l, ObjId r) const;
  std::optional<ObjId> final_object() const { return final_; }
  std::optional<ObjId> initial_object() const { return initial_; }
  std::optional<ObjId> unit_object() const { return unit_; }
  // 1_X for each X, kNoArrow where absent.
  const std::vector<ArrId>& tops() const { return tops_; }
  bool has_tops() const;

  void set_final(std::optional<ObjId> t) { final_ = t; }
  void set_unit(std::optional<ObjId> u) { unit_ = u; }
  void set_tops(std::vector<ArrId> t) { tops_ = std::move(t); }
  void add_coproduct(const Coproduct& c);

 private:
  std::vector<std::string> obj_names_, arr_names_;
  std::unordered_map<std::string, ObjId> obj_index_;
  std::unordered_map<std::string, ArrId> arr_index_;
  std::vector<ObjId> dom_, cod_;
  std::vector<ArrId> ident_;
  std::vector<std::uint32_t> local_;
  std::vector<std::vector<ArrId>> homs_;
  std::vector<std::vector<std::uint32_t>> comp_;
  std::vector<Coproduct> coproducts_;
  std::optional<ObjId> final_, initial_, unit_;
  std::vector<ArrId> tops_;
};

class FinCategory::Builder {
 public:
  explicit Builder(std::size_t cap = kDefaultCap) : cap_(cap) {}

  ObjId add_object(const std::string& name);
  ArrId add_arrow(const std::string& name, ObjId dom, ObjId cod);
  void set_identity(ObjId x, ArrId a);
  // Records g . f = h; contradictions are format errors.
  void set_compose(ArrId g, ArrId f, ArrId h, std::size_t line = 0);
  // Fills every composable pair from a function (called after all arrows exist).
  void compose_with(const std::function<ArrId(ArrId g, ArrId f)>& fn);

  void add_coproduct(const Coproduct& c) { coproducts_.push_back(c); }
  void set_final(ObjId t) { final_ = t; }
  void set_initial(ObjId t) { initial_ = t; }
  void set_unit(ObjId u) { unit_ = u; }
  void set_top(ObjId x, ArrId a);

  std::size_t num_objects() const { return c_.obj_names_.size(); }
  std::size_t num_arrows() const { return c_.arr_names_.size(); }
  std::optional<ObjId> find_obj(const std::string& n) const;
  std::optional<ArrId> find_arr(const std::string& n) const;
  ObjId dom(ArrId a) const { return c_.dom_.at(a); }
  ObjId cod(ArrId a) const { return c_.cod_.at(a); }

  // Validates identities and completeness of the table; identity
  // compositions are inferred when not listed.
  FinCategory build();

 private:
  void ensure_tables();
  std::uint32_t* slot(ArrId g, ArrId f);

  FinCategory c_;
  std::size_t cap_;
  bool tables_ready_ = false;
  std::vector<Coproduct> coproducts_;
  std::optional<ObjId> final_, initial_, unit_;
  std::vector<std::pair<ObjId, ArrId>> tops_;
};

}  // namespace liftcat
