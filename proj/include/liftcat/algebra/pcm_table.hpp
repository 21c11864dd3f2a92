#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace liftcat {

using Elem = std::uint32_t;

// Finite PCM given by an explicit partial-sum table; optionally a top and a
// (total) multiplication table.
class PcmTable {
 public:
  PcmTable() = default;
  explicit PcmTable(std::vector<std::string> names, Elem zero = 0);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Elem e) const;
  const std::vector<std::string>& names() const { return names_; }
  Elem elem(const std::string& name) const;
  bool has(const std::string& name) const { return index_.count(name) != 0; }

  Elem zero() const { return zero_; }
  void set_zero(Elem z);
  std::optional<Elem> one() const { return one_; }
  void set_one(Elem o);
  void clear_one() { one_.reset(); }

  std::optional<Elem> sum(Elem a, Elem b) const;
  // Sets both (a,b) and (b,a).
  void set_sum(Elem a, Elem b, Elem c);
  // Sets only (a,b); used to build deliberately non-commutative tables.
  void set_sum_one_sided(Elem a, Elem b, std::optional<Elem> c);
  void clear_sum(Elem a, Elem b);
  // Adds a + 0 = a for every a.
  void add_unit_sums();

  bool has_mul() const { return !mul_.empty(); }
  Elem mul(Elem a, Elem b) const;
  void set_mul(Elem a, Elem b, Elem c);
  void enable_mul(Elem fill);

  bool le(Elem a, Elem b) const;
  std::size_t defined_sums() const;

  bool operator==(const PcmTable& o) const {
    return names_ == o.names_ && zero_ == o.zero_ && one_ == o.one_ && sum_ == o.sum_ &&
           mul_ == o.mul_;
  }

 private:
  void check(Elem e) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, Elem> index_;
  Elem zero_ = 0;
  std::optional<Elem> one_;
  std::vector<std::optional<Elem>> sum_;
  std::vector<Elem> mul_;
};

// Algebra adaptor over a table, for the generic law checkers.
class TableAlgebra {
 public:
  using value_type = Elem;
  static constexpr bool has_division = false;

  explicit TableAlgebra(const PcmTable& t) : t_(&t) {}
  const PcmTable& table() const { return *t_; }

  Elem zero() const { return t_->zero(); }
  bool has_one() const { return t_->one().has_value(); }
  Elem one() const;
  std::optional<Elem> sum(Elem a, Elem b) const { return t_->sum(a, b); }
  bool le(Elem a, Elem b) const { return t_->le(a, b); }
  // Unique z with a + z = b; StructureError if several.
  std::optional<Elem> ominus(Elem b, Elem a) const;
  Elem ocomp(Elem a) const;
  Elem mul(Elem a, Elem b) const { return t_->mul(a, b); }
  std::vector<Elem> elements() const;
  std::string show(Elem e) const { return t_->name(e); }

 private:
  const PcmTable* t_;
};

// Helpers over any algebra.
template <class A>
std::optional<typename A::value_type> pcm_sum(const A& a, const typename A::value_type& x,
                                              const typename A::value_type& y) {
  return a.sum(x, y);
}
template <class A>
std::optional<typename A::value_type> ominus(const A& a, const typename A::value_type& b,
                                            const typename A::value_type& x) {
  return a.ominus(b, x);
}
template <class A>
typename A::value_type ocomp(const A& a, const typename A::value_type& x) {
  return a.ocomp(x);
}

}  // namespace liftcat
