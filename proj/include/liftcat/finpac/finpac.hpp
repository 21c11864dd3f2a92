#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liftcat/algebra/pcm_table.hpp"
#include "liftcat/fincat/category.hpp"
#include "liftcat/fincat/format.hpp"
#include "liftcat/fincat/kernels.hpp"
#include "liftcat/fincat/universal.hpp"
#include "liftcat/report.hpp"

namespace liftcat {

using CatPtr = std::shared_ptr<const FinCategory>;

// Hom-PCMs over a category with zero arrows. Table elements are local arrow
// indices. Homs without a table had no chosen Y + Y to derive one from.
class FinPacStructure {
 public:
  FinPacStructure() = default;
  FinPacStructure(CatPtr cat, ZeroFamily zero);

  const FinCategory& cat() const { return *cat_; }
  const CatPtr& cat_ptr() const { return cat_; }
  const ZeroFamily& zero() const { return zero_; }
  ArrId zero(ObjId x, ObjId y) const { return zero_.at(x, y); }
  bool is_zero(ArrId a) const { return zero_.is_zero(*cat_, a); }

  bool has_table(ObjId x, ObjId y) const { return hom_[x * n() + y].has_value(); }
  const PcmTable& table(ObjId x, ObjId y) const;
  void set_table(ObjId x, ObjId y, PcmTable t);

  // f + g, or nullopt when not orthogonal. StructureError without a table.
  std::optional<ArrId> sum(ArrId f, ArrId g) const;
  bool orthogonal(ArrId f, ArrId g) const { return sum(f, g).has_value(); }
  // Iterated left-to-right sum of a family with a common hom.
  std::optional<ArrId> sum_all(const std::vector<ArrId>& fs) const;

  // Registered bound for (f, g), kNoArrow when none was derived.
  ArrId bound(ArrId f, ArrId g) const;
  void set_bounds(ObjId x, ObjId y, std::vector<ArrId> b) { bounds_[x * n() + y] = std::move(b); }

  // Partial projections of the chosen coproduct, cached.
  std::pair<ArrId, ArrId> projections(const Coproduct& w) const;

  std::vector<HomPcm> hom_pcms() const;

 private:
  std::size_t n() const { return cat_->num_objects(); }

  CatPtr cat_;
  ZeroFamily zero_;
  std::vector<std::optional<PcmTable>> hom_;
  std::vector<std::vector<ArrId>> bounds_;
  std::vector<std::pair<ArrId, ArrId>> proj_;
};

std::vector<ArrId> find_bounds(const FinCategory& c, const ZeroFamily& z, ArrId f, ArrId g);

struct Derivation {
  std::optional<FinPacStructure> pac;
  Report report;
};

// f orthogonal g iff a bound b : X -> Y + Y exists; f + g = codiagonal . b.
Derivation try_derive_enrichment(const CatPtr& c, Exec ex = Exec::parallel);
FinPacStructure derive_enrichment(const CatPtr& c, Exec ex = Exec::parallel);

// Structure with user-supplied hom tables (zero arrows still derived).
FinPacStructure with_tables(const CatPtr& c, const std::vector<HomPcm>& homs);

Report check_hom_pcms(const FinPacStructure& s);
Report check_bihomomorphism(const FinPacStructure& s);
Report check_finpac_axioms(const FinPacStructure& s, Exec ex = Exec::parallel);
// Joint monicity of the partial projections and the pullback of the bound square,
// cross-validated against the axiomatic checker on the derived enrichment.
Report check_characterization(const CatPtr& c, Exec ex = Exec::parallel);

// n-fold chosen coproduct ((Y1 + Y2) + Y3) ... with composite coprojections.
struct NaryCoproduct {
  std::vector<ObjId> summands;
  ObjId apex;
  std::vector<ArrId> kappa;
  std::vector<Coproduct> chain;  // inner to outer
};

std::optional<NaryCoproduct> nary_coproduct(const FinCategory& c, const std::vector<ObjId>& ys);
ArrId nary_cotuple(const FinCategory& c, const NaryCoproduct& w, const std::vector<ArrId>& fs);
std::vector<ArrId> nary_projections(const FinPacStructure& s, const NaryCoproduct& w);
// f_i = p_i . f, with the re-sum checked against f when the table exists.
std::vector<ArrId> nary_decompose(const FinPacStructure& s, const NaryCoproduct& w, ArrId f);
Report check_nary_axioms(const FinPacStructure& s, std::size_t nmax = 3);
Report compare_enrichments(const FinPacStructure& a, const FinPacStructure& b);

}  // namespace liftcat
