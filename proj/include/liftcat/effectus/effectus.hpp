#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liftcat/fincat/category.hpp"
#include "liftcat/fincat/functor.hpp"
#include "liftcat/fincat/kernels.hpp"
#include "liftcat/finpac/finpac.hpp"
#include "liftcat/report.hpp"

namespace liftcat {

// A category read as an effectus candidate; `final` is the object playing 1.
struct EffectusModel {
  CatPtr cat;
  ObjId final;
};

// The annotated final object, else the unit object, else the first object
// that is final. PreconditionError when there is no candidate at all.
EffectusModel effectus_model(CatPtr cat);

// (E) squares, (K=) squares and the ternary joint monicity, over every
// instantiation whose coproducts are chosen in the model.
Report check_effectus(const FinCategory& b, Exec ex = Exec::parallel);

// FinPAC with a unit object and a top in every Hom(X, I).
class FpeModel {
 public:
  FpeModel() = default;
  FpeModel(FinPacStructure pac, ObjId unit, std::vector<ArrId> tops);

  const FinCategory& cat() const { return pac_.cat(); }
  const CatPtr& cat_ptr() const { return pac_.cat_ptr(); }
  const FinPacStructure& pac() const { return pac_; }
  ObjId unit() const { return unit_; }
  const std::vector<ArrId>& tops() const { return tops_; }
  ArrId top(ObjId x) const { return tops_.at(x); }
  ArrId zero(ObjId x, ObjId y) const { return pac_.zero(x, y); }

  // Dp(f) = 1_Y . f
  ArrId dp(ArrId f) const;
  bool is_total(ArrId f) const { return dp(f) == top(cat().dom(f)); }
  // Orthocomplement in Hom(X, I).
  ArrId pred_complement(ArrId p) const;

  // Hom-PCMs, with the top recorded on each Hom(X, I).
  std::vector<HomPcm> hom_pcms() const;

 private:
  FinPacStructure pac_;
  ObjId unit_ = 0;
  std::vector<ArrId> tops_;
};

// Unit and tops from the annotations; tables supplied or derived. Without
// top annotations each Hom(X, I) gets its greatest element.
FpeModel fpe_from_parsed(const ParsedModel& m, Exec ex = Exec::parallel);

Report check_fpe(const FpeModel& c, Exec ex = Exec::parallel);

ArrId dp(const FpeModel& c, ArrId f);
bool is_total(const FpeModel& c, ArrId f);

// f_i = p_i . f with the domain-predicate bookkeeping.
struct DpDecomposition {
  std::vector<ArrId> parts;
  std::vector<ArrId> dps;
  ArrId dp_sum;
  bool total;
};
DpDecomposition decompose_with_dp(const FpeModel& c, const NaryCoproduct& w, ArrId f);
// Inverse direction: the unique f with p_i . f = f_i. PreconditionError when
// the domain predicates are not orthogonal.
ArrId recompose_with_dp(const FpeModel& c, const NaryCoproduct& w, const std::vector<ArrId>& parts);

// Kl_L(B) together with its bookkeeping against B.
struct KleisliModel {
  FpeModel fpe;
  CatPtr base;
  ObjId base_final;
  std::vector<ObjId> obj_under;  // Kl object -> B object
  std::vector<ObjId> obj_back;   // B object -> Kl object, kNoObj when absent
  std::vector<ArrId> under;      // Kl arrow -> B arrow X -> Y + 1
  Report derivation;

  const FinCategory& cat() const { return fpe.cat(); }
  // The Kl arrow X -> Y carried by the B arrow b : X -> Y + 1.
  ArrId from_base(ArrId b, ObjId kl_y) const;
  // kappa_1 . f for f : X -> Y in B, both ends in Kl.
  ArrId lift(ArrId f) const;
};

inline constexpr ObjId kNoObj = static_cast<ObjId>(-1);

// Only the category, for inspection when the enrichment does not derive.
struct KleisliCategory {
  CatPtr cat;
  std::vector<ObjId> obj_under, obj_back;
  std::vector<ArrId> under;
  std::uint64_t dropped_objects = 0;
};
KleisliCategory kleisli_category(const EffectusModel& b, Exec ex = Exec::parallel);
// StructureError carrying the first witness if the enrichment fails.
KleisliModel kleisli_lift(const EffectusModel& b, Exec ex = Exec::parallel);

// Faithfulness of kappa, (K) squares in B, zero arrows, joint monicity of the
// partial projections and the pullback for total arrows in Kl.
Report check_kleisli_basics(const KleisliModel& k, Exec ex = Exec::parallel);

// Wide subcategory of total arrows with I as final object.
Subcategory tot_subcategory(const FpeModel& c);

// Full subcategory of B on the objects that survive in Kl_L(B).
Subcategory kleisli_domain(const KleisliModel& k);

struct RoundTripB {
  KleisliModel kl;
  Subcategory domain;  // B restricted to Kl objects
  Subcategory tot;     // Tot(Kl_L(B))
  FunctorData phi;     // domain -> tot
  Report report;
};
RoundTripB roundtrip_b(const EffectusModel& b, Exec ex = Exec::parallel);

struct RoundTripC {
  Subcategory tot;  // Tot(C)
  KleisliModel kl;  // Kl_L(Tot(C))
  Subcategory image;  // C restricted to Kl objects
  FunctorData psi;    // kl -> image
  std::vector<ArrId> inverse;  // image arrow -> kl arrow
  Report report;
};
RoundTripC roundtrip_c(const FpeModel& c, Exec ex = Exec::parallel);

// Kl_L(F) for F : B1 -> B2 between effectuses.
struct LiftedFunctor {
  FunctorData data;      // Kl(B1) -> Kl(B2)
  std::vector<ArrId> l;  // per Kl(B1) object X: l_{F,X} : F(X+1) -> FX+1 in B2
  Report report;
};
LiftedFunctor lift_functor(const FunctorData& f, const EffectusModel& b1, const KleisliModel& k1,
                           const EffectusModel& b2, const KleisliModel& k2,
                           Exec ex = Exec::parallel);
// l_{GF,X} = l_{G,FX} . G l_{F,X} and Kl(GF) = Kl(G) Kl(F).
Report check_lift_composition(const FunctorData& f, const FunctorData& g, const LiftedFunctor& lf,
                              const LiftedFunctor& lg, const LiftedFunctor& lgf,
                              const KleisliModel& k1, const KleisliModel& k2,
                              const EffectusModel& b3);

// Restriction of F : C1 -> C2 to total arrows. PreconditionError when truth
// is not preserved.
struct TotFunctor {
  FunctorData data;  // Tot(C1) -> Tot(C2)
  Report report;
};
TotFunctor tot_functor(const FunctorData& f, const FpeModel& c1, const Subcategory& t1,
                       const FpeModel& c2, const Subcategory& t2, Exec ex = Exec::parallel);

// Psi_{Kl B} . Kl(Phi_B) agrees with the identity on Kl(domain).
Report check_roundtrip_coherence(const RoundTripB& rb, Exec ex = Exec::parallel);

}  // namespace liftcat
