#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liftcat/fincat/category.hpp"
#include "liftcat/fincat/kernels.hpp"
#include "liftcat/report.hpp"

namespace liftcat {

Report check_category(const FinCategory& c, Exec ex = Exec::parallel);

bool verify_final(const FinCategory& c, ObjId t);
bool verify_initial(const FinCategory& c, ObjId t);
// Every target Z and family (f1, f2) has exactly one mediator.
Report verify_coproduct(const FinCategory& c, const Coproduct& w, Exec ex = Exec::parallel);
// All chosen coproducts plus initial/final annotations.
Report verify_annotations(const FinCategory& c, Exec ex = Exec::parallel);

// The unique h : apex -> Z with h.k1 = f1 and h.k2 = f2.
ArrId derive_cotuple(const FinCategory& c, const Coproduct& w, ArrId f1, ArrId f2);

// Cotuples into one target, computed in a single sweep.
class CotupleTable {
 public:
  CotupleTable(const FinCategory& c, const Coproduct& w, ObjId z, Exec ex = Exec::parallel);
  // Throws StructureError when the mediator is missing or ambiguous.
  ArrId at(ArrId f1, ArrId f2) const;
  std::uint32_t count(ArrId f1, ArrId f2) const;

 private:
  const FinCategory* c_;
  Coproduct w_;
  ObjId z_;
  MediatorTally t_;
};

// 0_{XY} for each (X,Y), index X * n + Y.
struct ZeroFamily {
  std::size_t n = 0;
  std::vector<ArrId> z;
  ArrId at(ObjId x, ObjId y) const { return z[x * n + y]; }
  bool is_zero(const FinCategory& c, ArrId a) const { return at(c.dom(a), c.cod(a)) == a; }
};

// The unique absorbing family, or none. StructureError if two families exist.
std::optional<ZeroFamily> zero_arrows(const FinCategory& c);

// The unique p with p.k_i = id and p.k_j = 0.
ArrId partial_projection(const FinCategory& c, const Coproduct& w, int i, const ZeroFamily& zero);

bool is_jointly_monic(const FinCategory& c, const std::vector<ArrId>& hs, Exec ex = Exec::parallel);
Report jointly_monic_report(const FinCategory& c, const std::vector<ArrId>& hs,
                            const std::string& suite, Exec ex = Exec::parallel);

// PreconditionError if the square does not commute.
Report is_pullback(const FinCategory& c, const Square& sq, Exec ex = Exec::parallel);

// f + g : A + B -> A' + B' as [k1' . f, k2' . g].
ArrId coproduct_map(const FinCategory& c, const Coproduct& src, const Coproduct& dst, ArrId f,
                    ArrId g);
// [id, id] : X + X -> X.
ArrId codiagonal(const FinCategory& c, const Coproduct& w);
// (A + B) + C -> A + (B + C), built from cotuples.
ArrId associator(const FinCategory& c, const Coproduct& ab, const Coproduct& ab_c,
                 const Coproduct& bc, const Coproduct& a_bc);

std::string arrow_label(const FinCategory& c, ArrId a);

}  // namespace liftcat
