#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "liftcat/effectus/effectus.hpp"
#include "liftcat/report.hpp"

namespace liftcat {

inline constexpr std::uint32_t kUndefined = std::numeric_limits<std::uint32_t>::max();

// Finite sets {0..n-1} with all (partial) functions between them.
struct FunctionModel {
  CatPtr cat;
  bool partial = false;
  std::vector<std::uint32_t> sizes;             // per object
  std::vector<std::vector<std::uint32_t>> fn;   // per arrow, kUndefined where not defined

  ObjId object_of_size(std::uint32_t n) const;
  // Arrow X -> Y with the given values.
  ArrId find(ObjId x, ObjId y, const std::vector<std::uint32_t>& values) const;
};

// Total functions; final = size 1, initial = size 0, coproduct a + b = a+b
// whenever that size is listed.
FunctionModel build_finset(const std::vector<std::uint32_t>& sizes, std::size_t cap = kDefaultCap);
// Partial functions; unit = size 1 with the total arrows as tops.
FunctionModel build_pfn(const std::vector<std::uint32_t>& sizes, std::size_t cap = kDefaultCap);

// The enrichment derived from bounds, with unit and tops of the model.
FpeModel pfn_fpe(const FunctionModel& pfn, Exec ex = Exec::parallel);
// f + g defined iff the domains are disjoint, and then the union.
Report check_pfn_sum_oracle(const FunctionModel& pfn, const FinPacStructure& s);

// Kl_L(FinSet) -> Pfn: the second summand of Y + 1 becomes "undefined".
FunctorData kleisli_to_pfn(const KleisliModel& kl, const FunctionModel& finset, const FunctionModel& pfn);
// Iso check plus agreement of the hom-PCMs along the functor.
Report check_kleisli_pfn_iso(const KleisliModel& kl, const FunctionModel& finset,
                             const FunctionModel& pfn, const FpeModel& pfn_model, Exec ex = Exec::parallel);

// Reverses every set: f |-> r . f . r. Preserves 1 and coproducts up to
// iso, but not the chosen coprojections.
FunctorData reversal_functor(const FunctionModel& m);

// Pfn against 0/1 matrices over the Boolean monoid: bijection per hom,
// identities, composition and sums.
Report check_boolean_matrix_iso(const FunctionModel& pfn, const FpeModel& pfn_model);
// FinSet against total 0/1 matrices over the rationals.
Report check_deterministic_embedding(const FunctionModel& finset);

// Sizes parsed from "0,1,2".
std::vector<std::uint32_t> parse_sizes(const std::string& s);

}  // namespace liftcat
