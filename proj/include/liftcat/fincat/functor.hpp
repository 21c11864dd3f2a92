#pragma once

#include <functional>
#include <vector>

#include "liftcat/fincat/category.hpp"
#include "liftcat/fincat/kernels.hpp"
#include "liftcat/report.hpp"

namespace liftcat {

struct FunctorData {
  std::vector<ObjId> obj;
  std::vector<ArrId> arr;
};

struct FunctorChecks {
  bool final = false;
  bool coproducts = false;
};

// Typing, identities and composition; optionally preservation of the final
// object and of every chosen coproduct (image must again be a coproduct).
Report check_functor(const FunctorData& f, const FinCategory& c, const FinCategory& d,
                     FunctorChecks checks = {}, Exec ex = Exec::parallel);
// Functor that is bijective on objects and arrows.
Report check_isomorphism(const FunctorData& f, const FinCategory& c, const FinCategory& d,
                         Exec ex = Exec::parallel);

FunctorData identity_functor(const FinCategory& c);
// g after f.
FunctorData compose_functors(const FunctorData& g, const FunctorData& f);

struct Subcategory {
  FinCategory cat;
  FunctorData inclusion;
  std::vector<ArrId> back;  // parent arrow -> sub arrow, kNoArrow if dropped
  std::vector<ObjId> back_obj;
};

// Objects with keep_obj set, arrows between them passing keep_arr. The
// selection must contain identities and be closed under composition.
// Annotations survive when all their parts survive.
Subcategory subcategory(const FinCategory& c, const std::vector<bool>& keep_obj,
                        const std::function<bool(ArrId)>& keep_arr);

}  // namespace liftcat
