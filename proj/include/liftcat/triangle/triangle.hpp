#pragma once

#include <vector>

#include "liftcat/algebra/pcm_table.hpp"
#include "liftcat/effectus/effectus.hpp"
#include "liftcat/report.hpp"

namespace liftcat {

// Hom(I, I) with composition as multiplication; element i is hom(I, I)[i].
struct ScalarMonoid {
  PcmTable table;
  ObjId unit = 0;
  Report laws;
  ArrId arrow(Elem e, const FinCategory& c) const { return c.hom(unit, unit)[e]; }
};

// StructureError when the effect monoid laws fail.
ScalarMonoid scalars_of(const FpeModel& c);

// (omega |= p) = p . omega
ArrId born(const FpeModel& c, ArrId omega, ArrId p);
// alpha_X(p)(omega) and beta_X(omega)(p); the same composite.
ArrId alpha(const FpeModel& c, ArrId p, ArrId omega);
ArrId beta(const FpeModel& c, ArrId omega, ArrId p);

struct Normalized {
  ArrId state;   // total I -> X
  ArrId scalar;  // Dp(omega)
};
// The unique total state with omega = state . Dp(omega). PreconditionError on
// omega = 0, StructureError when zero or several states qualify.
Normalized normalize(const FpeModel& c, ArrId omega);
// s / t read off the normalization of k1 . s + k2 . (t - s) : I -> I + I.
ArrId division_via_normalization(const FpeModel& c, ArrId s, ArrId t);

// Scalars, Pred/SStat module laws, Born rule transposes and naturality,
// alpha injectivity, normalization and division, all exhaustive.
Report check_triangle(const FpeModel& c, Exec ex = Exec::parallel);

}  // namespace liftcat
