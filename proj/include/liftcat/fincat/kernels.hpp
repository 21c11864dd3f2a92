#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "liftcat/fincat/category.hpp"

namespace liftcat {

// serial is the reference; parallel must return identical results.
enum class Exec { serial, parallel };

inline constexpr std::size_t kKernelKeep = 16;

struct AssocViolation {
  ArrId h, g, f;
  bool operator==(const AssocViolation&) const = default;
};

struct AssocResult {
  std::uint64_t triples = 0;
  std::uint64_t violations = 0;
  std::vector<AssocViolation> first;  // enumeration order, at most kKernelKeep
  bool operator==(const AssocResult&) const = default;
};

AssocResult find_assoc_violations(const FinCategory& c, Exec ex);

// Cone (u: Z -> R, v: Z -> L) over a cospan with `mediators` arrows Z -> P.
struct BadCone {
  ArrId u, v;
  std::uint32_t mediators;
  bool operator==(const BadCone&) const = default;
};

struct ConeTally {
  std::uint64_t cones = 0;
  std::uint64_t bad = 0;
  std::vector<BadCone> first;
  bool operator==(const ConeTally&) const = default;
};

// Counts mediating arrows Z -> dom(sq.top) for every cone from Z.
ConeTally tally_pullback_cones(const FinCategory& c, const Square& sq, ObjId z, Exec ex);

// First pair f < g : Z -> A with hs[k] . f = hs[k] . g for all k.
std::optional<std::pair<ArrId, ArrId>> find_monic_collision(const FinCategory& c,
                                                            const std::vector<ArrId>& hs,
                                                            ObjId z, Exec ex);

// For a binary coproduct and target Z: mediator counts per pair (f1, f2).
// Entry index is local(f1) * |hom(right, Z)| + local(f2).
struct MediatorTally {
  std::vector<std::uint32_t> count;
  std::vector<ArrId> witness;  // some mediator, kNoArrow when none
};

MediatorTally tally_mediators(const FinCategory& c, const Coproduct& w, ObjId z, Exec ex);

}  // namespace liftcat
