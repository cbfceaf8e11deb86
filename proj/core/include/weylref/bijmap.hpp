#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "weylref/refsub.hpp"

namespace weylref {

// j: (gamma, f) -> (psi, a + X'). With a level bound the result is checked
// against roots_of_gf at that bound.
PsiXPair j_forward(const RootSystem& rs, const GFPair& p, std::optional<std::int64_t> verify_bound = std::nullopt);

// Canonical simple roots of the subgroup attached to (psi, X).
GFDatum j_inverse_minimal(const RootSystem& rs, const PsiXPair& p);

// The lattice data of (psi, X') acting on span(psi).
struct SubAlcoveContext {
  std::shared_ptr<const SubsystemInfo> info;
  AdmissibleLattice xprime;
  LatticeData yprime;
  BigMatrix yprime_coords;      // rows <simple_j, y> for a basis y of Y'
  std::vector<std::int64_t> n;  // hyperplane spacing per ambient root of psi, 0 for zero blocks
};
SubAlcoveContext make_context(const RootSystem& rs, const PsiXPair& p);

// B is contained in {<normal, v> < level}.
struct Wall {
  int normal = -1;  // outward normal
  Rat level;
  bool closed = false;
};

struct LowerClosedAlcove {
  std::vector<int> roots;           // positive roots of psi
  std::vector<std::int64_t> slab;   // aligned with roots
  std::vector<std::int64_t> spacing;
  std::vector<Wall> walls;

  bool contains(const RootSystem& rs, const Vector& v) const;
  bool operator==(const LowerClosedAlcove& o) const { return roots == o.roots && slab == o.slab; }
};

LowerClosedAlcove locate_lower_closure(const RootSystem& rs, const SubAlcoveContext& ctx, const Vector& v);

// Representative of a + X' in the box D.
Vector map_h(const RootSystem& rs, const SubAlcoveContext& ctx, const PsiXPair& p);
// The translate of d by Y' lying in D'.
Vector map_k(const RootSystem& rs, const SubAlcoveContext& ctx, const Vector& d);

struct GTriple {
  GFDatum datum;                // (gamma, f)
  std::vector<int> gamma_prime;
};
GTriple map_g(const RootSystem& rs, const SubAlcoveContext& ctx, const Vector& d);

GFDatum j_inverse_alcove(const RootSystem& rs, const PsiXPair& p);

}  // namespace weylref
