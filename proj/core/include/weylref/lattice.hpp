#pragma once

#include <optional>
#include <vector>

#include "weylref/root_system.hpp"

namespace weylref {

enum class LatticeKind { Coroot, Coweight, Intermediate };

struct LatticeData {
  LatticeKind kind = LatticeKind::Intermediate;
  std::vector<Vector> basis;
};

// Q (simple coroots) and P (fundamental coweights) together with
// [P:Q], which is checked against det(Cartan).
struct LatticePair {
  LatticeData coroot;
  LatticeData coweight;
  Int index;
};

LatticeData coroot_lattice(const RootSystem& rs);
LatticeData coweight_lattice(const RootSystem& rs);
LatticePair lattices(const RootSystem& rs);

// The point with <omega_j, alpha_i> = delta_ij.
Vector fundamental_coweight(const RootSystem& rs, int j);
Int cartan_determinant(const RootSystem& rs);

// Coordinates of v in the lattice basis, nullopt if v is outside its span.
std::optional<RatVec> lattice_coordinates(const LatticeData& lat, const Vector& v);
bool lattice_membership(const LatticeData& lat, const Vector& v);
// Representative of v + L with basis coordinates in [0, 1).
Vector coset_reduce(const LatticeData& lat, const Vector& v);

}  // namespace weylref
