#pragma once

#include <memory>
#include <vector>

#include "weylref/finsub.hpp"

namespace weylref {

// Derived data for a subsystem psi: canonical simple system, components
// and coordinates of every root of psi in that simple system.
struct SubsystemInfo {
  int ambient_rank = 0;
  RootSubset psi;
  std::vector<int> simple;                   // sorted
  std::vector<std::vector<int>> components;  // positions into simple, ordered by first root
  std::vector<int> comp_of_simple;           // aligned with simple
  std::vector<int> root_comp;                // per ambient root, -1 outside psi
  std::vector<IntVec> coords;                // per ambient root, empty outside psi
  std::vector<int> length_ratio;             // per component
  std::vector<char> long_in_comp;            // per ambient root
  std::vector<int> positive;                 // psi intersect Phi+
  std::vector<Vector> coweights;             // aligned with simple

  int rank() const { return static_cast<int>(simple.size()); }
  // <root, v> for v = sum e_j coweights[j].
  Rat pair(int root, const RatVec& e) const;
  std::int64_t pair(int root, const IntVec& e) const;
  Vector point(const RatVec& e) const;
  Vector point(const IntVec& e) const;
};

std::shared_ptr<const SubsystemInfo> make_subsystem_info(const RootSystem& rs, const RootSubset& psi);

}  // namespace weylref
