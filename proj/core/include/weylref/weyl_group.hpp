#pragma once

#include <cstdint>
#include <vector>

#include "weylref/root_system.hpp"

namespace weylref {

// Element of W stored as a permutation of root indices and as an integer
// matrix on simple-root coordinates (column j is the image of simple root j).
struct WeylElement {
  std::vector<int> perm;
  IntMatrix matrix;

  int operator()(int root) const { return perm[root]; }
  Vector apply(const Vector& v) const;
  bool is_identity() const;
  bool operator==(const WeylElement& o) const { return perm == o.perm; }
};

WeylElement identity_element(const RootSystem& rs);
WeylElement reflection_element(const RootSystem& rs, int root);
WeylElement element_from_perm(const RootSystem& rs, std::vector<int> perm);
// (a * b)(x) = a(b(x))
WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);
// Number of positive roots sent to negative roots.
int length(const RootSystem& rs, const WeylElement& w);

constexpr std::uint64_t kDefaultWeylBound = 1'000'000;

// All of W, identity first. Throws ResourceError beyond the bound.
std::vector<WeylElement> weyl_group(const RootSystem& rs, std::uint64_t bound = kDefaultWeylBound);

// Subgroup generated by the reflections in the given roots.
std::vector<WeylElement> reflection_subgroup(const RootSystem& rs, const std::vector<int>& roots,
                                             std::uint64_t bound = kDefaultWeylBound);

// Predicted |W| from the Cartan type (0 if it overflows).
std::uint64_t predicted_order(const RootSystem& rs);

}  // namespace weylref
