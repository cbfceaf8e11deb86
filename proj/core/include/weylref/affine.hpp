#pragma once

#include <cstdint>
#include <vector>

#include "weylref/root_system.hpp"
#include "weylref/weyl_group.hpp"

namespace weylref {

// The affine root alpha + level * delta.
struct AffRoot {
  int root = 0;
  std::int64_t level = 0;

  bool operator==(const AffRoot&) const = default;
  auto operator<=>(const AffRoot&) const = default;
};

bool is_positive(const RootSystem& rs, const AffRoot& x);
AffRoot negate(const RootSystem& rs, const AffRoot& x);
// Value of the affine function <alpha, v> + level at v.
Rat evaluate(const RootSystem& rs, const AffRoot& x, const Vector& v);

// Element w t_gamma of the extended affine Weyl group, in the linear
// convention: w t_gamma (alpha + m delta) = w(alpha) + (m + <alpha, gamma>) delta.
// On points of V, t_gamma acts as translation by -gamma, so that the affine
// root alpha + m delta corresponds to the function v -> <alpha, v> + m.
struct ExtAffElement {
  WeylElement w;
  Vector gamma;
};

ExtAffElement ext_identity(const RootSystem& rs);
ExtAffElement ext_translation(const RootSystem& rs, const Vector& gamma);
ExtAffElement ext_from_weyl(const RootSystem& rs, const WeylElement& w);
ExtAffElement compose(const RootSystem& rs, const ExtAffElement& a, const ExtAffElement& b);
ExtAffElement inverse(const RootSystem& rs, const ExtAffElement& g);
bool same_element(const ExtAffElement& a, const ExtAffElement& b);

AffRoot act_on_affroot(const RootSystem& rs, const ExtAffElement& g, const AffRoot& x);

// v -> linear(v) + translation.
struct AffineMap {
  WeylElement linear;
  Vector translation;
};
AffineMap to_affine_map(const RootSystem& rs, const ExtAffElement& g);
ExtAffElement from_affine_map(const RootSystem& rs, const AffineMap& m);
Vector act_on_point(const RootSystem& rs, const ExtAffElement& g, const Vector& v);

// s_{alpha,m}(v) = v - (<alpha, v> - m) coroot(alpha).
Vector affine_reflection_apply(const RootSystem& rs, int alpha, const Rat& m, const Vector& v);

// The reflection in the affine root x, as an element acting on roots and points.
ExtAffElement reflection_of_affroot(const RootSystem& rs, const AffRoot& x);

// <normal, v> + constant >= 0, or > 0 when strict.
struct Inequality {
  int normal = 0;
  Rat constant;
  bool strict = false;

  bool holds(const RootSystem& rs, const Vector& v) const;
};

struct FundamentalAlcove {
  std::vector<Inequality> walls;
  // Vertices of the simplex of each component (0 first).
  std::vector<std::vector<Vector>> vertices;
};

FundamentalAlcove fundamental_alcove(const RootSystem& rs);
bool in_region(const RootSystem& rs, const std::vector<Inequality>& walls, const Vector& v);
bool is_special_point(const RootSystem& rs, const Vector& v);

}  // namespace weylref
