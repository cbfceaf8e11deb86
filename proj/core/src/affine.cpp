#include "weylref/affine.hpp"

#include "weylref/errors.hpp"
#include "weylref/lattice.hpp"

namespace weylref {

bool is_positive(const RootSystem& rs, const AffRoot& x) {
  return x.level > 0 || (x.level == 0 && rs.is_positive(x.root));
}

AffRoot negate(const RootSystem& rs, const AffRoot& x) { return {rs.negate(x.root), -x.level}; }

Rat evaluate(const RootSystem& rs, const AffRoot& x, const Vector& v) {
  return rs.inner(x.root, v) + Rat(static_cast<long>(x.level));
}

ExtAffElement ext_identity(const RootSystem& rs) {
  return {identity_element(rs), Vector(rs.rank())};
}

ExtAffElement ext_translation(const RootSystem& rs, const Vector& gamma) {
  rs.check_vector(gamma);
  return {identity_element(rs), gamma};
}

ExtAffElement ext_from_weyl(const RootSystem& rs, const WeylElement& w) {
  return {w, Vector(rs.rank())};
}

ExtAffElement compose(const RootSystem& rs, const ExtAffElement& a, const ExtAffElement& b) {
  // (w1 t1)(w2 t2) = w1 w2 t_{w2^{-1} t1 + t2}
  auto w2inv = inverse(rs, b.w);
  return {compose(rs, a.w, b.w), w2inv.apply(a.gamma) + b.gamma};
}

ExtAffElement inverse(const RootSystem& rs, const ExtAffElement& g) {
  // (w t)^{-1} = w^{-1} t_{-w(t)}
  return {inverse(rs, g.w), -g.w.apply(g.gamma)};
}

bool same_element(const ExtAffElement& a, const ExtAffElement& b) {
  return a.w == b.w && a.gamma == b.gamma;
}

AffRoot act_on_affroot(const RootSystem& rs, const ExtAffElement& g, const AffRoot& x) {
  Rat shift = rs.inner(x.root, g.gamma);
  require(is_integer(shift), "translation does not pair integrally with the root");
  return {g.w(x.root), x.level + to_int64(shift)};
}

AffineMap to_affine_map(const RootSystem& rs, const ExtAffElement& g) {
  (void)rs;
  return {g.w, -g.w.apply(g.gamma)};
}

ExtAffElement from_affine_map(const RootSystem& rs, const AffineMap& m) {
  auto winv = inverse(rs, m.linear);
  return {m.linear, -winv.apply(m.translation)};
}

Vector act_on_point(const RootSystem& rs, const ExtAffElement& g, const Vector& v) {
  rs.check_vector(v);
  return g.w.apply(v - g.gamma);
}

Vector affine_reflection_apply(const RootSystem& rs, int alpha, const Rat& m, const Vector& v) {
  rs.check_vector(v);
  return v - rs.coroot(alpha) * (rs.inner(alpha, v) - m);
}

ExtAffElement reflection_of_affroot(const RootSystem& rs, const AffRoot& x) {
  // s_{a + n delta} = t_{n a^vee} s_a = s_a t_{-n a^vee}
  Vector gamma = rs.coroot(x.root) * Rat(static_cast<long>(-x.level));
  return {reflection_element(rs, x.root), gamma};
}

bool Inequality::holds(const RootSystem& rs, const Vector& v) const {
  Rat val = rs.inner(normal, v) + constant;
  return strict ? val > 0 : val >= 0;
}

bool in_region(const RootSystem& rs, const std::vector<Inequality>& walls, const Vector& v) {
  for (const auto& w : walls)
    if (!w.holds(rs, v)) return false;
  return true;
}

FundamentalAlcove fundamental_alcove(const RootSystem& rs) {
  FundamentalAlcove a;
  for (int j = 0; j < rs.rank(); ++j) a.walls.push_back({rs.simple_root(j), Rat(0), false});
  for (std::size_t c = 0; c < rs.components().size(); ++c) {
    int theta = rs.highest_root(static_cast<int>(c));
    a.walls.push_back({rs.negate(theta), Rat(1), false});
    std::vector<Vector> verts{Vector(rs.rank())};
    for (int j : rs.components()[c]) {
      std::int64_t mj = rs.root(theta)[j];
      verts.push_back(fundamental_coweight(rs, j) * make_rat(1, mj));
    }
    for (const auto& v : verts) ensure(in_region(rs, a.walls, v), "alcove vertex fails a wall");
    a.vertices.push_back(std::move(verts));
  }
  return a;
}

bool is_special_point(const RootSystem& rs, const Vector& v) {
  rs.check_vector(v);
  bool in_p = lattice_membership(coweight_lattice(rs), v);
  bool integral = true;
  for (int a = 0; a < rs.num_roots() && integral; ++a)
    if (!is_integer(rs.inner(a, v))) integral = false;
  ensure(in_p == integral, "coweight membership disagrees with root pairings");
  return in_p;
}

}  // namespace weylref
