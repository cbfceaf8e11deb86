#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weylref/affine.hpp"
#include "weylref/finsub.hpp"
#include "weylref/lattice.hpp"
#include "weylref/quadval.hpp"
#include "weylref/subsystem_info.hpp"

namespace weylref {

// ---------------------------------------------------------------------------
// First parameterisation: an np subset gamma with an integer function f.

struct GFDatum {
  std::vector<int> gamma;         // sorted root indices
  std::vector<std::int64_t> f;    // aligned with gamma

  static GFDatum from_pairs(std::vector<std::pair<int, std::int64_t>> pairs);
  std::int64_t f_of(int root) const;
  bool operator==(const GFDatum&) const = default;
  bool operator<(const GFDatum& o) const {
    return gamma != o.gamma ? gamma < o.gamma : f < o.f;
  }
};

// Everything about gamma that does not depend on f.
struct GammaStructure {
  struct Component {
    NpComponent np;
    bool extra_long = true;       // extra root long within the component
    std::vector<int> sigma;       // roots of the subsystem generated by gamma'
    std::vector<IntVec> a;        // coefficients of sigma over np.gamma_prime
    std::vector<std::int64_t> kfac;
  };
  std::vector<int> gamma;
  NpDecomposition dec;
  std::vector<Component> comps;
  std::shared_ptr<const SubsystemInfo> sigma_info;  // subsystem of gamma'
  std::vector<int> sigma_pos_comp;  // sigma_info component -> our component
  // Per ambient root: (component, position in sigma) or (-1, -1).
  std::vector<std::pair<int, int>> where;
};

std::shared_ptr<const GammaStructure> analyze_gamma(const RootSystem& rs, const std::vector<int>& gamma);

class GFPair {
 public:
  GFPair(std::shared_ptr<const GammaStructure> s, GFDatum d);

  const GFDatum& datum() const { return datum_; }
  const GammaStructure& structure() const { return *s_; }
  std::shared_ptr<const GammaStructure> structure_ptr() const { return s_; }
  std::int64_t f_of(int root) const { return datum_.f_of(root); }
  // K_i; zero for independent components.
  std::int64_t K(std::size_t comp) const { return K_[comp]; }
  // r_beta for the j-th root of sigma in component comp.
  std::int64_t r(std::size_t comp, std::size_t j) const { return r_[comp][j]; }
  std::vector<AffRoot> simple_affine_roots() const;

 private:
  std::shared_ptr<const GammaStructure> s_;
  GFDatum datum_;
  std::vector<std::int64_t> K_;
  std::vector<std::vector<std::int64_t>> r_;
};

// Requires gamma np, f >= 0 and f > 0 on negative roots.
GFPair validate_gf(const RootSystem& rs, const GFDatum& d,
                   std::shared_ptr<const GammaStructure> s = nullptr);
// Requires only compatibility; f may be negative.
GFPair compatible_gf(const RootSystem& rs, const GFDatum& d);

enum class Compatibility { Compatible, StronglyCompatible, Neither };
Compatibility is_compatible(const RootSystem& rs, const GFDatum& d);
std::string to_string(Compatibility c);

std::vector<AffRoot> roots_of_gf(const RootSystem& rs, const GFPair& p, std::int64_t level_bound);
bool contains_affroot(const GFPair& p, const AffRoot& x);

struct GFAlcove {
  struct Part {
    bool simplex = false;
    Vector apex;                  // the vertex v_{i,0}
    std::vector<Vector> others;   // remaining vertices, or rays of a cone
  };
  std::vector<Inequality> walls;
  std::vector<Vector> free_directions;  // basis of the part orthogonal to gamma
  std::vector<Part> parts;
};
GFAlcove alcove_of_gf(const RootSystem& rs, const GFPair& p);

// nullopt when the alcove is unbounded.
std::optional<QuadVal> volume_of_gf(const RootSystem& rs, const GFPair& p);

struct IndexResult {
  bool finite = false;
  Int index;
};
IndexResult index_of_gf(const RootSystem& rs, const GFPair& sub, const GFPair& super);

// Elements w t_gamma (w in W, gamma in R) sending the simple affine roots of p
// to positive affine roots.
std::vector<ExtAffElement> coset_reps(const RootSystem& rs, const GFPair& p, const LatticeData& R,
                                      const std::vector<WeylElement>* group = nullptr);

// ---------------------------------------------------------------------------
// Second parameterisation: a subsystem psi, a point a and an admissible lattice.

enum class XKind { Zero, P, PDual };
std::string to_string(XKind k);
XKind parse_xkind(const std::string& s);

struct XBlock {
  XKind kind = XKind::Zero;
  std::int64_t m = 0;
  bool operator==(const XBlock&) const = default;
};

// One block per component of psi, in SubsystemInfo order.
struct AdmissibleLattice {
  std::vector<XBlock> blocks;
  bool operator==(const AdmissibleLattice&) const = default;
};

// offset + modulus Z; modulus 0 means the single value offset.
struct ZFamily {
  std::int64_t offset = 0;
  std::int64_t modulus = 0;

  bool contains(std::int64_t n) const;
  bool operator==(const ZFamily&) const = default;
};
// Whether (A - c B) is contained in C.
bool difference_contained(const ZFamily& A, std::int64_t c, const ZFamily& B, const ZFamily& C);

class PsiXPair {
 public:
  PsiXPair(std::shared_ptr<const SubsystemInfo> info, AdmissibleLattice x, IntVec y);

  const SubsystemInfo& info() const { return *info_; }
  std::shared_ptr<const SubsystemInfo> info_ptr() const { return info_; }
  const AdmissibleLattice& xprime() const { return x_; }
  // Coordinates <a, simple_j> of the canonical representative a.
  const IntVec& y() const { return y_; }
  Vector a() const { return info_->point(y_); }

  std::int64_t n_of(int root) const;
  std::int64_t n_simple(int j) const { return n_simple_[j]; }
  ZFamily z(int root) const;

  bool operator==(const PsiXPair& o) const;

 private:
  std::shared_ptr<const SubsystemInfo> info_;
  AdmissibleLattice x_;
  IntVec y_;
  std::vector<std::int64_t> n_simple_;
};

// Validates and canonicalises (psi, a + X').
PsiXPair validate_psix(const RootSystem& rs, const RootSubset& psi, const Vector& a,
                       const AdmissibleLattice& x);
PsiXPair make_psix(std::shared_ptr<const SubsystemInfo> info, const AdmissibleLattice& x,
                   const IntVec& y);

// Condition (Z) over all pairs of roots of psi.
bool condition_z_holds(const RootSystem& rs, const PsiXPair& p);

std::vector<AffRoot> roots_of_psix(const RootSystem& rs, const PsiXPair& p, std::int64_t level_bound);
bool contains_affroot(const PsiXPair& p, const AffRoot& x);

LatticeData xprime_lattice(const PsiXPair& p);
LatticeData yprime_lattice(const RootSystem& rs, const PsiXPair& p);

PsiXPair act_on_psix(const RootSystem& rs, const ExtAffElement& g, const PsiXPair& p);

// t_{a - w(a) + gamma} w for w in W_psi and gamma in Y' with coefficients
// bounded by coeff_bound.
std::vector<ExtAffElement> elements_of_psix(const RootSystem& rs, const PsiXPair& p,
                                            std::int64_t coeff_bound);

struct PointwiseStabilizer {
  RootSubset finite_part;             // roots of Phi orthogonal to psi
  std::vector<int> simple;            // its canonical simple system
  std::vector<Vector> translations;   // basis of R intersect psi-perp
};
PointwiseStabilizer pointwise_stabilizer(const RootSystem& rs, const PsiXPair& p, const LatticeData& R);

bool centralizes(const RootSystem& rs, const ExtAffElement& g, const PsiXPair& p);
bool normalizes(const RootSystem& rs, const ExtAffElement& g, const PsiXPair& p);
// A w in W witnessing that p1 and p2 lie in one orbit of W extended by R.
std::optional<WeylElement> same_orbit(const RootSystem& rs, const PsiXPair& p1, const PsiXPair& p2,
                                      const LatticeData& R, const std::vector<WeylElement>& group);

std::vector<std::string> isomorphism_type(const RootSystem& rs, const GFPair& p);
std::vector<std::string> isomorphism_type(const RootSystem& rs, const PsiXPair& p);

}  // namespace weylref
