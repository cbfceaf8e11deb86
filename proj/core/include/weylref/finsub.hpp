#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "weylref/root_system.hpp"
#include "weylref/weyl_group.hpp"

namespace weylref {

// Sorted set of root indices of a fixed root system.
class RootSubset {
 public:
  RootSubset() = default;
  explicit RootSubset(std::vector<int> members);

  const std::vector<int>& members() const { return m_; }
  std::size_t size() const { return m_.size(); }
  bool empty() const { return m_.empty(); }
  bool contains(int root) const;
  bool contains(const RootSubset& other) const;
  auto begin() const { return m_.begin(); }
  auto end() const { return m_.end(); }
  bool operator==(const RootSubset& o) const { return m_ == o.m_; }
  bool operator<(const RootSubset& o) const { return m_ < o.m_; }

 private:
  std::vector<int> m_;
};

struct NpComponent {
  std::vector<int> gamma;        // sorted
  std::vector<int> gamma_prime;  // gamma minus the extra root
  int extra = -1;                // -1 for an independent component
  std::vector<std::int64_t> c;   // coprime positive relation on gamma, c[extra] = 1

  bool dependent() const { return extra >= 0; }
  std::int64_t coeff(int root) const;
};

struct NpDecomposition {
  std::vector<NpComponent> components;

  std::vector<int> gamma_prime() const;
  int component_of(int root) const;
};

bool linearly_independent(const RootSystem& rs, const std::vector<int>& roots);
bool is_simple_subsystem(const RootSystem& rs, const std::vector<int>& roots);
bool is_np_subset(const RootSystem& rs, const std::vector<int>& roots);

// Splits an np subset into orthogonal components and, for each dependent
// component, picks the extra root whose negative (or negative coroot) is the
// highest root of the rest. Roots in -Phi+ are preferred as the extra root.
NpDecomposition np_decompose(const RootSystem& rs, const std::vector<int>& roots);

// All admissible choices of the extra root of one dependent component.
std::vector<int> extra_root_choices(const RootSystem& rs, const std::vector<int>& component);

// Reflection closure: the smallest subsystem containing the roots.
RootSubset subsystem_of(const RootSystem& rs, const std::vector<int>& roots);

// Simple system of psi for the positive system {b in psi : positive(b)}.
std::vector<int> simple_system(const RootSystem& rs, const RootSubset& psi,
                               const std::function<bool(int)>& positive);
// Canonical simple system, for the positive system psi intersect Phi+.
std::vector<int> simple_system(const RootSystem& rs, const RootSubset& psi);

// Orthogonal components of a set of roots.
std::vector<std::vector<int>> orthogonal_components(const RootSystem& rs,
                                                    const std::vector<int>& roots);

// Coordinates of roots of Phi_S in the basis S (S independent).
class SimpleCoords {
 public:
  SimpleCoords(const RootSystem& rs, std::vector<int> simple);
  const std::vector<int>& simple() const { return simple_; }
  IntVec coords(int root) const;
  RatVec coords(const Vector& v) const;

 private:
  const RootSystem* rs_;
  std::vector<int> simple_;
  RatMatrix gram_inv_;
};

// Highest root of Phi_S for an indecomposable simple system S, and the root
// whose coroot is highest in the dual.
int highest_root_of(const RootSystem& rs, const std::vector<int>& simple);
int highest_short_root_of(const RootSystem& rs, const std::vector<int>& simple);

// Cartan matrix of an ordered independent set: entry (i, j) = <s_i^vee, s_j>.
IntMatrix cartan_of(const RootSystem& rs, const std::vector<int>& simple);

// Isomorphism type such as "B2xA1~"; "~" marks a component made of short
// roots of a two-length ambient component. The empty subsystem is "0".
std::string subsystem_type(const RootSystem& rs, const RootSubset& psi);

bool is_closed(const RootSystem& rs, const RootSubset& psi);
bool is_dual_closed(const RootSystem& rs, const RootSubset& psi);

struct ElementaryExtension {
  int component = 0;       // index into the components of the simple system
  int theta = -1;          // chamber root of that component
  bool dual_chamber = false;
  int deleted = -1;        // deleted simple root
  RootSubset subsystem;    // generated by the completed diagram minus the node
  RootSubset parabolic;    // generated by the simple system minus the node
};

// Subsystems of psi obtained from completed diagrams of its components.
std::vector<ElementaryExtension> elementary_extensions(const RootSystem& rs, const RootSubset& psi);

enum class StepKind { Parabolic, Elementary };
struct ExtensionStep {
  RootSubset larger;
  StepKind kind;
  int added_root;
};
// One step of the ascending chain for a proper subsystem: a strictly larger
// subsystem in which psi is parabolic or elementary. nullopt for psi = Phi.
std::optional<ExtensionStep> extension_step(const RootSystem& rs, const RootSubset& psi);

struct SubsystemClass {
  RootSubset representative;
  std::string type;
  bool closed = false;
  bool dual_closed = false;
};

struct Classification {
  std::vector<SubsystemClass> classes;  // sorted by size, then type
  bool fingerprint_only = false;
};

// Lexicographically least W-image of psi.
RootSubset canonical_form(const std::vector<WeylElement>& group, const RootSubset& psi);

Classification enumerate_subsystems(const RootSystem& rs, std::uint64_t bound = kDefaultWeylBound);

// Stabilizer in W of Pi together with -theta (theta a chamber root).
std::vector<WeylElement> np_stabilizer(const RootSystem& rs, const std::vector<int>& gamma,
                                       std::uint64_t bound = kDefaultWeylBound);

struct DynkinDiagram {
  struct Node {
    int root;
    Rat norm2;
  };
  struct Edge {
    int a, b;
    int cab, cba;    // <a^vee, b> and <b^vee, a>
    int bonds() const { return cab * cba; }
  };
  std::vector<Node> nodes;
  std::vector<Edge> edges;

  IntMatrix cartan() const;
  std::string render() const;
};

DynkinDiagram dynkin_diagram(const RootSystem& rs, const std::vector<int>& roots);

}  // namespace weylref
