#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "weylref/refsub.hpp"
#include "weylref/weyl_group.hpp"

namespace weylref {

// Descent data of the np set Pi + {-omega} of an indecomposable system.
struct DescentProfile {
  XKind lattice = XKind::P;        // P, or PDual for the short choice of omega
  std::vector<int> gamma;          // simple roots, then -omega
  std::vector<std::int64_t> c;     // aligned with gamma, c = 1 on -omega
  std::int64_t h = 0;
  std::vector<Int> d;              // d_0 .. d_h
  Int f_phi;
  bool omega_long = true;
  int n_simple = 0;
  int n_long_simple = 0;
  int k_phi = 1;
};

DescentProfile descent_stats(const RootSystem& rs, XKind lattice, std::uint64_t weyl_bound = kDefaultWeylBound);

// #{f : gamma -> N with sum c f = M}.
Int partition_p(const DescentProfile& prof, std::int64_t M);
// #{f : gamma minus -omega -> N with sum c f <= M}.
Int partition_p_bounded(const DescentProfile& prof, std::int64_t M);

struct IdentityCheck {
  std::int64_t M = 0;
  Int lhs, rhs;
  bool pass = false;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool partitions_agree = true;
  bool divisible = true;
  bool symmetric = true;
  bool pass = false;
};
IdentityReport verify_identity(const DescentProfile& prof, std::int64_t m_min, std::int64_t m_max);

struct SymmetryReport {
  bool symmetric = false;
  bool unimodal = false;  // reported only
};
SymmetryReport symmetry_unimodality_report(const DescentProfile& prof);

struct CyclicReport {
  int n = 0;
  std::vector<Int> d;  // d_0 .. d_{n+1}
  std::vector<IdentityCheck> checks;
  bool matches_descent_stats = false;
  bool pass = false;
};
CyclicReport type_a_cyclic(int n, std::int64_t m_max, int n_bound = 6);

// Both sides of the counting argument for X' = M P or M P(dual).
struct CountingReport {
  Int lattice_points;              // |D intersect P|
  Int formula;                     // (1/f) sum_i d_i p(M - i)
  std::size_t enumerated = 0;      // distinct (w gamma, f) data
  std::size_t images = 0;          // distinct inverse images of D intersect P
  bool images_match = false;       // the two sets of data coincide
  bool pass = false;
};
CountingReport counting_realization(const RootSystem& rs, XKind lattice, std::int64_t M);

}  // namespace weylref
