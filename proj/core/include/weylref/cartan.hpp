#pragma once

#include <string>
#include <vector>

#include "weylref/linalg.hpp"

namespace weylref {

struct SimpleType {
  char family = 'A';
  int rank = 1;

  std::string to_string() const { return std::string(1, family) + std::to_string(rank); }
  bool operator==(const SimpleType&) const = default;
  auto operator<=>(const SimpleType&) const = default;
};

// Product of simple types, e.g. "B3xG2".
struct CartanType {
  std::vector<SimpleType> components;

  static CartanType parse(const std::string& text);
  std::string to_string() const;
  int rank() const;
};

// Bourbaki numbering; entry (i, j) is <coroot_i, root_j>.
IntMatrix cartan_matrix(const SimpleType& t);
IntMatrix cartan_matrix(const CartanType& t);

// |W| for the type, or 0 if it does not fit in 64 bits.
std::uint64_t weyl_order(const SimpleType& t);

// Identifies an indecomposable finite-type Cartan matrix (any node order).
SimpleType identify_cartan(const IntMatrix& a);

// Connected components of the Dynkin graph of a (lists of node indices).
std::vector<std::vector<int>> cartan_components(const IntMatrix& a);

}  // namespace weylref
