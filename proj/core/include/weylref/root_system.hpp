#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weylref/cartan.hpp"
#include "weylref/linalg.hpp"

namespace weylref {

// A point of V written in the simple-root basis.
struct Vector {
  RatVec c;

  Vector() = default;
  explicit Vector(std::size_t n) : c(n) {}
  explicit Vector(RatVec coords) : c(std::move(coords)) {}
  static Vector from_ints(const IntVec& v) { return Vector(to_rat(v)); }

  std::size_t size() const { return c.size(); }
  const Rat& operator[](std::size_t i) const { return c[i]; }
  Rat& operator[](std::size_t i) { return c[i]; }

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector operator+(const Vector& o) const;
  Vector operator-(const Vector& o) const;
  Vector operator-() const;
  Vector operator*(const Rat& s) const;
  bool operator==(const Vector& o) const { return c == o.c; }
  bool operator<(const Vector& o) const { return c < o.c; }
  bool is_zero() const;
  std::string to_string() const;
};

// Root system in the simple-root basis. Long roots have squared length 2.
// Positive roots come first, sorted by height; root i + N is -root i.
class RootSystem {
 public:
  static RootSystem build(const CartanType& type);
  static RootSystem build(const std::string& type) { return build(CartanType::parse(type)); }
  static RootSystem from_cartan(const IntMatrix& cartan);

  const CartanType& type() const { return type_; }
  std::string label() const { return type_.to_string(); }
  int rank() const { return rank_; }
  const IntMatrix& cartan() const { return cartan_; }
  const RatMatrix& gram() const { return gram_; }

  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return npos_; }
  const IntVec& root(int i) const { return roots_[i]; }
  Vector vector(int i) const { return Vector::from_ints(roots_[i]); }
  bool is_positive(int i) const { return i < npos_; }
  int negate(int i) const { return i < npos_ ? i + npos_ : i - npos_; }
  int simple_root(int j) const { return j; }
  int height(int i) const { return height_[i]; }
  // Index of the root with these coordinates, or -1.
  int find(const IntVec& coords) const;

  const Rat& norm2(int i) const { return norm2_[i]; }
  bool is_long(int i) const { return norm2_[i] == 2; }
  Rat inner(int i, int j) const;
  // scale() * <root i, root j>, an integer.
  std::int64_t inner_scaled(int i, int j) const { return inner_scaled_[i * roots_.size() + j]; }
  std::int64_t scale() const { return scale_; }
  // <root b, coroot of root a>
  int pairing(int b, int a) const { return pairing_[b * roots_.size() + a]; }
  // Index of s_a(root b).
  int reflect(int a, int b) const { return reflect_[a * roots_.size() + b]; }

  // Components as lists of simple-root indices.
  const std::vector<std::vector<int>>& components() const { return components_; }
  int component_of_simple(int j) const { return simple_component_[j]; }
  int component_of_root(int i) const { return root_component_[i]; }
  int highest_root(int comp) const { return highest_[comp]; }
  // The root whose coroot is the highest coroot.
  int highest_short_root(int comp) const { return highest_short_[comp]; }
  // Squared-length ratio of long to short roots in the component.
  int length_ratio(int comp) const { return length_ratio_[comp]; }
  bool is_indecomposable() const { return components_.size() == 1; }

  Rat inner(const Vector& v, const Vector& w) const;
  Rat inner(int i, const Vector& v) const;
  Vector coroot(int i) const;
  Vector reflect(int a, const Vector& v) const;
  Vector reflect(const Vector& alpha, const Vector& v) const;
  // Coordinates of a coroot in the basis of simple coroots.
  RatVec coroot_coords(int i) const;

  void check_vector(const Vector& v) const;

 private:
  void build_tables();

  CartanType type_;
  int rank_ = 0;
  IntMatrix cartan_;
  RatMatrix gram_;
  RatVec simple_norm2_;
  std::vector<IntVec> roots_;
  std::vector<int> height_;
  RatVec norm2_;
  int npos_ = 0;
  std::map<IntVec, int> index_;
  std::vector<std::int64_t> inner_scaled_;
  std::int64_t scale_ = 1;
  std::vector<int> pairing_;
  std::vector<int> reflect_;
  std::vector<std::vector<int>> components_;
  std::vector<int> simple_component_;
  std::vector<int> root_component_;
  std::vector<int> highest_;
  std::vector<int> highest_short_;
  std::vector<int> length_ratio_;
};

// The coroot system as a root system, with root i of rs sent to dual_index[i].
struct DualSystem {
  RootSystem system;
  std::vector<int> dual_index;
};
DualSystem dual_of(const RootSystem& rs);

}  // namespace weylref
