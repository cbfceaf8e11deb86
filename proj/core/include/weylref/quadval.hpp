#pragma once

#include <string>

#include "weylref/linalg.hpp"

namespace weylref {

// Exact value q * sqrt(r) with r a squarefree positive integer.
class QuadVal {
 public:
  QuadVal() = default;
  QuadVal(Rat q, Int r);

  static QuadVal rational(const Rat& q);
  static QuadVal sqrt_of(const Rat& x);

  const Rat& coefficient() const { return q_; }
  const Int& radicand() const { return r_; }
  bool is_rational() const { return r_ == 1; }
  bool is_zero() const { return q_ == 0; }

  QuadVal operator*(const QuadVal& o) const;
  QuadVal operator/(const QuadVal& o) const;
  QuadVal operator*(const Rat& s) const;
  bool operator==(const QuadVal& o) const { return q_ == o.q_ && r_ == o.r_; }
  bool operator!=(const QuadVal& o) const { return !(*this == o); }

  // Squared value, always rational.
  Rat squared() const { return q_ * q_ * Rat(r_); }
  double approx() const;

  // "q*sqrt(r)", or just "q" when r = 1.
  std::string to_string() const;
  static QuadVal parse(const std::string& text);

 private:
  void normalize();

  Rat q_ = 0;
  Int r_ = 1;
};

// Splits n > 0 as s^2 * t with t squarefree.
void square_split(const Int& n, Int& s, Int& t);

}  // namespace weylref
