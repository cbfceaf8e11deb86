#include "weylref/quadval.hpp"

#include <cmath>

#include "weylref/errors.hpp"

namespace weylref {

void square_split(const Int& n, Int& s, Int& t) {
  if (n <= 0) throw InternalError("square_split needs a positive integer");
  s = 1;
  t = 1;
  Int rest = n;
  for (Int p = 2; p * p <= rest; ++p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) s *= p;
    if (e % 2 == 1) t *= p;
  }
  t *= rest;
}

QuadVal::QuadVal(Rat q, Int r) : q_(std::move(q)), r_(std::move(r)) {
  if (r_ <= 0) throw ValidationError("radicand must be positive");
  normalize();
}

void QuadVal::normalize() {
  Int s, t;
  square_split(r_, s, t);
  q_ *= Rat(s);
  r_ = t;
  if (q_ == 0) r_ = 1;
}

QuadVal QuadVal::rational(const Rat& q) { return QuadVal(q, 1); }

QuadVal QuadVal::sqrt_of(const Rat& x) {
  if (x < 0) throw ValidationError("square root of a negative rational");
  if (x == 0) return QuadVal();
  // sqrt(a/b) = sqrt(a b) / b
  Int ab = x.get_num() * x.get_den();
  return QuadVal(Rat(1, x.get_den()), ab);
}

QuadVal QuadVal::operator*(const QuadVal& o) const { return QuadVal(q_ * o.q_, r_ * o.r_); }

QuadVal QuadVal::operator/(const QuadVal& o) const {
  if (o.is_zero()) throw ValidationError("division by zero");
  return QuadVal(q_ / (o.q_ * Rat(o.r_)), r_ * o.r_);
}

QuadVal QuadVal::operator*(const Rat& s) const { return QuadVal(q_ * s, r_); }

double QuadVal::approx() const { return q_.get_d() * std::sqrt(r_.get_d()); }

std::string QuadVal::to_string() const {
  if (r_ == 1) return q_.get_str();
  return q_.get_str() + "*sqrt(" + r_.get_str() + ")";
}

QuadVal QuadVal::parse(const std::string& text) {
  auto star = text.find("*sqrt(");
  if (star == std::string::npos) return rational(parse_rat(text));
  if (text.back() != ')') throw ValidationError("malformed quadratic value: " + text);
  Rat q = parse_rat(text.substr(0, star));
  Int r(text.substr(star + 6, text.size() - star - 7));
  return QuadVal(q, r);
}

}  // namespace weylref
