#include "weylref/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "weylref/errors.hpp"

namespace weylref {

Vector& Vector::operator+=(const Vector& o) {
  if (o.size() != size()) throw ValidationError("vector dimension mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (o.size() != size()) throw ValidationError("vector dimension mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

Vector Vector::operator+(const Vector& o) const {
  Vector r = *this;
  r += o;
  return r;
}

Vector Vector::operator-(const Vector& o) const {
  Vector r = *this;
  r -= o;
  return r;
}

Vector Vector::operator-() const {
  Vector r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

Vector Vector::operator*(const Rat& s) const {
  Vector r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

bool Vector::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
}

std::string Vector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ", ";
    s += c[i].get_str();
  }
  return s + ")";
}

RootSystem RootSystem::build(const CartanType& type) {
  RootSystem rs = from_cartan(cartan_matrix(type));
  rs.type_ = type;
  return rs;
}

RootSystem RootSystem::from_cartan(const IntMatrix& cartan) {
  RootSystem rs;
  rs.rank_ = static_cast<int>(cartan.size());
  rs.cartan_ = cartan;
  rs.components_ = cartan_components(cartan);
  rs.simple_component_.assign(rs.rank_, 0);
  for (std::size_t c = 0; c < rs.components_.size(); ++c) {
    IntMatrix sub;
    for (int i : rs.components_[c]) {
      IntVec row;
      for (int j : rs.components_[c]) row.push_back(cartan[i][j]);
      sub.push_back(row);
      rs.simple_component_[i] = static_cast<int>(c);
    }
    rs.type_.components.push_back(identify_cartan(sub));
  }

  // Symmetrize per component, then scale so that long roots have norm 2.
  rs.simple_norm2_.assign(rs.rank_, Rat(0));
  for (const auto& comp : rs.components_) {
    std::vector<int> stack{comp[0]};
    rs.simple_norm2_[comp[0]] = 1;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j : comp) {
        if (j == i || cartan[i][j] == 0 || rs.simple_norm2_[j] != 0) continue;
        if (cartan[j][i] == 0) throw ValidationError("Cartan matrix is not symmetrizable");
        rs.simple_norm2_[j] = rs.simple_norm2_[i] * make_rat(cartan[i][j], cartan[j][i]);
        stack.push_back(j);
      }
    }
    Rat mx = 0;
    for (int j : comp) mx = std::max(mx, rs.simple_norm2_[j]);
    for (int j : comp) rs.simple_norm2_[j] = rs.simple_norm2_[j] * 2 / mx;
  }
  rs.gram_.assign(rs.rank_, RatVec(rs.rank_));
  for (int i = 0; i < rs.rank_; ++i)
    for (int j = 0; j < rs.rank_; ++j)
      rs.gram_[i][j] = rs.simple_norm2_[i] / 2 * Rat(static_cast<long>(cartan[i][j]));
  for (int i = 0; i < rs.rank_; ++i)
    for (int j = 0; j < rs.rank_; ++j)
      if (rs.gram_[i][j] != rs.gram_[j][i]) throw ValidationError("Cartan matrix is not symmetrizable");
  rs.build_tables();
  return rs;
}

void RootSystem::build_tables() {
  int n = rank_;
  // <beta, coroot_i> = sum_j beta_j a_ij
  auto pair_simple = [&](const IntVec& beta, int i) {
    std::int64_t s = 0;
    for (int j = 0; j < n; ++j) s += beta[j] * cartan_[i][j];
    return s;
  };
  std::set<IntVec> positive;
  std::vector<IntVec> frontier;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    positive.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& beta : frontier)
      for (int i = 0; i < n; ++i) {
        std::int64_t p = pair_simple(beta, i);
        if (p == 0) continue;
        IntVec img = beta;
        img[i] -= p;
        bool pos = std::all_of(img.begin(), img.end(), [](std::int64_t x) { return x >= 0; });
        bool nonzero = std::any_of(img.begin(), img.end(), [](std::int64_t x) { return x != 0; });
        if (pos && nonzero && positive.insert(img).second) next.push_back(img);
      }
    frontier = std::move(next);
  }
  std::vector<IntVec> pos(positive.begin(), positive.end());
  auto ht = [](const IntVec& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); };
  std::sort(pos.begin(), pos.end(), [&](const IntVec& a, const IntVec& b) {
    auto ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  npos_ = static_cast<int>(pos.size());
  roots_ = pos;
  for (const auto& p : pos) {
    IntVec neg = p;
    for (auto& x : neg) x = -x;
    roots_.push_back(neg);
  }
  int total = num_roots();
  index_.clear();
  height_.resize(total);
  for (int i = 0; i < total; ++i) {
    index_[roots_[i]] = i;
    height_[i] = static_cast<int>(ht(roots_[i]));
  }

  // Integer-scaled inner products.
  Int den = 1;
  for (const auto& row : gram_)
    for (const auto& q : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  scale_ = to_int64(den);
  IntMatrix g(n, IntVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = to_int64(gram_[i][j] * Rat(den));
  inner_scaled_.assign(static_cast<std::size_t>(total) * total, 0);
  std::vector<IntVec> groot(total, IntVec(n, 0));
  for (int i = 0; i < total; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) groot[i][k] += g[k][j] * roots_[i][j];
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < n; ++k) s += roots_[i][k] * groot[j][k];
      inner_scaled_[static_cast<std::size_t>(i) * total + j] = s;
    }
  norm2_.resize(total);
  for (int i = 0; i < total; ++i)
    norm2_[i] = make_rat(inner_scaled_[static_cast<std::size_t>(i) * total + i], scale_);

  pairing_.assign(static_cast<std::size_t>(total) * total, 0);
  reflect_.assign(static_cast<std::size_t>(total) * total, -1);
  for (int b = 0; b < total; ++b)
    for (int a = 0; a < total; ++a) {
      std::int64_t num = 2 * inner_scaled_[static_cast<std::size_t>(b) * total + a];
      std::int64_t dn = inner_scaled_[static_cast<std::size_t>(a) * total + a];
      if (num % dn != 0) throw InternalError("non-integral root pairing");
      int p = static_cast<int>(num / dn);
      pairing_[static_cast<std::size_t>(b) * total + a] = p;
      IntVec img = roots_[b];
      for (int k = 0; k < n; ++k) img[k] -= p * roots_[a][k];
      int idx = find(img);
      if (idx < 0) throw InternalError("root set not closed under reflection");
      reflect_[static_cast<std::size_t>(a) * total + b] = idx;
    }

  std::size_t nc = components_.size();
  root_component_.assign(total, -1);
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < n; ++j)
      if (roots_[i][j] != 0) {
        root_component_[i] = simple_component_[j];
        break;
      }
  highest_.assign(nc, -1);
  highest_short_.assign(nc, -1);
  length_ratio_.assign(nc, 1);
  std::vector<Rat> best_co(nc, Rat(-1));
  for (int i = 0; i < npos_; ++i) {
    int c = root_component_[i];
    if (highest_[c] < 0 || height_[i] > height_[highest_[c]]) highest_[c] = i;
    Rat co = 0;
    for (auto q : coroot_coords(i)) co += q;
    if (co > best_co[c]) {
      best_co[c] = co;
      highest_short_[c] = i;
    }
  }
  for (std::size_t c = 0; c < nc; ++c) {
    Rat mn = 2;
    for (int j : components_[c]) mn = std::min(mn, simple_norm2_[j]);
    Rat k = Rat(2) / mn;
    length_ratio_[c] = static_cast<int>(to_int64(k));
  }
}

int RootSystem::find(const IntVec& coords) const {
  auto it = index_.find(coords);
  return it == index_.end() ? -1 : it->second;
}

Rat RootSystem::inner(int i, int j) const { return make_rat(inner_scaled(i, j), scale_); }

void RootSystem::check_vector(const Vector& v) const {
  if (static_cast<int>(v.size()) != rank_)
    throw ValidationError("vector has dimension " + std::to_string(v.size()) + ", expected " +
                          std::to_string(rank_));
}

Rat RootSystem::inner(const Vector& v, const Vector& w) const {
  check_vector(v);
  check_vector(w);
  Rat s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (w[j] != 0 && gram_[i][j] != 0) s += v[i] * gram_[i][j] * w[j];
  }
  return s;
}

Rat RootSystem::inner(int i, const Vector& v) const { return inner(vector(i), v); }

Vector RootSystem::coroot(int i) const { return vector(i) * (Rat(2) / norm2_[i]); }

Vector RootSystem::reflect(int a, const Vector& v) const {
  return v - vector(a) * (inner(v, coroot(a)));
}

Vector RootSystem::reflect(const Vector& alpha, const Vector& v) const {
  Rat n2 = inner(alpha, alpha);
  if (n2 == 0) throw ValidationError("reflection in the zero vector");
  return v - alpha * (2 * inner(alpha, v) / n2);
}

RatVec RootSystem::coroot_coords(int i) const {
  RatVec out(rank_);
  for (int j = 0; j < rank_; ++j)
    out[j] = Rat(static_cast<long>(roots_[i][j])) * simple_norm2_[j] / norm2_[i];
  return out;
}

DualSystem dual_of(const RootSystem& rs) {
  IntMatrix t(rs.rank(), IntVec(rs.rank()));
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j) t[i][j] = rs.cartan()[j][i];
  DualSystem d{RootSystem::from_cartan(t), {}};
  d.dual_index.resize(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i) {
    IntVec c;
    for (const auto& q : rs.coroot_coords(i)) c.push_back(to_int64(q));
    d.dual_index[i] = d.system.find(c);
    ensure(d.dual_index[i] >= 0, "coroot not found in dual system");
  }
  return d;
}

}  // namespace weylref
