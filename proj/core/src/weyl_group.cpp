#include "weylref/weyl_group.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

#include "weylref/errors.hpp"

namespace weylref {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1)) * 1099511628211ULL;
    return h;
  }
};

std::vector<int> key_of(const RootSystem& rs, const std::vector<int>& perm) {
  return std::vector<int>(perm.begin(), perm.begin() + rs.rank());
}

}  // namespace

Vector WeylElement::apply(const Vector& v) const {
  Vector out(v.size());
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = 0; j < matrix.size(); ++j)
      if (matrix[i][j] != 0 && v[j] != 0) out[i] += Rat(static_cast<long>(matrix[i][j])) * v[j];
  return out;
}

bool WeylElement::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

WeylElement element_from_perm(const RootSystem& rs, std::vector<int> perm) {
  WeylElement w;
  int n = rs.rank();
  w.matrix.assign(n, IntVec(n, 0));
  for (int j = 0; j < n; ++j) {
    const auto& img = rs.root(perm[rs.simple_root(j)]);
    for (int i = 0; i < n; ++i) w.matrix[i][j] = img[i];
  }
  w.perm = std::move(perm);
  return w;
}

WeylElement identity_element(const RootSystem& rs) {
  std::vector<int> p(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i) p[i] = i;
  return element_from_perm(rs, std::move(p));
}

WeylElement reflection_element(const RootSystem& rs, int root) {
  std::vector<int> p(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i) p[i] = rs.reflect(root, i);
  return element_from_perm(rs, std::move(p));
}

WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  std::vector<int> p(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i) p[i] = a.perm[b.perm[i]];
  return element_from_perm(rs, std::move(p));
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> p(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i) p[w.perm[i]] = i;
  return element_from_perm(rs, std::move(p));
}

int length(const RootSystem& rs, const WeylElement& w) {
  int l = 0;
  for (int i = 0; i < rs.num_positive(); ++i)
    if (!rs.is_positive(w.perm[i])) ++l;
  return l;
}

std::uint64_t predicted_order(const RootSystem& rs) {
  std::uint64_t total = 1;
  for (const auto& c : rs.type().components) {
    std::uint64_t o = weyl_order(c);
    if (o == 0 || total > UINT64_MAX / o) return 0;
    total *= o;
  }
  return total;
}

std::vector<WeylElement> reflection_subgroup(const RootSystem& rs, const std::vector<int>& roots,
                                             std::uint64_t bound) {
  std::vector<std::vector<int>> gens;
  for (int r : roots) {
    std::vector<int> p(rs.num_roots());
    for (int i = 0; i < rs.num_roots(); ++i) p[i] = rs.reflect(r, i);
    gens.push_back(std::move(p));
  }
  std::vector<std::vector<int>> elems;
  std::unordered_set<std::vector<int>, KeyHash> seen;
  std::vector<int> id(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i) id[i] = i;
  seen.insert(key_of(rs, id));
  elems.push_back(id);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      std::vector<int> p(rs.num_roots());
      for (int i = 0; i < rs.num_roots(); ++i) p[i] = g[elems[head][i]];
      if (seen.insert(key_of(rs, p)).second) {
        if (elems.size() >= bound)
          throw ResourceError("Weyl group enumeration exceeds the bound of " +
                              std::to_string(bound) + " elements");
        elems.push_back(std::move(p));
      }
    }
  }
  std::vector<WeylElement> out;
  out.reserve(elems.size());
  for (auto& p : elems) out.push_back(element_from_perm(rs, std::move(p)));
  return out;
}

std::vector<WeylElement> weyl_group(const RootSystem& rs, std::uint64_t bound) {
  std::uint64_t predicted = predicted_order(rs);
  if (predicted == 0 || predicted > bound)
    throw ResourceError("Weyl group of " + rs.label() + " exceeds the bound of " +
                        std::to_string(bound) + " elements");
  std::vector<int> simple;
  for (int j = 0; j < rs.rank(); ++j) simple.push_back(rs.simple_root(j));
  auto elems = reflection_subgroup(rs, simple, bound);
  ensure(elems.size() == predicted, "Weyl group order " + std::to_string(elems.size()) +
                                        " differs from the predicted " + std::to_string(predicted));
  // Regularity: distinct elements give distinct simple systems.
  std::set<std::vector<int>> systems;
  for (const auto& w : elems) {
    std::vector<int> img;
    for (int j : simple) img.push_back(w(j));
    std::sort(img.begin(), img.end());
    systems.insert(img);
  }
  ensure(systems.size() == elems.size(), "simple systems are not permuted regularly");
  return elems;
}

}  // namespace weylref
