#include "weylref/subsystem_info.hpp"

#include <algorithm>

#include "weylref/errors.hpp"

namespace weylref {

Rat SubsystemInfo::pair(int root, const RatVec& e) const {
  const auto& c = coords[root];
  Rat s = 0;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) s += Rat(static_cast<long>(c[j])) * e[j];
  return s;
}

std::int64_t SubsystemInfo::pair(int root, const IntVec& e) const {
  const auto& c = coords[root];
  std::int64_t s = 0;
  for (std::size_t j = 0; j < c.size(); ++j) s += c[j] * e[j];
  return s;
}

Vector SubsystemInfo::point(const RatVec& e) const {
  Vector v(ambient_rank);
  for (std::size_t j = 0; j < e.size(); ++j)
    if (e[j] != 0) v += coweights[j] * e[j];
  return v;
}

Vector SubsystemInfo::point(const IntVec& e) const { return point(to_rat(e)); }

std::shared_ptr<const SubsystemInfo> make_subsystem_info(const RootSystem& rs, const RootSubset& psi) {
  auto info = std::make_shared<SubsystemInfo>();
  info->ambient_rank = rs.rank();
  info->psi = psi;
  for (int r : psi)
    require(psi.contains(rs.negate(r)), "root subset is not a subsystem");
  info->simple = simple_system(rs, psi);
  std::sort(info->simple.begin(), info->simple.end());
  ensure(subsystem_of(rs, info->simple) == psi, "root subset is not a subsystem");

  int k = info->rank();
  info->comp_of_simple.assign(k, -1);
  for (const auto& comp : orthogonal_components(rs, info->simple)) {
    std::vector<int> pos;
    for (int r : comp)
      pos.push_back(static_cast<int>(std::find(info->simple.begin(), info->simple.end(), r) -
                                     info->simple.begin()));
    std::sort(pos.begin(), pos.end());
    info->components.push_back(pos);
  }
  std::sort(info->components.begin(), info->components.end());
  for (std::size_t c = 0; c < info->components.size(); ++c)
    for (int j : info->components[c]) info->comp_of_simple[j] = static_cast<int>(c);

  SimpleCoords sc(rs, info->simple);
  info->root_comp.assign(rs.num_roots(), -1);
  info->coords.assign(rs.num_roots(), {});
  info->long_in_comp.assign(rs.num_roots(), 0);
  for (int r : psi) {
    info->coords[r] = sc.coords(r);
    for (int j = 0; j < k; ++j)
      if (info->coords[r][j] != 0) {
        info->root_comp[r] = info->comp_of_simple[j];
        break;
      }
    if (rs.is_positive(r)) info->positive.push_back(r);
  }
  info->length_ratio.assign(info->components.size(), 1);
  std::vector<Rat> mx(info->components.size(), Rat(0)), mn(info->components.size(), Rat(100));
  for (int r : psi) {
    int c = info->root_comp[r];
    mx[c] = std::max(mx[c], rs.norm2(r));
    mn[c] = std::min(mn[c], rs.norm2(r));
  }
  for (std::size_t c = 0; c < info->components.size(); ++c)
    info->length_ratio[c] = static_cast<int>(to_int64(mx[c] / mn[c]));
  for (int r : psi) info->long_in_comp[r] = rs.norm2(r) == mx[info->root_comp[r]];

  // Coweights of the simple system inside span(psi): the dual basis.
  RatMatrix g(k, RatVec(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g[i][j] = rs.inner(info->simple[i], info->simple[j]);
  if (k > 0) {
    RatMatrix ginv = inverse(g);
    for (int j = 0; j < k; ++j) {
      Vector w(rs.rank());
      for (int i = 0; i < k; ++i) w += rs.vector(info->simple[i]) * ginv[i][j];
      info->coweights.push_back(std::move(w));
    }
  }
  return info;
}

}  // namespace weylref
