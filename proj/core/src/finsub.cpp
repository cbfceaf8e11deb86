#include "weylref/finsub.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "weylref/errors.hpp"

namespace weylref {

RootSubset::RootSubset(std::vector<int> members) : m_(std::move(members)) {
  std::sort(m_.begin(), m_.end());
  m_.erase(std::unique(m_.begin(), m_.end()), m_.end());
}

bool RootSubset::contains(int root) const { return std::binary_search(m_.begin(), m_.end(), root); }

bool RootSubset::contains(const RootSubset& other) const {
  return std::includes(m_.begin(), m_.end(), other.m_.begin(), other.m_.end());
}

std::int64_t NpComponent::coeff(int root) const {
  for (std::size_t i = 0; i < gamma.size(); ++i)
    if (gamma[i] == root) return c.empty() ? 0 : c[i];
  throw InternalError("root not in component");
}

std::vector<int> NpDecomposition::gamma_prime() const {
  std::vector<int> out;
  for (const auto& c : components) out.insert(out.end(), c.gamma_prime.begin(), c.gamma_prime.end());
  std::sort(out.begin(), out.end());
  return out;
}

int NpDecomposition::component_of(int root) const {
  for (std::size_t i = 0; i < components.size(); ++i)
    if (std::binary_search(components[i].gamma.begin(), components[i].gamma.end(), root))
      return static_cast<int>(i);
  return -1;
}

namespace {

RatMatrix coord_matrix(const RootSystem& rs, const std::vector<int>& roots) {
  RatMatrix m;
  for (int r : roots) m.push_back(to_rat(rs.root(r)));
  return m;
}

}  // namespace

bool linearly_independent(const RootSystem& rs, const std::vector<int>& roots) {
  if (roots.empty()) return true;
  return rank(coord_matrix(rs, roots)) == roots.size();
}

bool is_np_subset(const RootSystem& rs, const std::vector<int>& roots) {
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (roots[i] == roots[j]) return false;
      if (rs.inner_scaled(roots[i], roots[j]) > 0) return false;
    }
  return true;
}

bool is_simple_subsystem(const RootSystem& rs, const std::vector<int>& roots) {
  return is_np_subset(rs, roots) && linearly_independent(rs, roots);
}

RootSubset subsystem_of(const RootSystem& rs, const std::vector<int>& roots) {
  std::vector<char> in(rs.num_roots(), 0);
  std::vector<int> all;
  for (int r : roots)
    if (!in[r]) {
      in[r] = 1;
      all.push_back(r);
    }
  for (std::size_t head = 0; head < all.size(); ++head)
    for (int g : roots) {
      int img = rs.reflect(g, all[head]);
      if (!in[img]) {
        in[img] = 1;
        all.push_back(img);
      }
    }
  return RootSubset(std::move(all));
}

std::vector<std::vector<int>> orthogonal_components(const RootSystem& rs,
                                                    const std::vector<int>& roots) {
  std::vector<int> sorted = roots;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> comp(sorted.size(), -1);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < sorted.size(); ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      out[id].push_back(sorted[v]);
      for (std::size_t w = 0; w < sorted.size(); ++w)
        if (comp[w] < 0 && rs.inner_scaled(sorted[v], sorted[w]) != 0) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

std::vector<int> extra_root_choices(const RootSystem& rs, const std::vector<int>& component) {
  std::vector<int> out;
  for (int theta : component) {
    std::vector<int> rest;
    for (int r : component)
      if (r != theta) rest.push_back(r);
    if (!linearly_independent(rs, rest)) continue;
    if (subsystem_of(rs, rest).contains(theta)) out.push_back(theta);
  }
  return out;
}

NpDecomposition np_decompose(const RootSystem& rs, const std::vector<int>& roots) {
  if (!is_np_subset(rs, roots)) {
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j)
        if (roots[i] == roots[j] || rs.inner_scaled(roots[i], roots[j]) > 0)
          throw ValidationError("not an np subset: roots " + std::to_string(roots[i]) + " and " +
                                std::to_string(roots[j]) + " form an acute pair");
  }
  NpDecomposition dec;
  for (auto& comp : orthogonal_components(rs, roots)) {
    NpComponent c;
    c.gamma = comp;
    if (linearly_independent(rs, comp)) {
      c.gamma_prime = comp;
      dec.components.push_back(std::move(c));
      continue;
    }
    auto choices = extra_root_choices(rs, comp);
    ensure(!choices.empty(), "dependent np component without an admissible extra root");
    int pick = choices.front();
    for (int t : choices)
      if (!rs.is_positive(t)) {
        pick = t;
        break;
      }
    c.extra = pick;
    for (int r : comp)
      if (r != pick) c.gamma_prime.push_back(r);
    // Relation: coordinates of -extra in the basis gamma_prime.
    SimpleCoords sc(rs, c.gamma_prime);
    IntVec coords = sc.coords(rs.negate(pick));
    c.c.assign(comp.size(), 0);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (comp[i] == pick) {
        c.c[i] = 1;
        continue;
      }
      auto it = std::find(c.gamma_prime.begin(), c.gamma_prime.end(), comp[i]);
      std::int64_t v = coords[it - c.gamma_prime.begin()];
      ensure(v > 0, "relation coefficient is not positive");
      c.c[i] = v;
    }
    dec.components.push_back(std::move(c));
  }
  return dec;
}

SimpleCoords::SimpleCoords(const RootSystem& rs, std::vector<int> simple)
    : rs_(&rs), simple_(std::move(simple)) {
  std::size_t k = simple_.size();
  RatMatrix g(k, RatVec(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g[i][j] = rs.inner(simple_[i], simple_[j]);
  if (k > 0) gram_inv_ = inverse(g);
}

IntVec SimpleCoords::coords(int root) const {
  std::size_t k = simple_.size();
  RatVec p(k);
  for (std::size_t j = 0; j < k; ++j) p[j] = rs_->inner(root, simple_[j]);
  IntVec out(k);
  for (std::size_t i = 0; i < k; ++i) {
    Rat x = dot(gram_inv_[i], p);
    ensure(is_integer(x), "root outside the lattice of the simple system");
    out[i] = to_int64(x);
  }
  return out;
}

RatVec SimpleCoords::coords(const Vector& v) const {
  std::size_t k = simple_.size();
  RatVec p(k);
  for (std::size_t j = 0; j < k; ++j) p[j] = rs_->inner(simple_[j], v);
  return mat_vec(gram_inv_, p);
}

std::vector<int> simple_system(const RootSystem& rs, const RootSubset& psi,
                               const std::function<bool(int)>& positive) {
  std::vector<int> pos;
  for (int r : psi)
    if (positive(r)) pos.push_back(r);
  std::vector<char> in(rs.num_roots(), 0);
  for (int r : pos) in[r] = 1;
  std::vector<int> out;
  for (int a : pos) {
    bool simple = true;
    for (int b : pos)
      if (b != a && !in[rs.reflect(a, b)]) {
        simple = false;
        break;
      }
    if (simple) out.push_back(a);
  }
  return out;
}

std::vector<int> simple_system(const RootSystem& rs, const RootSubset& psi) {
  return simple_system(rs, psi, [&](int r) { return rs.is_positive(r); });
}

int highest_root_of(const RootSystem& rs, const std::vector<int>& simple) {
  SimpleCoords sc(rs, simple);
  auto sub = subsystem_of(rs, simple);
  int best = -1;
  std::int64_t best_h = 0;
  for (int r : sub) {
    auto c = sc.coords(r);
    std::int64_t h = std::accumulate(c.begin(), c.end(), std::int64_t{0});
    if (best < 0 || h > best_h) {
      best = r;
      best_h = h;
    }
  }
  return best;
}

int highest_short_root_of(const RootSystem& rs, const std::vector<int>& simple) {
  SimpleCoords sc(rs, simple);
  auto sub = subsystem_of(rs, simple);
  int best = -1;
  Rat best_h = 0;
  for (int r : sub) {
    auto c = sc.coords(r);
    Rat h = 0;
    for (std::size_t j = 0; j < simple.size(); ++j)
      h += Rat(static_cast<long>(c[j])) * rs.norm2(simple[j]) / rs.norm2(r);
    if (best < 0 || h > best_h) {
      best = r;
      best_h = h;
    }
  }
  return best;
}

IntMatrix cartan_of(const RootSystem& rs, const std::vector<int>& simple) {
  std::size_t k = simple.size();
  IntMatrix a(k, IntVec(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i][j] = rs.pairing(simple[j], simple[i]);
  return a;
}

std::string subsystem_type(const RootSystem& rs, const RootSubset& psi) {
  if (psi.empty()) return "0";
  auto simple = simple_system(rs, psi);
  std::vector<std::string> parts;
  for (const auto& comp : orthogonal_components(rs, simple)) {
    std::string s = identify_cartan(cartan_of(rs, comp)).to_string();
    bool all_short = true;
    for (int r : comp)
      if (rs.is_long(r)) all_short = false;
    if (all_short && rs.length_ratio(rs.component_of_root(comp[0])) > 1) s += "~";
    parts.push_back(s);
  }
  std::sort(parts.begin(), parts.end(), [](const std::string& a, const std::string& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    if (a.size() != b.size()) return a.size() > b.size();
    return a > b;
  });
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "x" : "") + parts[i];
  return out;
}

bool is_closed(const RootSystem& rs, const RootSubset& psi) {
  const auto& m = psi.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      IntVec s = rs.root(m[i]);
      const auto& b = rs.root(m[j]);
      for (std::size_t k = 0; k < s.size(); ++k) s[k] += b[k];
      int idx = rs.find(s);
      if (idx >= 0 && !psi.contains(idx)) return false;
    }
  return true;
}

bool is_dual_closed(const RootSystem& rs, const RootSubset& psi) {
  auto dual = dual_of(rs);
  std::vector<int> img;
  for (int r : psi) img.push_back(dual.dual_index[r]);
  return is_closed(dual.system, RootSubset(img));
}

std::vector<ElementaryExtension> elementary_extensions(const RootSystem& rs, const RootSubset& psi) {
  auto simple = simple_system(rs, psi);
  auto comps = orthogonal_components(rs, simple);
  std::vector<ElementaryExtension> out;
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const auto& comp = comps[ci];
    int omega = highest_root_of(rs, comp);
    int omega_dual = highest_short_root_of(rs, comp);
    std::vector<std::pair<int, bool>> thetas{{omega, false}};
    if (omega_dual != omega) thetas.push_back({omega_dual, true});
    for (auto [theta, dual] : thetas) {
      for (int gamma : comp) {
        std::vector<int> gens, para;
        for (int r : simple)
          if (r != gamma) {
            gens.push_back(r);
            para.push_back(r);
          }
        gens.push_back(rs.negate(theta));
        ElementaryExtension e;
        e.component = static_cast<int>(ci);
        e.theta = theta;
        e.dual_chamber = dual;
        e.deleted = gamma;
        e.subsystem = subsystem_of(rs, gens);
        e.parabolic = subsystem_of(rs, para);
        ensure(psi.contains(e.subsystem), "extension subsystem escapes psi");
        ensure(e.subsystem.contains(e.parabolic) && e.subsystem.size() > e.parabolic.size(),
               "extension subsystem does not strictly contain the parabolic one");
        out.push_back(std::move(e));
      }
    }
  }
  return out;
}

std::optional<ExtensionStep> extension_step(const RootSystem& rs, const RootSubset& psi) {
  if (static_cast<int>(psi.size()) == rs.num_roots()) return std::nullopt;
  auto simple = simple_system(rs, psi);
  for (int a = 0; a < rs.num_roots(); ++a) {
    if (psi.contains(a)) continue;
    bool anti = true;
    for (int g : simple)
      if (rs.inner_scaled(a, g) > 0) anti = false;
    if (!anti) continue;
    std::vector<int> gens = simple;
    gens.push_back(a);
    ExtensionStep step{subsystem_of(rs, gens),
                       linearly_independent(rs, gens) ? StepKind::Parabolic : StepKind::Elementary, a};
    return step;
  }
  throw InternalError("no anti-dominant root outside a proper subsystem");
}

RootSubset canonical_form(const std::vector<WeylElement>& group, const RootSubset& psi) {
  std::vector<int> best = psi.members(), img(psi.size());
  for (const auto& w : group) {
    for (std::size_t i = 0; i < psi.size(); ++i) img[i] = w(psi.members()[i]);
    std::sort(img.begin(), img.end());
    if (img < best) best = img;
  }
  return RootSubset(best);
}

namespace {

std::string fingerprint(const RootSystem& rs, const RootSubset& psi) {
  std::ostringstream os;
  os << subsystem_type(rs, psi) << '|' << psi.size() << '|' << is_closed(rs, psi);
  std::map<std::string, int> norms;
  for (int r : psi) norms[rs.norm2(r).get_str()]++;
  for (auto& [k, v] : norms) os << '|' << k << ':' << v;
  return os.str();
}

}  // namespace

Classification enumerate_subsystems(const RootSystem& rs, std::uint64_t bound) {
  Classification out;
  std::vector<WeylElement> group;
  try {
    group = weyl_group(rs, bound);
  } catch (const ResourceError&) {
    out.fingerprint_only = true;
  }
  std::vector<int> all(rs.num_roots());
  std::iota(all.begin(), all.end(), 0);
  RootSubset phi(all);

  std::map<std::string, RootSubset> reps;
  auto key_of = [&](const RootSubset& s) {
    if (out.fingerprint_only) return fingerprint(rs, s);
    std::string k;
    auto canon = canonical_form(group, s);
    for (int r : canon) k += std::to_string(r) + ",";
    return k;
  };
  std::vector<RootSubset> queue{phi};
  reps.emplace(key_of(phi), phi);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    RootSubset psi = queue[head];
    std::vector<RootSubset> children;
    auto simple = simple_system(rs, psi);
    for (int g : simple) {
      std::vector<int> rest;
      for (int r : simple)
        if (r != g) rest.push_back(r);
      children.push_back(subsystem_of(rs, rest));
    }
    for (auto& e : elementary_extensions(rs, psi)) children.push_back(std::move(e.subsystem));
    for (auto& c : children) {
      auto k = key_of(c);
      if (reps.emplace(k, c).second) queue.push_back(c);
    }
  }
  auto dual = dual_of(rs);
  for (auto& [k, s] : reps) {
    SubsystemClass cls;
    cls.representative = s;
    cls.type = subsystem_type(rs, s);
    cls.closed = is_closed(rs, s);
    std::vector<int> img;
    for (int r : s) img.push_back(dual.dual_index[r]);
    cls.dual_closed = is_closed(dual.system, RootSubset(img));
    out.classes.push_back(std::move(cls));
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const SubsystemClass& a, const SubsystemClass& b) {
    if (a.representative.size() != b.representative.size())
      return a.representative.size() < b.representative.size();
    if (a.type != b.type) return a.type < b.type;
    return a.representative < b.representative;
  });
  return out;
}

std::vector<WeylElement> np_stabilizer(const RootSystem& rs, const std::vector<int>& gamma,
                                       std::uint64_t bound) {
  require(rs.is_indecomposable(), "np_stabilizer needs an indecomposable root system");
  RootSubset g(gamma);
  std::vector<int> base;
  for (int j = 0; j < rs.rank(); ++j) base.push_back(rs.simple_root(j));
  RootSubset with_long(base), with_short(base);
  {
    auto a = base;
    a.push_back(rs.negate(rs.highest_root(0)));
    with_long = RootSubset(a);
    auto b = base;
    b.push_back(rs.negate(rs.highest_short_root(0)));
    with_short = RootSubset(b);
  }
  require(g == with_long || g == with_short,
          "np_stabilizer expects the simple roots together with minus a chamber root");
  std::vector<WeylElement> out;
  for (const auto& w : weyl_group(rs, bound)) {
    std::vector<int> img;
    for (int r : g) img.push_back(w(r));
    if (RootSubset(img) == g) out.push_back(w);
  }
  return out;
}

IntMatrix DynkinDiagram::cartan() const {
  std::size_t k = nodes.size();
  IntMatrix a(k, IntVec(k, 0));
  for (std::size_t i = 0; i < k; ++i) a[i][i] = 2;
  for (const auto& e : edges) {
    a[e.a][e.b] = e.cab;
    a[e.b][e.a] = e.cba;
  }
  return a;
}

std::string DynkinDiagram::render() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    os << "node " << i << ": root " << nodes[i].root << ", |r|^2 = " << nodes[i].norm2.get_str() << "\n";
  for (const auto& e : edges) {
    int b = e.bonds();
    std::string link;
    if (e.cab == e.cba) {
      link = b == 1 ? "---" : b == 4 ? "<=>" : "===";
    } else {
      std::string bar = b == 2 ? "=" : "-";
      // The arrow points at the shorter root, the node with the larger |c|.
      link = std::abs(e.cab) > std::abs(e.cba) ? bar + "<" + bar : bar + ">" + bar;
      if (b == 3) link = std::abs(e.cab) > std::abs(e.cba) ? "=<<=" : "=>>=";
    }
    os << e.a << " " << link << " " << e.b << "\n";
  }
  return os.str();
}

DynkinDiagram dynkin_diagram(const RootSystem& rs, const std::vector<int>& roots) {
  require(is_np_subset(rs, roots), "Dynkin diagrams are drawn for np subsets");
  DynkinDiagram d;
  for (int r : roots) d.nodes.push_back({r, rs.norm2(r)});
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      int cab = rs.pairing(roots[j], roots[i]);
      int cba = rs.pairing(roots[i], roots[j]);
      if (cab != 0) d.edges.push_back({static_cast<int>(i), static_cast<int>(j), cab, cba});
    }
  return d;
}

}  // namespace weylref
