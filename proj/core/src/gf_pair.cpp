#include <algorithm>
#include <map>

#include "weylref/errors.hpp"
#include "weylref/refsub.hpp"

namespace weylref {

GFDatum GFDatum::from_pairs(std::vector<std::pair<int, std::int64_t>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  GFDatum d;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i && pairs[i].first == pairs[i - 1].first)
      throw ValidationError("root " + std::to_string(pairs[i].first) + " repeated in gamma");
    d.gamma.push_back(pairs[i].first);
    d.f.push_back(pairs[i].second);
  }
  return d;
}

std::int64_t GFDatum::f_of(int root) const {
  auto it = std::lower_bound(gamma.begin(), gamma.end(), root);
  if (it == gamma.end() || *it != root) throw InternalError("root not in gamma");
  return f[it - gamma.begin()];
}

std::shared_ptr<const GammaStructure> analyze_gamma(const RootSystem& rs, const std::vector<int>& gamma) {
  auto s = std::make_shared<GammaStructure>();
  s->gamma = gamma;
  std::sort(s->gamma.begin(), s->gamma.end());
  for (int r : s->gamma) require(r >= 0 && r < rs.num_roots(), "root index out of range");
  s->dec = np_decompose(rs, s->gamma);
  s->where.assign(rs.num_roots(), {-1, -1});
  for (std::size_t ci = 0; ci < s->dec.components.size(); ++ci) {
    GammaStructure::Component comp;
    comp.np = s->dec.components[ci];
    Rat mx = 0;
    for (int r : comp.np.gamma) mx = std::max(mx, rs.norm2(r));
    comp.extra_long = !comp.np.dependent() || rs.norm2(comp.np.extra) == mx;
    SimpleCoords sc(rs, comp.np.gamma_prime);
    comp.sigma = subsystem_of(rs, comp.np.gamma_prime).members();
    for (std::size_t j = 0; j < comp.sigma.size(); ++j) {
      int b = comp.sigma[j];
      comp.a.push_back(sc.coords(b));
      std::int64_t k = 1;
      if (!comp.extra_long) k = to_int64(rs.norm2(b) / rs.norm2(comp.np.extra));
      comp.kfac.push_back(k);
      s->where[b] = {static_cast<int>(ci), static_cast<int>(j)};
    }
    s->comps.push_back(std::move(comp));
  }
  s->sigma_info = make_subsystem_info(rs, subsystem_of(rs, s->dec.gamma_prime()));
  for (const auto& c : s->sigma_info->components) {
    int root = s->sigma_info->simple[c.front()];
    s->sigma_pos_comp.push_back(s->where[root].first);
  }
  return s;
}

GFPair::GFPair(std::shared_ptr<const GammaStructure> s, GFDatum d) : s_(std::move(s)), datum_(std::move(d)) {
  for (const auto& comp : s_->comps) {
    std::int64_t K = 0;
    if (comp.np.dependent())
      for (std::size_t i = 0; i < comp.np.gamma.size(); ++i) K += comp.np.c[i] * datum_.f_of(comp.np.gamma[i]);
    K_.push_back(K);
    std::vector<std::int64_t> rs;
    std::vector<std::int64_t> fp;
    for (int g : comp.np.gamma_prime) fp.push_back(datum_.f_of(g));
    for (const auto& a : comp.a) {
      std::int64_t r = 0;
      for (std::size_t t = 0; t < a.size(); ++t) r += a[t] * fp[t];
      rs.push_back(r);
    }
    r_.push_back(std::move(rs));
  }
}

std::vector<AffRoot> GFPair::simple_affine_roots() const {
  std::vector<AffRoot> out;
  for (std::size_t i = 0; i < datum_.gamma.size(); ++i) out.push_back({datum_.gamma[i], datum_.f[i]});
  return out;
}

namespace {

void check_datum_shape(const RootSystem& rs, const GFDatum& d) {
  require(d.gamma.size() == d.f.size(), "gamma and f have different lengths");
  require(std::is_sorted(d.gamma.begin(), d.gamma.end()) &&
              std::adjacent_find(d.gamma.begin(), d.gamma.end()) == d.gamma.end(),
          "gamma must be a set");
  for (int r : d.gamma) require(r >= 0 && r < rs.num_roots(), "root index out of range");
}

}  // namespace

GFPair validate_gf(const RootSystem& rs, const GFDatum& d, std::shared_ptr<const GammaStructure> s) {
  check_datum_shape(rs, d);
  for (std::size_t i = 0; i < d.gamma.size(); ++i) {
    require(d.f[i] >= 0, "f is negative on root " + std::to_string(d.gamma[i]));
    require(d.f[i] > 0 || rs.is_positive(d.gamma[i]),
            "f vanishes on the negative root " + std::to_string(d.gamma[i]));
  }
  if (!s) s = analyze_gamma(rs, d.gamma);
  require(s->gamma == d.gamma, "structure does not match gamma");
  return GFPair(std::move(s), d);
}

Compatibility is_compatible(const RootSystem& rs, const GFDatum& d) {
  check_datum_shape(rs, d);
  auto dec = np_decompose(rs, d.gamma);
  bool all_pos = true, all_neg = true, all_nonzero = true;
  for (const auto& c : dec.components) {
    if (!c.dependent()) continue;
    std::int64_t s = 0;
    for (std::size_t i = 0; i < c.gamma.size(); ++i) s += c.c[i] * d.f_of(c.gamma[i]);
    if (s <= 0) all_pos = false;
    if (s >= 0) all_neg = false;
    if (s == 0) all_nonzero = false;
  }
  if (all_pos || all_neg) return Compatibility::Compatible;
  if (all_nonzero) return Compatibility::StronglyCompatible;
  return Compatibility::Neither;
}

std::string to_string(Compatibility c) {
  switch (c) {
    case Compatibility::Compatible: return "compatible";
    case Compatibility::StronglyCompatible: return "strongly_compatible";
    default: return "neither";
  }
}

GFPair compatible_gf(const RootSystem& rs, const GFDatum& d) {
  require(is_compatible(rs, d) == Compatibility::Compatible, "(gamma, f) is not compatible");
  return GFPair(analyze_gamma(rs, d.gamma), d);
}

std::vector<AffRoot> roots_of_gf(const RootSystem& rs, const GFPair& p, std::int64_t bound) {
  (void)rs;
  require(bound >= 0, "level bound must be non-negative");
  std::vector<AffRoot> out;
  const auto& s = p.structure();
  for (std::size_t ci = 0; ci < s.comps.size(); ++ci) {
    const auto& comp = s.comps[ci];
    for (std::size_t j = 0; j < comp.sigma.size(); ++j) {
      std::int64_t base = p.r(ci, j);
      std::int64_t step = std::abs(p.K(ci) * comp.kfac[j]);
      if (step == 0) {
        if (std::abs(base) <= bound) out.push_back({comp.sigma[j], base});
        continue;
      }
      for (std::int64_t n = base + step * floor_div(-bound - base + step - 1, step); n <= bound; n += step)
        if (n >= -bound) out.push_back({comp.sigma[j], n});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_affroot(const GFPair& p, const AffRoot& x) {
  const auto& s = p.structure();
  auto [ci, j] = s.where[x.root];
  if (ci < 0) return false;
  std::int64_t base = p.r(ci, j);
  std::int64_t step = std::abs(p.K(ci) * s.comps[ci].kfac[j]);
  if (step == 0) return x.level == base;
  return mod_floor(x.level - base, step) == 0;
}

namespace {

// Coweights of gamma' inside its span, aligned with gamma'.
std::vector<Vector> span_coweights(const RootSystem& rs, const std::vector<int>& simple) {
  std::size_t k = simple.size();
  RatMatrix g(k, RatVec(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g[i][j] = rs.inner(simple[i], simple[j]);
  RatMatrix ginv = inverse(g);
  std::vector<Vector> out;
  for (std::size_t j = 0; j < k; ++j) {
    Vector w(rs.rank());
    for (std::size_t i = 0; i < k; ++i) w += rs.vector(simple[i]) * ginv[i][j];
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

GFAlcove alcove_of_gf(const RootSystem& rs, const GFPair& p) {
  GFAlcove out;
  const auto& d = p.datum();
  for (std::size_t i = 0; i < d.gamma.size(); ++i)
    out.walls.push_back({d.gamma[i], Rat(static_cast<long>(d.f[i])), false});
  RatMatrix rows;
  for (int g : d.gamma) {
    RatVec row(rs.rank());
    for (int j = 0; j < rs.rank(); ++j)
      for (int i = 0; i < rs.rank(); ++i) row[j] += Rat(static_cast<long>(rs.root(g)[i])) * rs.gram()[i][j];
    rows.push_back(row);
  }
  for (auto& v : kernel(rows, rs.rank())) out.free_directions.emplace_back(std::move(v));

  const auto& s = p.structure();
  for (std::size_t ci = 0; ci < s.comps.size(); ++ci) {
    const auto& np = s.comps[ci].np;
    auto om = span_coweights(rs, np.gamma_prime);
    GFAlcove::Part part;
    part.simplex = np.dependent();
    part.apex = Vector(rs.rank());
    for (std::size_t j = 0; j < om.size(); ++j)
      part.apex -= om[j] * Rat(static_cast<long>(d.f_of(np.gamma_prime[j])));
    for (int g : np.gamma_prime)
      ensure(rs.inner(g, part.apex) + Rat(static_cast<long>(d.f_of(g))) == 0, "apex misses a wall");
    if (part.simplex) {
      Rat K = static_cast<long>(p.K(ci));
      ensure(rs.inner(np.extra, part.apex) + Rat(static_cast<long>(d.f_of(np.extra))) == K,
             "apex value on the extra wall differs from K");
      for (std::size_t j = 0; j < om.size(); ++j) {
        Vector v = part.apex + om[j] * (K / Rat(static_cast<long>(np.coeff(np.gamma_prime[j]))));
        for (int g : np.gamma) {
          Rat val = rs.inner(g, v) + Rat(static_cast<long>(d.f_of(g)));
          bool on_wall = g != np.gamma_prime[j];
          ensure(on_wall ? val == 0 : val > 0, "simplex vertex has the wrong incidence");
        }
        part.others.push_back(std::move(v));
      }
    } else {
      part.others = om;
    }
    out.parts.push_back(std::move(part));
  }
  return out;
}

std::optional<QuadVal> volume_of_gf(const RootSystem& rs, const GFPair& p) {
  const auto& s = p.structure();
  auto gp = s.dec.gamma_prime();
  if (static_cast<int>(gp.size()) != rs.rank()) return std::nullopt;
  for (const auto& c : s.comps)
    if (!c.np.dependent()) return std::nullopt;
  Rat fdet = determinant(to_rat(cartan_of(rs, gp)));
  Rat under = 1 / fdet;
  for (int b : gp) under *= Rat(2) / rs.norm2(b);
  Rat factor = 1;
  for (std::size_t ci = 0; ci < s.comps.size(); ++ci) {
    const auto& np = s.comps[ci].np;
    std::size_t r = np.gamma_prime.size();
    Rat K = static_cast<long>(p.K(ci));
    Rat term = 1;
    for (std::size_t t = 0; t < r; ++t) term *= K / Rat(static_cast<long>(t + 1));
    for (int g : np.gamma_prime) term /= Rat(static_cast<long>(np.coeff(g)));
    factor *= term;
  }
  return QuadVal::sqrt_of(under) * factor;
}

IndexResult index_of_gf(const RootSystem& rs, const GFPair& sub, const GFPair& super) {
  std::int64_t bound = 0;
  for (auto f : sub.datum().f) bound = std::max(bound, std::abs(f));
  auto roots = roots_of_gf(rs, super, bound);
  for (const auto& x : sub.simple_affine_roots())
    require(std::binary_search(roots.begin(), roots.end(), x),
            "the first subgroup is not contained in the second");
  auto vsuper = volume_of_gf(rs, super);
  require(vsuper.has_value(), "the containing subgroup must have finite index");
  auto vsub = volume_of_gf(rs, sub);
  if (!vsub) return {false, 0};
  QuadVal ratio = *vsub / *vsuper;
  ensure(ratio.is_rational() && is_integer(ratio.coefficient()) && ratio.coefficient() > 0,
         "volume ratio " + ratio.to_string() + " is not a positive integer");
  return {true, ratio.coefficient().get_num()};
}

std::vector<ExtAffElement> coset_reps(const RootSystem& rs, const GFPair& p, const LatticeData& R,
                                      const std::vector<WeylElement>* group) {
  require(volume_of_gf(rs, p).has_value(), "coset representatives need a subgroup of finite index");
  std::vector<WeylElement> own;
  if (!group) {
    own = weyl_group(rs);
    group = &own;
  }
  const auto& s = p.structure();
  const auto& d = p.datum();
  auto gp = s.dec.gamma_prime();
  auto om = span_coweights(rs, gp);
  // Box for y_alpha = <alpha, gamma> over gamma'.
  std::vector<std::int64_t> lo, hi;
  for (int a : gp) {
    int ci = s.dec.component_of(a);
    std::int64_t c = s.comps[ci].np.coeff(a);
    lo.push_back(-d.f_of(a));
    hi.push_back(floor_div(p.K(ci) - c * d.f_of(a), c));
  }
  std::vector<ExtAffElement> out;
  IntVec y = lo;
  if (gp.empty()) return out;
  for (std::size_t j = 0; j < gp.size(); ++j)
    if (hi[j] < lo[j]) return out;
  while (true) {
    Vector gamma(rs.rank());
    for (std::size_t j = 0; j < gp.size(); ++j) gamma += om[j] * Rat(static_cast<long>(y[j]));
    if (lattice_membership(R, gamma)) {
      std::vector<std::int64_t> val;
      bool ok_any = true;
      for (int a : d.gamma) {
        Rat v = rs.inner(a, gamma);
        if (!is_integer(v)) {
          ok_any = false;
          break;
        }
        val.push_back(to_int64(v));
      }
      if (ok_any) {
        for (const auto& w : *group) {
          bool ok = true;
          for (std::size_t i = 0; i < d.gamma.size() && ok; ++i) {
            std::int64_t need = -d.f[i] + (rs.is_positive(w(d.gamma[i])) ? 0 : 1);
            if (val[i] < need) ok = false;
          }
          if (ok) {
            ExtAffElement g{w, gamma};
            for (const auto& x : p.simple_affine_roots())
              ensure(is_positive(rs, act_on_affroot(rs, g, x)), "coset representative fails positivity");
            out.push_back(std::move(g));
          }
        }
      }
    }
    std::size_t j = 0;
    while (j < y.size() && y[j] == hi[j]) {
      y[j] = lo[j];
      ++j;
    }
    if (j == y.size()) break;
    ++y[j];
  }
  return out;
}

}  // namespace weylref
