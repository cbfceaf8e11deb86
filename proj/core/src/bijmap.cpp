#include "weylref/bijmap.hpp"

#include <algorithm>

#include "weylref/errors.hpp"

namespace weylref {

PsiXPair j_forward(const RootSystem& rs, const GFPair& p, std::optional<std::int64_t> verify_bound) {
  const auto& s = p.structure();
  const auto& info = *s.sigma_info;
  AdmissibleLattice x;
  for (int ci : s.sigma_pos_comp) {
    const auto& comp = s.comps[ci];
    if (!comp.np.dependent())
      x.blocks.push_back({XKind::Zero, 0});
    else
      x.blocks.push_back({comp.extra_long ? XKind::P : XKind::PDual, p.K(ci)});
  }
  IntVec y;
  for (int r : info.simple) {
    auto [ci, j] = s.where[r];
    y.push_back(p.r(ci, j));
  }
  PsiXPair out(s.sigma_info, x, y);
  if (verify_bound)
    ensure(roots_of_gf(rs, p, *verify_bound) == roots_of_psix(rs, out, *verify_bound),
           "j_forward changed the root set");
  return out;
}

namespace {

struct AffLevel {
  int root;
  std::int64_t level;
};

bool positive_aff(const RootSystem& rs, int root, std::int64_t level) {
  return level > 0 || (level == 0 && rs.is_positive(root));
}

}  // namespace

GFDatum j_inverse_minimal(const RootSystem& rs, const PsiXPair& p) {
  std::vector<AffLevel> cand;
  for (int r : p.info().psi) {
    auto z = p.z(r);
    std::int64_t lo = rs.is_positive(r) ? 0 : 1;
    if (z.modulus == 0) {
      if (z.offset >= lo) cand.push_back({r, z.offset});
      continue;
    }
    cand.push_back({r, lo + mod_floor(z.offset - lo, z.modulus)});
  }
  std::vector<std::pair<int, std::int64_t>> simple;
  for (const auto& x : cand) {
    bool ok = true;
    for (const auto& y : cand) {
      if (y.root == x.root) continue;
      std::int64_t lvl = y.level - rs.pairing(y.root, x.root) * x.level;
      if (!positive_aff(rs, rs.reflect(x.root, y.root), lvl)) {
        ok = false;
        break;
      }
    }
    if (ok) simple.push_back({x.root, x.level});
  }
  return GFDatum::from_pairs(std::move(simple));
}

SubAlcoveContext make_context(const RootSystem& rs, const PsiXPair& p) {
  SubAlcoveContext ctx;
  ctx.info = p.info_ptr();
  ctx.xprime = p.xprime();
  ctx.yprime = yprime_lattice(rs, p);
  ctx.n.assign(rs.num_roots(), 0);
  for (int r : p.info().psi) ctx.n[r] = p.n_of(r);
  BigMatrix gens;
  for (const auto& y : ctx.yprime.basis) {
    BigVec row;
    for (int sj : ctx.info->simple) {
      Rat v = rs.inner(sj, y);
      ensure(is_integer(v), "Y' is not in the coweight lattice");
      row.push_back(v.get_num());
    }
    gens.push_back(row);
  }
  ctx.yprime_coords = lattice_basis(gens);
  return ctx;
}

namespace {

std::int64_t slab_index(const Rat& t, std::int64_t n) {
  if (n == 0) return t >= 0 ? 0 : -1;
  Int k = floor_rat(t / Rat(static_cast<long>(n)));
  return k.get_si();
}

// <r, v> - c, required to be positive on the alcove.
struct Functional {
  int root;
  std::int64_t c;
};

}  // namespace

bool LowerClosedAlcove::contains(const RootSystem& rs, const Vector& v) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (slab_index(rs.inner(roots[i], v), spacing[i]) != slab[i]) return false;
  return true;
}

LowerClosedAlcove locate_lower_closure(const RootSystem& rs, const SubAlcoveContext& ctx, const Vector& v) {
  rs.check_vector(v);
  const auto& info = *ctx.info;
  RatVec e;
  for (int s : info.simple) e.push_back(rs.inner(s, v));
  require(info.point(e) == v, "point does not lie in the span of psi");

  LowerClosedAlcove out;
  std::vector<int> pos(rs.num_roots(), -1);
  for (int b : info.positive) {
    pos[b] = static_cast<int>(out.roots.size());
    out.roots.push_back(b);
    out.spacing.push_back(ctx.n[b]);
    out.slab.push_back(slab_index(rs.inner(b, v), ctx.n[b]));
  }
  auto positive_on_b = [&](int r, std::int64_t c) {
    int b = rs.is_positive(r) ? r : rs.negate(r);
    std::int64_t k = out.slab[pos[b]], n = out.spacing[pos[b]];
    if (rs.is_positive(r)) return n > 0 ? c <= k * n : (k == 0 && c <= 0);
    return n > 0 ? (k + 1) * n <= -c : (k == -1 && c <= 0);
  };
  std::vector<Functional> cand;
  for (std::size_t i = 0; i < out.roots.size(); ++i) {
    int b = out.roots[i];
    std::int64_t k = out.slab[i], n = out.spacing[i];
    if (n > 0 || k == 0) cand.push_back({b, k * n});
    if (n > 0 || k == -1) cand.push_back({rs.negate(b), -(k + 1) * n});
  }
  for (const auto& phi : cand) {
    bool wall = true;
    for (const auto& psi : cand) {
      if (psi.root == phi.root || psi.root == rs.negate(phi.root)) continue;
      if (!positive_on_b(rs.reflect(phi.root, psi.root), psi.c - phi.c * rs.pairing(psi.root, phi.root))) {
        wall = false;
        break;
      }
    }
    if (wall) out.walls.push_back({rs.negate(phi.root), Rat(static_cast<long>(-phi.c)), rs.is_positive(phi.root)});
  }
  return out;
}

Vector map_h(const RootSystem& rs, const SubAlcoveContext& ctx, const PsiXPair& p) {
  (void)rs;
  require(p.xprime() == ctx.xprime && p.info().psi == ctx.info->psi, "coset does not match the context");
  return p.a();
}

Vector map_k(const RootSystem& rs, const SubAlcoveContext& ctx, const Vector& d) {
  const auto& info = *ctx.info;
  auto alc = locate_lower_closure(rs, ctx, d);
  std::vector<std::int64_t> slab_of(rs.num_roots(), 0);
  for (std::size_t i = 0; i < alc.roots.size(); ++i) slab_of[alc.roots[i]] = alc.slab[i];
  std::vector<int> free;
  for (int j = 0; j < info.rank(); ++j)
    if (ctx.n[info.simple[j]] > 0) free.push_back(j);
  // The unique point of Y' in the closure of the alcove.
  std::optional<IntVec> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    IntVec e(info.rank(), 0);
    for (std::size_t t = 0; t < free.size(); ++t) {
      int j = free[t];
      std::int64_t n = ctx.n[info.simple[j]];
      e[j] = (slab_of[info.simple[j]] + static_cast<std::int64_t>((mask >> t) & 1)) * n;
    }
    bool ok = true;
    for (std::size_t i = 0; i < alc.roots.size() && ok; ++i) {
      std::int64_t t = info.pair(alc.roots[i], e), k = alc.slab[i], n = alc.spacing[i];
      ok = n > 0 ? (k * n <= t && t <= (k + 1) * n) : t == 0;
    }
    if (!ok) continue;
    BigVec be;
    for (auto x : e) be.push_back(static_cast<long>(x));
    if (!in_row_lattice(ctx.yprime_coords, be)) continue;
    ensure(!found, "alcove closure meets Y' twice");
    found = e;
  }
  ensure(found.has_value(), "alcove closure misses Y'");
  return d - info.point(*found);
}

GTriple map_g(const RootSystem& rs, const SubAlcoveContext& ctx, const Vector& d) {
  const auto& info = *ctx.info;
  auto alc = locate_lower_closure(rs, ctx, d);
  std::vector<std::int64_t> slab_of(rs.num_roots(), 0);
  for (std::size_t i = 0; i < alc.roots.size(); ++i) {
    require(alc.slab[i] == 0 || alc.slab[i] == -1, "point lies outside the domain D'");
    slab_of[alc.roots[i]] = alc.slab[i];
  }
  auto positive = [&](int r) {
    return rs.is_positive(r) ? slab_of[r] == 0 : slab_of[rs.negate(r)] == -1;
  };
  GTriple out;
  out.gamma_prime = simple_system(rs, info.psi, positive);
  std::vector<std::vector<int>> by_comp(info.components.size());
  for (int g : out.gamma_prime) by_comp[info.root_comp[g]].push_back(g);
  std::vector<std::pair<int, std::int64_t>> pairs;
  for (int g : out.gamma_prime) {
    Rat v = rs.inner(g, d);
    require(is_integer(v), "point is not in the coweight lattice of psi");
    pairs.push_back({g, to_int64(v)});
  }
  for (std::size_t c = 0; c < info.components.size(); ++c) {
    const auto& b = ctx.xprime.blocks[c];
    if (b.kind == XKind::Zero) continue;
    int top = b.kind == XKind::P ? highest_root_of(rs, by_comp[c]) : highest_short_root_of(rs, by_comp[c]);
    int extra = rs.negate(top);
    pairs.push_back({extra, b.m + to_int64(rs.inner(extra, d))});
  }
  out.datum = GFDatum::from_pairs(std::move(pairs));
  return out;
}

GFDatum j_inverse_alcove(const RootSystem& rs, const PsiXPair& p) {
  auto ctx = make_context(rs, p);
  Vector d = map_h(rs, ctx, p);
  Vector dp = map_k(rs, ctx, d);
  return map_g(rs, ctx, dp).datum;
}

}  // namespace weylref
