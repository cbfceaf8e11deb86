#include <algorithm>
#include <numeric>

#include "weylref/errors.hpp"
#include "weylref/refsub.hpp"

namespace weylref {

std::string to_string(XKind k) {
  switch (k) {
    case XKind::Zero: return "zero";
    case XKind::P: return "P";
    default: return "Pdual";
  }
}

XKind parse_xkind(const std::string& s) {
  if (s == "zero" || s == "0") return XKind::Zero;
  if (s == "P") return XKind::P;
  if (s == "Pdual" || s == "Pcirc" || s == "P0") return XKind::PDual;
  throw ValidationError("unknown lattice kind '" + s + "'");
}

bool ZFamily::contains(std::int64_t n) const {
  if (modulus == 0) return n == offset;
  return mod_floor(n - offset, modulus) == 0;
}

bool difference_contained(const ZFamily& A, std::int64_t c, const ZFamily& B, const ZFamily& C) {
  std::int64_t p = A.offset - c * B.offset;
  std::int64_t g = std::gcd(A.modulus, std::abs(c) * B.modulus);
  if (g == 0) return C.contains(p);
  if (C.modulus == 0 || g % C.modulus != 0) return false;
  return C.contains(p);
}

PsiXPair::PsiXPair(std::shared_ptr<const SubsystemInfo> info, AdmissibleLattice x, IntVec y)
    : info_(std::move(info)), x_(std::move(x)), y_(std::move(y)) {
  require(x_.blocks.size() == info_->components.size(),
          "admissible lattice has " + std::to_string(x_.blocks.size()) + " blocks but psi has " +
              std::to_string(info_->components.size()) + " components");
  require(static_cast<int>(y_.size()) == info_->rank(), "coordinate vector has the wrong size");
  for (std::size_t c = 0; c < x_.blocks.size(); ++c) {
    auto& b = x_.blocks[c];
    if (b.kind == XKind::Zero) {
      b.m = 0;
      continue;
    }
    require(b.m >= 1, "lattice multiplier must be positive");
    if (b.kind == XKind::PDual && info_->length_ratio[c] == 1) b.kind = XKind::P;
  }
  n_simple_.resize(y_.size());
  for (int j = 0; j < info_->rank(); ++j) {
    n_simple_[j] = n_of(info_->simple[j]);
    if (n_simple_[j] > 0) y_[j] = mod_floor(y_[j], n_simple_[j]);
  }
}

std::int64_t PsiXPair::n_of(int root) const {
  int c = info_->root_comp[root];
  if (c < 0) throw InternalError("root outside psi");
  const auto& b = x_.blocks[c];
  switch (b.kind) {
    case XKind::Zero: return 0;
    case XKind::P: return b.m;
    default: return b.m * (info_->long_in_comp[root] ? info_->length_ratio[c] : 1);
  }
}

ZFamily PsiXPair::z(int root) const {
  ZFamily zf{info_->pair(root, y_), n_of(root)};
  if (zf.modulus > 0) zf.offset = mod_floor(zf.offset, zf.modulus);
  return zf;
}

bool PsiXPair::operator==(const PsiXPair& o) const {
  return info_->psi == o.info_->psi && x_ == o.x_ && y_ == o.y_;
}

PsiXPair make_psix(std::shared_ptr<const SubsystemInfo> info, const AdmissibleLattice& x, const IntVec& y) {
  return PsiXPair(std::move(info), x, y);
}

PsiXPair validate_psix(const RootSystem& rs, const RootSubset& psi, const Vector& a,
                       const AdmissibleLattice& x) {
  rs.check_vector(a);
  auto info = make_subsystem_info(rs, psi);
  IntVec y;
  for (int s : info->simple) {
    Rat v = rs.inner(s, a);
    require(is_integer(v), "a is not in the coweight lattice of psi");
    y.push_back(to_int64(v));
  }
  require(info->point(y) == a, "a does not lie in the span of psi");
  PsiXPair p(info, x, y);
  ensure(condition_z_holds(rs, p), "condition (Z) fails for an admissible lattice");
  return p;
}

bool condition_z_holds(const RootSystem& rs, const PsiXPair& p) {
  const auto& psi = p.info().psi.members();
  std::vector<ZFamily> z(rs.num_roots());
  for (int r : psi) z[r] = p.z(r);
  for (int a : psi)
    for (int b : psi)
      if (!difference_contained(z[b], rs.pairing(b, a), z[a], z[rs.reflect(a, b)])) return false;
  return true;
}

std::vector<AffRoot> roots_of_psix(const RootSystem& rs, const PsiXPair& p, std::int64_t bound) {
  (void)rs;
  require(bound >= 0, "level bound must be non-negative");
  std::vector<AffRoot> out;
  for (int r : p.info().psi) {
    auto zf = p.z(r);
    if (zf.modulus == 0) {
      if (std::abs(zf.offset) <= bound) out.push_back({r, zf.offset});
      continue;
    }
    std::int64_t start = zf.offset + zf.modulus * floor_div(-bound - zf.offset + zf.modulus - 1, zf.modulus);
    for (std::int64_t n = start; n <= bound; n += zf.modulus) out.push_back({r, n});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_affroot(const PsiXPair& p, const AffRoot& x) {
  if (!p.info().psi.contains(x.root)) return false;
  return p.z(x.root).contains(x.level);
}

LatticeData xprime_lattice(const PsiXPair& p) {
  LatticeData l{LatticeKind::Intermediate, {}};
  for (int j = 0; j < p.info().rank(); ++j)
    if (p.n_simple(j) > 0) l.basis.push_back(p.info().coweights[j] * Rat(static_cast<long>(p.n_simple(j))));
  return l;
}

LatticeData yprime_lattice(const RootSystem& rs, const PsiXPair& p) {
  LatticeData l{LatticeKind::Intermediate, {}};
  const auto& info = p.info();
  for (int j = 0; j < info.rank(); ++j) {
    int c = info.comp_of_simple[j];
    const auto& b = p.xprime().blocks[c];
    if (b.kind == XKind::Zero) continue;
    int s = info.simple[j];
    std::int64_t scale = b.m;
    if (b.kind == XKind::PDual && info.long_in_comp[s]) scale *= info.length_ratio[c];
    l.basis.push_back(rs.coroot(s) * Rat(static_cast<long>(scale)));
  }
  return l;
}

namespace {

// Image of psi under w, with blocks carried along the component map.
struct Transported {
  std::shared_ptr<const SubsystemInfo> info;
  AdmissibleLattice x;
};

Transported transport(const RootSystem& rs, const WeylElement& w, const PsiXPair& p) {
  std::vector<int> img;
  for (int r : p.info().psi) img.push_back(w(r));
  auto info = make_subsystem_info(rs, RootSubset(img));
  AdmissibleLattice x;
  x.blocks.resize(info->components.size());
  for (std::size_t c = 0; c < p.info().components.size(); ++c) {
    int root = p.info().simple[p.info().components[c].front()];
    x.blocks[info->root_comp[w(root)]] = p.xprime().blocks[c];
  }
  return {info, x};
}

std::int64_t int_pairing(const RootSystem& rs, int root, const Vector& gamma) {
  Rat v = rs.inner(root, gamma);
  require(is_integer(v), "translation does not pair integrally with the roots of psi");
  return to_int64(v);
}

}  // namespace

PsiXPair act_on_psix(const RootSystem& rs, const ExtAffElement& g, const PsiXPair& p) {
  // g = w t_gamma = t_{w gamma} w.
  auto t = transport(rs, g.w, p);
  auto winv = inverse(rs, g.w);
  IntVec y;
  for (int s : t.info->simple) {
    int u = winv(s);
    y.push_back(int_pairing(rs, u, g.gamma) + p.info().pair(u, p.y()));
  }
  return PsiXPair(t.info, t.x, y);
}

std::vector<ExtAffElement> elements_of_psix(const RootSystem& rs, const PsiXPair& p, std::int64_t coeff_bound) {
  require(coeff_bound >= 0, "coefficient bound must be non-negative");
  auto group = reflection_subgroup(rs, p.info().simple);
  auto Y = yprime_lattice(rs, p).basis;
  Vector a = p.a();
  std::vector<Vector> translations;
  IntVec c(Y.size(), -coeff_bound);
  while (true) {
    Vector t(rs.rank());
    for (std::size_t i = 0; i < Y.size(); ++i) t += Y[i] * Rat(static_cast<long>(c[i]));
    translations.push_back(std::move(t));
    std::size_t i = 0;
    while (i < c.size() && c[i] == coeff_bound) {
      c[i] = -coeff_bound;
      ++i;
    }
    if (i == c.size()) break;
    ++c[i];
  }
  std::vector<ExtAffElement> out;
  for (const auto& w : group) {
    auto winv = inverse(rs, w);
    Vector base = winv.apply(a) - a;
    for (const auto& t : translations) out.push_back({w, base + winv.apply(t)});
  }
  return out;
}

PointwiseStabilizer pointwise_stabilizer(const RootSystem& rs, const PsiXPair& p, const LatticeData& R) {
  PointwiseStabilizer out;
  std::vector<int> perp;
  for (int r = 0; r < rs.num_roots(); ++r) {
    bool ok = true;
    for (int s : p.info().simple)
      if (rs.inner_scaled(r, s) != 0) ok = false;
    if (ok) perp.push_back(r);
  }
  out.finite_part = RootSubset(perp);
  out.simple = simple_system(rs, out.finite_part);
  if (p.info().rank() == 0) {
    out.translations = R.basis;
    return out;
  }
  BigMatrix m(p.info().rank(), BigVec(R.basis.size()));
  for (int j = 0; j < p.info().rank(); ++j)
    for (std::size_t i = 0; i < R.basis.size(); ++i) m[j][i] = int_pairing(rs, p.info().simple[j], R.basis[i]);
  for (const auto& x : integer_kernel(m, R.basis.size())) {
    Vector v(rs.rank());
    for (std::size_t i = 0; i < x.size(); ++i) v += R.basis[i] * Rat(x[i]);
    out.translations.push_back(std::move(v));
  }
  return out;
}

bool centralizes(const RootSystem& rs, const ExtAffElement& g, const PsiXPair& p) {
  const auto& info = p.info();
  for (std::size_t c = 0; c < info.components.size(); ++c) {
    bool fixes = true, negates = p.xprime().blocks[c].kind == XKind::Zero;
    for (int j : info.components[c]) {
      int s = info.simple[j];
      Rat v = rs.inner(s, g.gamma);
      if (g.w(s) != s || v != 0) fixes = false;
      if (g.w(s) != rs.negate(s) || v != Rat(static_cast<long>(-2 * p.y()[j]))) negates = false;
    }
    if (!fixes && !negates) return false;
  }
  return true;
}

bool normalizes(const RootSystem& rs, const ExtAffElement& g, const PsiXPair& p) {
  std::vector<int> img;
  for (int r : p.info().psi) img.push_back(g.w(r));
  if (RootSubset(img) != p.info().psi) return false;
  auto t = transport(rs, g.w, p);
  if (!(t.x == p.xprime())) return false;
  auto winv = inverse(rs, g.w);
  for (int j = 0; j < p.info().rank(); ++j) {
    int u = winv(p.info().simple[j]);
    Rat gv = rs.inner(u, g.gamma);
    if (!is_integer(gv)) return false;
    std::int64_t d = to_int64(gv) - p.y()[j] + p.info().pair(u, p.y());
    std::int64_t n = p.n_simple(j);
    if (n == 0 ? d != 0 : mod_floor(d, n) != 0) return false;
  }
  return true;
}

std::optional<WeylElement> same_orbit(const RootSystem& rs, const PsiXPair& p1, const PsiXPair& p2,
                                      const LatticeData& R, const std::vector<WeylElement>& group) {
  const auto& info = p2.info();
  int k = info.rank();
  BigMatrix gens;
  for (const auto& b : R.basis) {
    BigVec row(k);
    for (int j = 0; j < k; ++j) row[j] = int_pairing(rs, info.simple[j], b);
    gens.push_back(row);
  }
  for (int j = 0; j < k; ++j)
    if (p2.n_simple(j) > 0) {
      BigVec row(k);
      row[j] = static_cast<long>(p2.n_simple(j));
      gens.push_back(row);
    }
  BigMatrix basis = lattice_basis(gens);
  for (const auto& w : group) {
    std::vector<int> img;
    for (int r : p1.info().psi) img.push_back(w(r));
    if (RootSubset(img) != info.psi) continue;
    auto t = transport(rs, w, p1);
    if (!(t.x == p2.xprime())) continue;
    auto winv = inverse(rs, w);
    BigVec v(k);
    for (int j = 0; j < k; ++j) v[j] = static_cast<long>(p2.y()[j] - p1.info().pair(winv(info.simple[j]), p1.y()));
    if (in_row_lattice(basis, v)) return w;
  }
  return std::nullopt;
}

std::vector<std::string> isomorphism_type(const RootSystem& rs, const GFPair& p) {
  std::vector<std::string> out;
  for (const auto& c : p.structure().comps) {
    std::string t = identify_cartan(cartan_of(rs, c.np.gamma_prime)).to_string();
    if (!c.np.dependent())
      out.push_back("finite " + t);
    else
      out.push_back("affine " + t + (c.extra_long ? "" : " (dual)"));
  }
  return out;
}

std::vector<std::string> isomorphism_type(const RootSystem& rs, const PsiXPair& p) {
  std::vector<std::string> out;
  const auto& info = p.info();
  for (std::size_t c = 0; c < info.components.size(); ++c) {
    std::vector<int> simple;
    for (int j : info.components[c]) simple.push_back(info.simple[j]);
    std::string t = identify_cartan(cartan_of(rs, simple)).to_string();
    switch (p.xprime().blocks[c].kind) {
      case XKind::Zero: out.push_back("finite " + t); break;
      case XKind::P: out.push_back("affine " + t); break;
      default: out.push_back("affine " + t + " (dual)");
    }
  }
  return out;
}

}  // namespace weylref
