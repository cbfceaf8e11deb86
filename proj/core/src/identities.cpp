#include "weylref/identities.hpp"

#include <algorithm>
#include <numeric>

#include "weylref/bijmap.hpp"
#include "weylref/errors.hpp"
#include "weylref/lattice.hpp"

namespace weylref {

namespace {

Int power(const Int& b, std::int64_t e) {
  Int r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= b;
  return r;
}

Int binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Ways to write each total up to M as sum of c_i f_i over the given weights.
std::vector<Int> weighted_counts(const std::vector<std::int64_t>& weights, std::int64_t M) {
  std::vector<Int> dp(M + 1, 0);
  dp[0] = 1;
  for (std::int64_t w : weights)
    for (std::int64_t t = w; t <= M; ++t) dp[t] += dp[t - w];
  return dp;
}

bool effective_pdual(const RootSystem& rs, XKind lattice) {
  return lattice == XKind::PDual && rs.length_ratio(0) > 1;
}

}  // namespace

DescentProfile descent_stats(const RootSystem& rs, XKind lattice, std::uint64_t weyl_bound) {
  require(rs.components().size() == 1, "descent statistics need an indecomposable root system");
  require(lattice != XKind::Zero, "lattice choice must be P or Pdual");
  DescentProfile prof;
  prof.lattice = effective_pdual(rs, lattice) ? XKind::PDual : XKind::P;
  int omega = prof.lattice == XKind::P ? rs.highest_root(0) : rs.highest_short_root(0);
  prof.omega_long = rs.is_long(omega);
  prof.k_phi = rs.length_ratio(0);
  prof.n_simple = rs.rank();
  for (int j = 0; j < rs.rank(); ++j) {
    prof.gamma.push_back(rs.simple_root(j));
    prof.c.push_back(rs.root(omega)[j]);
    if (rs.is_long(rs.simple_root(j))) ++prof.n_long_simple;
  }
  prof.gamma.push_back(rs.negate(omega));
  prof.c.push_back(1);
  prof.h = std::accumulate(prof.c.begin(), prof.c.end(), std::int64_t{0});
  prof.f_phi = cartan_determinant(rs);
  prof.d.assign(prof.h + 1, 0);
  for (const auto& w : weyl_group(rs, weyl_bound)) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < prof.gamma.size(); ++i)
      if (!rs.is_positive(w(prof.gamma[i]))) s += prof.c[i];
    prof.d[s] += 1;
  }
  return prof;
}

Int partition_p(const DescentProfile& prof, std::int64_t M) {
  if (M < 0) return 0;
  return weighted_counts(prof.c, M)[M];
}

Int partition_p_bounded(const DescentProfile& prof, std::int64_t M) {
  if (M < 0) return 0;
  std::vector<std::int64_t> w(prof.c.begin(), prof.c.end() - 1);
  auto dp = weighted_counts(w, M);
  return std::accumulate(dp.begin(), dp.end(), Int(0));
}

IdentityReport verify_identity(const DescentProfile& prof, std::int64_t m_min, std::int64_t m_max) {
  require(m_min >= 1 && m_min <= m_max, "M range must be a non-empty range of positive integers");
  IdentityReport rep;
  for (const auto& di : prof.d)
    if (di % prof.f_phi != 0) rep.divisible = false;
  rep.symmetric = symmetry_unimodality_report(prof).symmetric;
  for (std::int64_t M = m_min - prof.h; M <= m_max; ++M)
    if (partition_p(prof, M) != partition_p_bounded(prof, M)) rep.partitions_agree = false;
  bool all = true;
  for (std::int64_t M = m_min; M <= m_max; ++M) {
    IdentityCheck chk;
    chk.M = M;
    chk.lhs = 0;
    for (std::int64_t i = 0; i <= prof.h; ++i) chk.lhs += prof.d[i] * partition_p(prof, M - i);
    // Divide at the end so a failed divisibility check cannot hide in rounding.
    Int rem = chk.lhs % prof.f_phi;
    chk.lhs /= prof.f_phi;
    chk.rhs = power(Int(static_cast<long>(M)), prof.n_simple);
    if (!prof.omega_long) chk.rhs *= power(Int(prof.k_phi), prof.n_long_simple);
    chk.pass = rem == 0 && chk.lhs == chk.rhs;
    all = all && chk.pass;
    rep.checks.push_back(chk);
  }
  rep.pass = all && rep.divisible && rep.symmetric && rep.partitions_agree;
  return rep;
}

SymmetryReport symmetry_unimodality_report(const DescentProfile& prof) {
  SymmetryReport rep;
  rep.symmetric = true;
  for (std::int64_t i = 0; i <= prof.h; ++i)
    if (prof.d[i] != prof.d[prof.h - i]) rep.symmetric = false;
  rep.unimodal = true;
  for (std::int64_t i = 0; 2 * (i + 1) <= prof.h - 1; ++i)
    if (!(prof.d[i] < prof.d[i + 1])) rep.unimodal = false;
  return rep;
}

CyclicReport type_a_cyclic(int n, std::int64_t m_max, int n_bound) {
  require(n >= 1, "n must be positive");
  require(m_max >= 1, "M bound must be positive");
  if (n > n_bound) throw ResourceError("n = " + std::to_string(n) + " exceeds the bound " + std::to_string(n_bound));
  CyclicReport rep;
  rep.n = n;
  rep.d.assign(n + 2, 0);
  std::vector<int> sigma(n + 1);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<int> seq{n + 1};
  for (int i = 1; i <= n + 1; ++i) seq.push_back(i);
  do {
    int des = 0;
    for (int k = 1; k <= n + 1; ++k)
      if (sigma[seq[k - 1] - 1] > sigma[seq[k] - 1]) ++des;
    rep.d[des] += 1;
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  bool all = rep.d[0] == 0 && rep.d[n + 1] == 0;
  for (std::int64_t M = 1; M <= m_max; ++M) {
    IdentityCheck chk;
    chk.M = M;
    chk.lhs = 0;
    for (int i = 1; i <= n; ++i) chk.lhs += rep.d[i] * binomial(M + i - 1, n);
    Int rem = chk.lhs % (n + 1);
    chk.lhs /= n + 1;
    chk.rhs = power(Int(static_cast<long>(M)), n);
    chk.pass = rem == 0 && chk.lhs == chk.rhs;
    all = all && chk.pass;
    rep.checks.push_back(chk);
  }
  auto prof = descent_stats(RootSystem::build("A" + std::to_string(n)), XKind::P);
  rep.matches_descent_stats = prof.d == rep.d;
  rep.pass = all && rep.matches_descent_stats;
  return rep;
}

CountingReport counting_realization(const RootSystem& rs, XKind lattice, std::int64_t M) {
  require(M >= 1, "M must be positive");
  auto prof = descent_stats(rs, lattice);
  CountingReport rep;

  std::vector<int> all(rs.num_roots());
  std::iota(all.begin(), all.end(), 0);
  auto info = make_subsystem_info(rs, RootSubset(all));
  AdmissibleLattice x{{{prof.lattice, M}}};

  // Lattice points of D: coordinates 0 <= y_j < n_j.
  PsiXPair base(info, x, IntVec(rs.rank(), 0));
  IntVec bound(rs.rank());
  for (int j = 0; j < rs.rank(); ++j) bound[j] = base.n_simple(j);
  std::set<GFDatum> images;
  IntVec y(rs.rank(), 0);
  rep.lattice_points = 0;
  while (true) {
    rep.lattice_points += 1;
    images.insert(j_inverse_alcove(rs, PsiXPair(info, x, y)));
    int j = 0;
    while (j < rs.rank() && y[j] == bound[j] - 1) y[j++] = 0;
    if (j == rs.rank()) break;
    ++y[j];
  }
  rep.images = images.size();

  std::set<GFDatum> enumerated;
  std::vector<std::int64_t> f(prof.gamma.size());
  for (const auto& w : weyl_group(rs)) {
    std::vector<int> img;
    std::vector<std::int64_t> lo;
    for (int g : prof.gamma) {
      img.push_back(w(g));
      lo.push_back(rs.is_positive(w(g)) ? 0 : 1);
    }
    // f >= lo with sum c f = M.
    auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
      if (i + 1 == f.size()) {
        if (left >= lo[i] * prof.c[i] && left % prof.c[i] == 0) {
          f[i] = left / prof.c[i];
          std::vector<std::pair<int, std::int64_t>> pairs;
          for (std::size_t t = 0; t < f.size(); ++t) pairs.push_back({img[t], f[t]});
          enumerated.insert(GFDatum::from_pairs(std::move(pairs)));
        }
        return;
      }
      for (std::int64_t v = lo[i]; v * prof.c[i] <= left; ++v) {
        f[i] = v;
        self(self, i + 1, left - v * prof.c[i]);
      }
    };
    rec(rec, 0, M);
  }
  rep.enumerated = enumerated.size();
  rep.images_match = images == enumerated;

  Int lhs = 0;
  for (std::int64_t i = 0; i <= prof.h; ++i) lhs += prof.d[i] * partition_p(prof, M - i);
  ensure(lhs % prof.f_phi == 0, "descent-weighted count is not divisible by f");
  rep.formula = lhs / prof.f_phi;
  rep.pass = rep.images_match && rep.lattice_points == rep.formula &&
             Int(static_cast<unsigned long>(rep.enumerated)) == rep.formula;
  return rep;
}

}  // namespace weylref
