#include "weylref/lattice.hpp"

#include "weylref/errors.hpp"

namespace weylref {

Vector fundamental_coweight(const RootSystem& rs, int j) {
  // Solve gram * x = e_j.
  RatVec e(rs.rank());
  e[j] = 1;
  auto x = solve(rs.gram(), e);
  ensure(x.has_value(), "singular Gram matrix");
  return Vector(*x);
}

Int cartan_determinant(const RootSystem& rs) {
  Rat d = determinant(to_rat(rs.cartan()));
  return d.get_num();
}

LatticeData coroot_lattice(const RootSystem& rs) {
  LatticeData l{LatticeKind::Coroot, {}};
  for (int j = 0; j < rs.rank(); ++j) l.basis.push_back(rs.coroot(rs.simple_root(j)));
  return l;
}

LatticeData coweight_lattice(const RootSystem& rs) {
  LatticeData l{LatticeKind::Coweight, {}};
  for (int j = 0; j < rs.rank(); ++j) l.basis.push_back(fundamental_coweight(rs, j));
  return l;
}

LatticePair lattices(const RootSystem& rs) {
  LatticePair out{coroot_lattice(rs), coweight_lattice(rs), 0};
  // Express Q in P coordinates and read the index off the Hermite form.
  int n = rs.rank();
  BigMatrix m(n, BigVec(n));
  for (int j = 0; j < n; ++j) {
    auto x = lattice_coordinates(out.coweight, out.coroot.basis[j]);
    ensure(x.has_value(), "coroot outside the coweight span");
    for (int i = 0; i < n; ++i) {
      ensure(is_integer((*x)[i]), "coroot lattice not contained in coweight lattice");
      m[i][j] = (*x)[i].get_num();
    }
  }
  auto red = column_reduce(m);
  ensure(red.rank == static_cast<std::size_t>(n), "coroot lattice is not of full rank");
  Int idx = 1;
  for (int i = 0; i < n; ++i) {
    // Pivot of column i sits in the first row where it is nonzero.
    for (int r = 0; r < n; ++r)
      if (red.reduced[r][i] != 0) {
        idx *= abs(red.reduced[r][i]);
        break;
      }
  }
  Int det = abs(cartan_determinant(rs));
  ensure(idx == det, "[P:Q] = " + idx.get_str() + " but det(Cartan) = " + det.get_str());
  out.index = idx;
  return out;
}

std::optional<RatVec> lattice_coordinates(const LatticeData& lat, const Vector& v) {
  if (lat.basis.empty()) {
    if (v.is_zero()) return RatVec{};
    return std::nullopt;
  }
  std::size_t n = v.size();
  RatMatrix a(n, RatVec(lat.basis.size()));
  for (std::size_t j = 0; j < lat.basis.size(); ++j) {
    if (lat.basis[j].size() != n) throw ValidationError("lattice and vector dimensions differ");
    for (std::size_t i = 0; i < n; ++i) a[i][j] = lat.basis[j][i];
  }
  return solve(a, v.c);
}

bool lattice_membership(const LatticeData& lat, const Vector& v) {
  auto x = lattice_coordinates(lat, v);
  if (!x) return false;
  for (const auto& q : *x)
    if (!is_integer(q)) return false;
  return true;
}

Vector coset_reduce(const LatticeData& lat, const Vector& v) {
  auto x = lattice_coordinates(lat, v);
  if (!x) throw ValidationError("vector lies outside the span of the lattice");
  Vector out(v.size());
  for (std::size_t j = 0; j < x->size(); ++j) {
    Rat frac = (*x)[j] - Rat(floor_rat((*x)[j]));
    out += lat.basis[j] * frac;
  }
  return out;
}

}  // namespace weylref
