#include "weylref/linalg.hpp"

#include <stdexcept>
#include <utility>

#include "weylref/errors.hpp"

namespace weylref {

Rat make_rat(std::int64_t num, std::int64_t den) {
  Rat q(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& text) {
  Rat q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw ValidationError("malformed rational: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

bool is_integer(const Rat& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Int& z) {
  if (!z.fits_slong_p()) throw ResourceError("integer exceeds 64-bit range");
  return z.get_si();
}

std::int64_t to_int64(const Rat& q) {
  if (!is_integer(q)) throw InternalError("expected an integer, got " + q.get_str());
  return to_int64(q.get_num());
}

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(to_rat(row));
  return out;
}

RatVec to_rat(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec mat_vec(const RatMatrix& m, const RatVec& v) {
  RatVec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMatrix out(n, RatVec(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

RatMatrix transpose(const RatMatrix& m) {
  if (m.empty()) return {};
  RatMatrix out(m[0].size(), RatVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  return out;
}

RatMatrix identity_matrix(std::size_t n) {
  RatMatrix out(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rat inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rat factor = m[r][c];
      for (std::size_t j = 0; j < m[r].size(); ++j) m[r][j] -= factor * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RatMatrix m) {
  if (m.empty()) return 0;
  return rref(m, m[0].size()).size();
}

Rat determinant(RatMatrix m) {
  std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rat factor = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= factor * m[c][j];
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& m) {
  std::size_t n = m.size();
  RatMatrix aug(n, RatVec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = rref(aug, n);
  if (pivots.size() != n) throw InternalError("inverse of a singular matrix");
  RatMatrix out(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b) {
  std::size_t cols = a.empty() ? 0 : a[0].size();
  RatMatrix aug(a.size(), RatVec(cols + 1));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  auto pivots = rref(aug, cols);
  for (std::size_t r = pivots.size(); r < aug.size(); ++r)
    if (aug[r][cols] != 0) return std::nullopt;
  RatVec x(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

RatMatrix kernel(const RatMatrix& a, std::size_t cols) {
  RatMatrix m = a;
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RatMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

ColumnReduction column_reduce(const BigMatrix& input) {
  ColumnReduction out;
  out.reduced = input;
  std::size_t rows = input.size();
  std::size_t cols = rows == 0 ? 0 : input[0].size();
  out.unimodular.assign(cols, BigVec(cols));
  for (std::size_t i = 0; i < cols; ++i) out.unimodular[i][i] = 1;
  auto& m = out.reduced;
  auto& u = out.unimodular;

  auto combine = [&](std::size_t p, std::size_t j, const Int& s, const Int& t, const Int& x,
                     const Int& y) {
    // col_p <- s col_p + t col_j ; col_j <- x col_p + y col_j
    for (std::size_t r = 0; r < rows; ++r) {
      Int a = m[r][p], b = m[r][j];
      m[r][p] = s * a + t * b;
      m[r][j] = x * a + y * b;
    }
    for (std::size_t r = 0; r < cols; ++r) {
      Int a = u[r][p], b = u[r][j];
      u[r][p] = s * a + t * b;
      u[r][j] = x * a + y * b;
    }
  };

  std::size_t p = 0;
  for (std::size_t i = 0; i < rows && p < cols; ++i) {
    for (std::size_t j = p + 1; j < cols; ++j) {
      if (m[i][j] == 0) continue;
      Int a = m[i][p], b = m[i][j], g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Int x = -b / g, y = a / g;
      combine(p, j, s, t, x, y);
    }
    if (m[i][p] != 0) {
      if (m[i][p] < 0) {
        for (std::size_t r = 0; r < rows; ++r) m[r][p] = -m[r][p];
        for (std::size_t r = 0; r < cols; ++r) u[r][p] = -u[r][p];
      }
      ++p;
    }
  }
  out.rank = p;
  return out;
}

BigMatrix integer_kernel(const BigMatrix& m, std::size_t cols) {
  if (m.empty()) {
    BigMatrix basis(cols, BigVec(cols));
    for (std::size_t i = 0; i < cols; ++i) basis[i][i] = 1;
    return basis;
  }
  auto red = column_reduce(m);
  BigMatrix basis;
  for (std::size_t j = red.rank; j < cols; ++j) {
    BigVec v(cols);
    for (std::size_t r = 0; r < cols; ++r) v[r] = red.unimodular[r][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

BigMatrix lattice_basis(const BigMatrix& gens) {
  if (gens.empty()) return {};
  std::size_t n = gens[0].size();
  BigMatrix t(n, BigVec(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = gens[i][j];
  auto red = column_reduce(t);
  BigMatrix basis;
  for (std::size_t c = 0; c < red.rank; ++c) {
    BigVec v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = red.reduced[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_row_lattice(const BigMatrix& basis, const BigVec& v) {
  std::size_t n = v.size();
  RatMatrix a(n, RatVec(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) a[j][i] = Rat(basis[i][j]);
  RatVec b(n);
  for (std::size_t j = 0; j < n; ++j) b[j] = Rat(v[j]);
  auto x = solve(a, b);
  if (!x) return false;
  for (const auto& q : *x)
    if (!is_integer(q)) return false;
  return true;
}

Int abs_determinant(BigMatrix m) {
  RatMatrix r(m.size(), RatVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r[i][j] = Rat(m[i][j]);
  Rat d = determinant(r);
  return abs(d.get_num());
}

}  // namespace weylref
