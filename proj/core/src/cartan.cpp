#include "weylref/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "weylref/errors.hpp"

namespace weylref {

namespace {

bool admissible(char family, int rank) {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

}  // namespace

CartanType CartanType::parse(const std::string& text) {
  CartanType out;
  std::size_t pos = 0;
  if (text.empty()) throw ValidationError("empty Cartan type");
  while (pos < text.size()) {
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos - start > 3)
      throw ValidationError("malformed Cartan type '" + text + "'");
    int rank = std::stoi(text.substr(start, pos - start));
    if (!admissible(fam, rank))
      throw ValidationError("inadmissible Cartan type component " + std::string(1, fam) +
                            std::to_string(rank));
    out.components.push_back({fam, rank});
    if (pos < text.size()) {
      if (text[pos] != 'x' && text[pos] != 'X' && text[pos] != '*')
        throw ValidationError("malformed Cartan type '" + text + "'");
      ++pos;
      if (pos == text.size()) throw ValidationError("malformed Cartan type '" + text + "'");
    }
  }
  return out;
}

std::string CartanType::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += "x";
    s += components[i].to_string();
  }
  return s;
}

int CartanType::rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

IntMatrix cartan_matrix(const SimpleType& t) {
  int n = t.rank;
  IntMatrix a(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) {  // 1-based simple bond
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (t.family) {
    case 'A':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -1;
      a[n - 1][n - 2] = -2;
      break;
    case 'C':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      a[n - 1][n - 2] = -1;
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case 'E':
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(1, 2);
      a[1][2] = -1;
      a[2][1] = -2;
      link(3, 4);
      break;
    case 'G':
      a[0][1] = -3;
      a[1][0] = -1;
      break;
    default:
      throw ValidationError("unknown family");
  }
  return a;
}

IntMatrix cartan_matrix(const CartanType& t) {
  int n = t.rank();
  IntMatrix a(n, IntVec(n, 0));
  int off = 0;
  for (const auto& c : t.components) {
    auto b = cartan_matrix(c);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) a[off + i][off + j] = b[i][j];
    off += c.rank;
  }
  return a;
}

std::uint64_t weyl_order(const SimpleType& t) {
  auto fact = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) {
      if (f > UINT64_MAX / static_cast<std::uint64_t>(i)) return std::uint64_t{0};
      f *= static_cast<std::uint64_t>(i);
    }
    return f;
  };
  int n = t.rank;
  switch (t.family) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': {
      auto f = fact(n);
      if (f == 0 || n >= 63 || f > (UINT64_MAX >> n)) return 0;
      return f << n;
    }
    case 'D': {
      auto f = fact(n);
      if (f == 0 || n >= 64 || f > (UINT64_MAX >> (n - 1))) return 0;
      return f << (n - 1);
    }
    case 'E': return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

std::vector<std::vector<int>> cartan_components(const IntMatrix& a) {
  int n = static_cast<int>(a.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s}, nodes;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      nodes.push_back(v);
      for (int w = 0; w < n; ++w)
        if (w != v && a[v][w] != 0 && comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    out.push_back(std::move(nodes));
  }
  return out;
}

SimpleType identify_cartan(const IntMatrix& a) {
  int n = static_cast<int>(a.size());
  if (n == 1) return {'A', 1};
  std::vector<int> degree(n, 0);
  int triple = 0, doubles = 0, dbl_i = -1, dbl_j = -1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::int64_t bond = a[i][j] * a[j][i];
      if (bond == 0) continue;
      ++degree[i];
      ++degree[j];
      if (bond == 3) ++triple;
      if (bond == 2) {
        ++doubles;
        dbl_i = i;
        dbl_j = j;
      }
      if (bond > 3) throw ValidationError("Cartan matrix is not of finite type");
    }
  if (triple) {
    if (n != 2) throw ValidationError("Cartan matrix is not of finite type");
    return {'G', 2};
  }
  if (doubles > 1) throw ValidationError("Cartan matrix is not of finite type");
  if (doubles == 1) {
    if (n == 2) return {'B', 2};
    bool end_i = degree[dbl_i] == 1, end_j = degree[dbl_j] == 1;
    if (!end_i && !end_j) {
      if (n != 4) throw ValidationError("Cartan matrix is not of finite type");
      return {'F', 4};
    }
    int leaf = end_i ? dbl_i : dbl_j;
    int other = leaf == dbl_i ? dbl_j : dbl_i;
    // a[leaf][other] = -1 means the leaf is the longer root.
    bool leaf_short = a[leaf][other] == -2;
    return {leaf_short ? 'B' : 'C', n};
  }
  int branch = -1;
  for (int i = 0; i < n; ++i) {
    if (degree[i] > 3) throw ValidationError("Cartan matrix is not of finite type");
    if (degree[i] == 3) {
      if (branch >= 0) throw ValidationError("Cartan matrix is not of finite type");
      branch = i;
    }
  }
  if (branch < 0) return {'A', n};
  std::vector<int> arms;
  for (int start = 0; start < n; ++start) {
    if (start == branch || a[branch][start] == 0) continue;
    int len = 0, prev = branch, cur = start;
    while (true) {
      ++len;
      int next = -1;
      for (int w = 0; w < n; ++w)
        if (w != cur && w != prev && a[cur][w] != 0) next = w;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', n};
  throw ValidationError("Cartan matrix is not of finite type");
}

}  // namespace weylref
