#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weylref {

using Rat = mpq_class;
using Int = mpz_class;

using RatVec = std::vector<Rat>;
using RatMatrix = std::vector<RatVec>;
using IntVec = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVec>;
using BigVec = std::vector<Int>;
using BigMatrix = std::vector<BigVec>;

Rat make_rat(std::int64_t num, std::int64_t den = 1);
Rat parse_rat(const std::string& text);
std::string to_string(const Rat& q);

bool is_integer(const Rat& q);
std::int64_t to_int64(const Rat& q);
std::int64_t to_int64(const Int& z);
Int floor_rat(const Rat& q);
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t mod_floor(std::int64_t a, std::int64_t b);

RatMatrix to_rat(const IntMatrix& m);
RatVec to_rat(const IntVec& v);

Rat dot(const RatVec& a, const RatVec& b);
RatVec mat_vec(const RatMatrix& m, const RatVec& v);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix transpose(const RatMatrix& m);
RatMatrix identity_matrix(std::size_t n);

std::size_t rank(RatMatrix m);
Rat determinant(RatMatrix m);
RatMatrix inverse(const RatMatrix& m);

// Some solution x of a x = b, or nullopt if the system is inconsistent.
std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b);

// Basis of {x : a x = 0}.
RatMatrix kernel(const RatMatrix& a, std::size_t cols);

// Column-style Hermite reduction: returns a unimodular u with m u = [h | 0],
// where the trailing zero columns of m u span the integer kernel of m.
struct ColumnReduction {
  BigMatrix reduced;
  BigMatrix unimodular;
  std::size_t rank = 0;
};
ColumnReduction column_reduce(const BigMatrix& m);

// Z-basis of {x in Z^n : m x = 0}.
BigMatrix integer_kernel(const BigMatrix& m, std::size_t cols);

// Row-style Hermite basis of the lattice spanned by the rows of gens.
BigMatrix lattice_basis(const BigMatrix& gens);

// Whether v lies in the Z-span of the rows of basis (rows independent).
bool in_row_lattice(const BigMatrix& basis, const BigVec& v);

Int abs_determinant(BigMatrix m);

}  // namespace weylref
