#include <gtest/gtest.h>

#include "weylref/errors.hpp"
#include "weylref/lattice.hpp"
#include "weylref/quadval.hpp"
#include "weylref/root_system.hpp"
#include "weylref/weyl_group.hpp"

using namespace weylref;

TEST(Rat, CanonicalForm) {
  Rat q = make_rat(6, -4);
  EXPECT_EQ(to_string(q), "-3/2");
  EXPECT_EQ(to_string(make_rat(4, 2)), "2");
  EXPECT_EQ(parse_rat("10/4"), make_rat(5, 2));
  EXPECT_THROW(parse_rat("1/0"), ValidationError);
  EXPECT_EQ(floor_rat(make_rat(-1, 2)), -1);
  EXPECT_EQ(mod_floor(-3, 2), 1);
}

TEST(QuadVal, ArithmeticAndNormalisation) {
  auto a = QuadVal::sqrt_of(Rat(8));
  EXPECT_EQ(a, QuadVal(Rat(2), 2));
  auto b = QuadVal::sqrt_of(make_rat(1, 3));
  EXPECT_EQ(b.to_string(), "1/3*sqrt(3)");
  EXPECT_EQ((a * a).to_string(), "8");
  EXPECT_EQ(a / a, QuadVal::rational(1));
  EXPECT_TRUE(QuadVal::sqrt_of(Rat(0)).is_zero());
  EXPECT_EQ(QuadVal::parse("1/2*sqrt(2)"), QuadVal(make_rat(1, 2), 2));
  EXPECT_EQ(QuadVal::sqrt_of(Rat(12)).radicand(), 3);
}

TEST(CartanType, ParseAndReject) {
  EXPECT_EQ(CartanType::parse("B3xG2").to_string(), "B3xG2");
  for (const char* bad : {"Z9", "E5", "D3", "B1", "A0", "", "A2x", "G3", "F5"})
    EXPECT_THROW(CartanType::parse(bad), ValidationError) << bad;
}

struct TypeData {
  const char* type;
  int roots;
  std::uint64_t order;
  int det;
};

void PrintTo(const TypeData& d, std::ostream* os) { *os << d.type; }

class RootSystemTypes : public ::testing::TestWithParam<TypeData> {};

TEST_P(RootSystemTypes, CountsOrderAndIndex) {
  auto [type, roots, order, det] = GetParam();
  auto rs = RootSystem::build(type);
  EXPECT_EQ(rs.num_roots(), roots);
  EXPECT_EQ(predicted_order(rs), order);
  EXPECT_EQ(lattices(rs).index, det);
  EXPECT_EQ(cartan_determinant(rs), det);
}

TEST_P(RootSystemTypes, CrystallographicAndClosed) {
  auto rs = RootSystem::build(GetParam().type);
  for (int a = 0; a < rs.num_roots(); ++a) {
    EXPECT_EQ(rs.negate(rs.negate(a)), a);
    for (int b = 0; b < rs.num_roots(); ++b) {
      Rat p = 2 * rs.inner(a, rs.vector(b)) / rs.norm2(a);
      ASSERT_TRUE(is_integer(p));
      EXPECT_EQ(p, rs.pairing(b, a));
      EXPECT_EQ(rs.vector(rs.reflect(a, b)), rs.reflect(a, rs.vector(b)));
    }
    bool nonneg = true, nonpos = true;
    for (auto x : rs.root(a)) {
      nonneg = nonneg && x >= 0;
      nonpos = nonpos && x <= 0;
    }
    EXPECT_TRUE(rs.is_positive(a) ? nonneg : nonpos);
  }
}

INSTANTIATE_TEST_SUITE_P(Types, RootSystemTypes,
                         ::testing::Values(TypeData{"A1", 2, 2, 2}, TypeData{"A3", 12, 24, 4},
                                           TypeData{"B3", 18, 48, 2}, TypeData{"C3", 18, 48, 2},
                                           TypeData{"D4", 24, 192, 4}, TypeData{"G2", 12, 12, 1},
                                           TypeData{"F4", 48, 1152, 1}, TypeData{"E6", 72, 51840, 3},
                                           TypeData{"A1xB2", 10, 16, 4}),
                         [](const auto& info) { return std::string(info.param.type); });

TEST(RootSystem, HighestRootsAndLengths) {
  auto b3 = RootSystem::build("B3");
  EXPECT_EQ(b3.root(b3.highest_root(0)), (IntVec{1, 2, 2}));
  EXPECT_EQ(b3.root(b3.highest_short_root(0)), (IntVec{1, 1, 1}));
  EXPECT_EQ(b3.length_ratio(0), 2);
  auto c3 = RootSystem::build("C3");
  EXPECT_EQ(c3.root(c3.highest_root(0)), (IntVec{2, 2, 1}));
  auto g2 = RootSystem::build("G2");
  EXPECT_EQ(g2.root(g2.highest_root(0)), (IntVec{3, 2}));
  EXPECT_EQ(g2.norm2(0), make_rat(2, 3));
  EXPECT_EQ(g2.length_ratio(0), 3);
}

TEST(RootSystem, DualSwapsBAndC) {
  auto b3 = RootSystem::build("B3");
  auto d = dual_of(b3);
  EXPECT_EQ(d.system.num_roots(), 18);
  EXPECT_EQ(d.system.root(d.system.highest_root(0)), (IntVec{2, 2, 1}));
  for (int r = 0; r < b3.num_roots(); ++r)
    EXPECT_EQ(d.system.is_long(d.dual_index[r]), !b3.is_long(r));
}

TEST(WeylGroup, MatricesPreserveForm) {
  auto rs = RootSystem::build("B2");
  auto w = weyl_group(rs);
  ASSERT_EQ(w.size(), 8u);
  for (const auto& g : w)
    for (int a = 0; a < rs.num_roots(); ++a) {
      EXPECT_EQ(g.apply(rs.vector(a)), rs.vector(g(a)));
      for (int b = 0; b < rs.num_roots(); ++b) EXPECT_EQ(rs.inner_scaled(g(a), g(b)), rs.inner_scaled(a, b));
    }
}

TEST(WeylGroup, BoundRaisesResourceError) {
  auto rs = RootSystem::build("E6");
  EXPECT_THROW(weyl_group(rs, 1000), ResourceError);
}

TEST(WeylGroup, LengthCountsInversions) {
  auto rs = RootSystem::build("A2");
  int longest = 0;
  for (const auto& w : weyl_group(rs)) longest = std::max(longest, length(rs, w));
  EXPECT_EQ(longest, 3);
  EXPECT_EQ(length(rs, reflection_element(rs, 0)), 1);
}

TEST(Lattice, CosetsAndMembership) {
  auto rs = RootSystem::build("A2");
  auto lat = lattices(rs);
  auto w1 = fundamental_coweight(rs, 0);
  EXPECT_FALSE(lattice_membership(lat.coroot, w1));
  EXPECT_TRUE(lattice_membership(lat.coweight, w1));
  EXPECT_TRUE(lattice_membership(lat.coweight, w1 * Rat(3)));
  EXPECT_TRUE(lattice_membership(lat.coroot, w1 * Rat(3)));
  auto red = coset_reduce(lat.coroot, w1 + rs.coroot(0) * Rat(5));
  EXPECT_TRUE(lattice_membership(lat.coroot, red - w1));
}

TEST(Vector, DimensionCheck) {
  auto rs = RootSystem::build("A2");
  EXPECT_THROW(rs.check_vector(Vector(3)), ValidationError);
}
