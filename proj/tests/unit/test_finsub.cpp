#include <gtest/gtest.h>

#include "weylref/errors.hpp"
#include "weylref/finsub.hpp"
#include "weylref/weyl_group.hpp"

using namespace weylref;

namespace {

int root(const RootSystem& rs, IntVec c) {
  int r = rs.find(c);
  EXPECT_GE(r, 0);
  return r;
}

}  // namespace

TEST(NpSubsets, AffineAndIndependent) {
  auto rs = RootSystem::build("A2");
  int a = root(rs, {1, 0}), b = root(rs, {0, 1}), t = root(rs, {-1, -1});
  EXPECT_TRUE(is_np_subset(rs, {a, b, t}));
  EXPECT_TRUE(is_np_subset(rs, {a, b}));
  EXPECT_FALSE(is_np_subset(rs, {a, root(rs, {1, 1})}));
  auto dec = np_decompose(rs, {a, b, t});
  ASSERT_EQ(dec.components.size(), 1u);
  EXPECT_EQ(dec.components[0].extra, t);
  EXPECT_EQ(dec.components[0].c, (std::vector<std::int64_t>{1, 1, 1}));
}

TEST(NpSubsets, ExtraRootIsShortInDualChoice) {
  auto rs = RootSystem::build("B2");
  int a1 = root(rs, {1, 0}), a2 = root(rs, {0, 1}), s = root(rs, {-1, -1});
  auto dec = np_decompose(rs, {a1, a2, s});
  ASSERT_EQ(dec.components.size(), 1u);
  EXPECT_TRUE(dec.components[0].dependent());
  EXPECT_FALSE(rs.is_long(dec.components[0].extra));
}

TEST(Subsystems, SimpleSystemAndType) {
  auto rs = RootSystem::build("B3");
  auto psi = subsystem_of(rs, {root(rs, {0, 1, 0}), root(rs, {0, 0, 1})});
  EXPECT_EQ(psi.size(), 8u);
  EXPECT_EQ(simple_system(rs, psi).size(), 2u);
  EXPECT_EQ(subsystem_type(rs, psi), "B2");
  auto shorts = subsystem_of(rs, {root(rs, {0, 0, 1}), root(rs, {1, 1, 1})});
  EXPECT_EQ(subsystem_type(rs, shorts), "A1~xA1~");
  EXPECT_EQ(subsystem_type(rs, RootSubset()), "0");
}

TEST(Subsystems, ClosedAndDualClosedInB2) {
  auto rs = RootSystem::build("B2");
  auto longs = subsystem_of(rs, {root(rs, {1, 0}), root(rs, {1, 2})});
  auto shorts = subsystem_of(rs, {root(rs, {0, 1}), root(rs, {1, 1})});
  EXPECT_TRUE(is_closed(rs, longs));
  EXPECT_FALSE(is_dual_closed(rs, longs));
  EXPECT_FALSE(is_closed(rs, shorts));
  EXPECT_TRUE(is_dual_closed(rs, shorts));
}

TEST(Subsystems, ElementaryExtensionsOfG2) {
  auto rs = RootSystem::build("G2");
  std::vector<int> all(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i) all[i] = i;
  std::multiset<std::string> types;
  for (const auto& e : elementary_extensions(rs, RootSubset(all))) types.insert(subsystem_type(rs, e.subsystem));
  EXPECT_TRUE(types.count("A2"));
  EXPECT_TRUE(types.count("A1xA1~") || types.count("A1~xA1"));
  EXPECT_TRUE(types.count("A2~"));
}

TEST(Subsystems, ExtensionStepOutsideProperSubsystem) {
  auto rs = RootSystem::build("A2");
  auto psi = subsystem_of(rs, {root(rs, {1, 0})});
  auto step = extension_step(rs, psi);
  ASSERT_TRUE(step.has_value());
  EXPECT_TRUE(step->larger.contains(psi));
  EXPECT_GT(step->larger.size(), psi.size());
}

TEST(Subsystems, CanonicalFormIsConjugationInvariant) {
  auto rs = RootSystem::build("B3");
  auto group = weyl_group(rs);
  auto psi = subsystem_of(rs, {root(rs, {1, 0, 0}), root(rs, {0, 0, 1})});
  auto canon = canonical_form(group, psi);
  for (std::size_t i = 0; i < group.size(); i += 7) {
    std::vector<int> img;
    for (int r : psi) img.push_back(group[i](r));
    EXPECT_EQ(canonical_form(group, RootSubset(img)), canon);
  }
}

struct ClassCount {
  const char* type;
  std::size_t classes;
};

void PrintTo(const ClassCount& c, std::ostream* os) { *os << c.type; }

class ClassCounts : public ::testing::TestWithParam<ClassCount> {};

TEST_P(ClassCounts, MatchKnownValues) {
  auto rs = RootSystem::build(GetParam().type);
  auto cl = enumerate_subsystems(rs);
  EXPECT_EQ(cl.classes.size(), GetParam().classes);
  EXPECT_FALSE(cl.fingerprint_only);
}

INSTANTIATE_TEST_SUITE_P(Types, ClassCounts,
                         ::testing::Values(ClassCount{"A1", 2}, ClassCount{"A2", 3}, ClassCount{"B2", 6},
                                           ClassCount{"G2", 7}, ClassCount{"A3", 5}),
                         [](const auto& info) { return std::string(info.param.type); });

TEST(Classification, FingerprintFallbackBeyondBound) {
  auto rs = RootSystem::build("B3");
  auto cl = enumerate_subsystems(rs, 10);
  EXPECT_TRUE(cl.fingerprint_only);
  EXPECT_LE(cl.classes.size(), enumerate_subsystems(rs).classes.size());
}

TEST(Dynkin, CompletedDiagramOfG2) {
  auto rs = RootSystem::build("G2");
  auto d = dynkin_diagram(rs, {0, 1, rs.negate(rs.highest_root(0))});
  EXPECT_EQ(d.nodes.size(), 3u);
  EXPECT_EQ(d.edges.size(), 2u);
  EXPECT_EQ(identify_cartan(cartan_of(rs, {0, 1})).to_string(), "G2");
  EXPECT_TRUE(d.render().find("<<") != std::string::npos || d.render().find(">>") != std::string::npos);
  EXPECT_THROW(dynkin_diagram(rs, {0, rs.find({2, 1})}), ValidationError);
}

TEST(NpStabilizer, OrderIsIndexOfConnection) {
  for (const char* t : {"A1", "A2", "A3", "B3", "G2"}) {
    auto rs = RootSystem::build(t);
    std::vector<int> g;
    for (int j = 0; j < rs.rank(); ++j) g.push_back(j);
    g.push_back(rs.negate(rs.highest_root(0)));
    std::sort(g.begin(), g.end());
    std::size_t det = std::string(t) == "A1" ? 2 : std::string(t) == "A2" ? 3 : std::string(t) == "A3" ? 4
                    : std::string(t) == "B3" ? 2 : 1;
    EXPECT_EQ(np_stabilizer(rs, g).size(), det) << t;
  }
}
