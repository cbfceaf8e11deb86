#include <gtest/gtest.h>

#include <deque>
#include <set>

#include "enumerate.hpp"
#include "weylref/errors.hpp"
#include "weylref/refsub.hpp"

using namespace weylref;
using namespace testsupport;

namespace {

GFDatum datum(const RootSystem& rs, std::vector<std::pair<IntVec, std::int64_t>> pairs) {
  std::vector<std::pair<int, std::int64_t>> out;
  for (const auto& [c, f] : pairs) {
    int r = rs.find(c);
    EXPECT_GE(r, 0);
    out.push_back({r, f});
  }
  return GFDatum::from_pairs(out);
}

RootSubset everything(const RootSystem& rs) {
  std::vector<int> all(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i) all[i] = i;
  return RootSubset(all);
}

PsiXPair a1_psix(const RootSystem& rs, Rat a, XKind kind, std::int64_t m) {
  return validate_psix(rs, everything(rs), Vector(RatVec{a}), AdmissibleLattice{{{kind, m}}});
}

std::set<AffRoot> as_set(const std::vector<AffRoot>& v) { return {v.begin(), v.end()}; }

std::set<AffRoot> levels(int root, std::int64_t from, std::int64_t step, std::int64_t bound) {
  std::set<AffRoot> out;
  for (std::int64_t n = -bound; n <= bound; ++n)
    if (mod_floor(n - from, step) == 0) out.insert({root, n});
  return out;
}

}  // namespace

TEST(GFPair, ValidationExamples) {
  auto a1 = RootSystem::build("A1");
  auto a2 = RootSystem::build("A2");
  EXPECT_NO_THROW(validate_gf(a1, fundamental_datum(a1)));
  EXPECT_NO_THROW(validate_gf(a2, datum(a2, {{{1, 0}, 0}, {{0, 1}, 0}})));
  EXPECT_THROW(validate_gf(a1, datum(a1, {{{1}, 0}, {{-1}, 0}})), ValidationError);
  EXPECT_THROW(validate_gf(a1, datum(a1, {{{1}, -1}, {{-1}, 2}})), ValidationError);
  EXPECT_THROW(validate_gf(a2, datum(a2, {{{1, 0}, 0}, {{1, 1}, 0}})), ValidationError);
}

TEST(GFPair, SimpleAffineRootsArePairwiseObtuse) {
  auto rs = RootSystem::build("B2");
  for_each_gf(rs, 2, [&](const GFPair& p) {
    auto s = p.simple_affine_roots();
    ASSERT_EQ(s.size(), p.datum().gamma.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      EXPECT_EQ(s[i].level, p.datum().f[i]);
      EXPECT_TRUE(is_positive(rs, s[i]));
      for (std::size_t j = i + 1; j < s.size(); ++j) EXPECT_LE(rs.inner_scaled(s[i].root, s[j].root), 0);
    }
  });
}

TEST(Compatibility, Examples) {
  auto a1 = RootSystem::build("A1");
  auto a2 = RootSystem::build("A2");
  auto a1a1 = RootSystem::build("A1xA1");
  EXPECT_EQ(is_compatible(a1, fundamental_datum(a1)), Compatibility::Compatible);
  EXPECT_EQ(is_compatible(a2, datum(a2, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, 0}})), Compatibility::Neither);
  auto mixed = datum(a1a1, {{{1, 0}, 0}, {{-1, 0}, 1}, {{0, 1}, 0}, {{0, -1}, -1}});
  EXPECT_EQ(is_compatible(a1a1, mixed), Compatibility::StronglyCompatible);
  EXPECT_EQ(to_string(Compatibility::StronglyCompatible), "strongly_compatible");
  EXPECT_NO_THROW(compatible_gf(a1, datum(a1, {{{1}, -3}, {{-1}, 4}})));
}

TEST(RootsOfGF, RankOneExamples) {
  auto rs = RootSystem::build("A1");
  int a = rs.find({1}), na = rs.find({-1});
  auto full = as_set(roots_of_gf(rs, validate_gf(rs, datum(rs, {{{1}, 0}, {{-1}, 1}})), 5));
  auto expect = levels(a, 0, 1, 5);
  expect.merge(levels(na, 0, 1, 5));
  EXPECT_EQ(full, expect);
  auto even = as_set(roots_of_gf(rs, validate_gf(rs, datum(rs, {{{1}, 0}, {{-1}, 2}})), 5));
  expect = levels(a, 0, 2, 5);
  expect.merge(levels(na, 0, 2, 5));
  EXPECT_EQ(even, expect);
  auto finite = as_set(roots_of_gf(rs, validate_gf(rs, datum(rs, {{{1}, 0}})), 5));
  EXPECT_EQ(finite, (std::set<AffRoot>{{a, 0}, {na, 0}}));
}

TEST(RootsOfGF, FormulaMatchesClosureOracleOnG2) {
  auto rs = RootSystem::build("G2");
  auto m = mini(rs);
  std::size_t n = 0;
  for_each_gf(rs, 1, [&](const GFPair& p) {
    std::vector<oracle::AffRootV> gens;
    for (const auto& x : p.simple_affine_roots()) gens.push_back({coords(rs, x.root), x.level});
    std::set<oracle::AffRootV> want;
    for (const auto& x : oracle::affine_closure(m, gens, 20))
      if (std::labs(x.second) <= 4) want.insert(x);
    std::set<oracle::AffRootV> got;
    for (const auto& x : roots_of_gf(rs, p, 4)) got.insert({coords(rs, x.root), x.level});
    EXPECT_EQ(got, want);
    for (const auto& x : roots_of_gf(rs, p, 4)) EXPECT_TRUE(contains_affroot(p, x));
    ++n;
  });
  EXPECT_GT(n, 100u);
}

TEST(RootsOfGF, OffsetsWithinOnePeriod) {
  for (const char* t : {"A2", "B2", "G2"}) {
    auto rs = RootSystem::build(t);
    for_each_gf(rs, 2, [&](const GFPair& p) {
      const auto& s = p.structure();
      for (std::size_t c = 0; c < s.comps.size(); ++c) {
        if (!s.comps[c].np.dependent()) continue;
        for (std::size_t j = 0; j < s.comps[c].sigma.size(); ++j) {
          const auto& a = s.comps[c].a[j];
          if (*std::min_element(a.begin(), a.end()) < 0) continue;
          EXPECT_GE(p.r(c, j), 0);
          EXPECT_LE(p.r(c, j), p.K(c) * s.comps[c].kfac[j]);
        }
      }
    });
  }
}

TEST(Alcove, RankOneSegments) {
  auto rs = RootSystem::build("A1");
  auto fund = alcove_of_gf(rs, validate_gf(rs, fundamental_datum(rs)));
  ASSERT_EQ(fund.parts.size(), 1u);
  EXPECT_TRUE(fund.parts[0].simplex);
  EXPECT_TRUE(fund.parts[0].apex.is_zero());
  ASSERT_EQ(fund.parts[0].others.size(), 1u);
  EXPECT_EQ(fund.parts[0].others[0], Vector(RatVec{make_rat(1, 2)}));
  auto twice = alcove_of_gf(rs, validate_gf(rs, datum(rs, {{{1}, 0}, {{-1}, 2}})));
  EXPECT_EQ(twice.parts[0].others[0], Vector(RatVec{Rat(1)}));
  auto a2 = RootSystem::build("A2");
  auto cone = alcove_of_gf(a2, validate_gf(a2, datum(a2, {{{1, 0}, 0}, {{0, 1}, 0}})));
  ASSERT_EQ(cone.parts.size(), 1u);
  EXPECT_FALSE(cone.parts[0].simplex);
  EXPECT_TRUE(cone.free_directions.empty());
}

TEST(Volume, Examples) {
  auto a1 = RootSystem::build("A1");
  auto a2 = RootSystem::build("A2");
  EXPECT_EQ(volume_of_gf(a1, validate_gf(a1, fundamental_datum(a1)))->to_string(), "1/2*sqrt(2)");
  EXPECT_EQ(volume_of_gf(a2, validate_gf(a2, fundamental_datum(a2)))->to_string(), "1/6*sqrt(3)");
  EXPECT_FALSE(volume_of_gf(a2, validate_gf(a2, datum(a2, {{{1, 0}, 0}, {{0, 1}, 0}}))).has_value());
}

TEST(Volume, MatchesSimplexOracle) {
  for (const char* t : {"B2", "G2", "A2"}) {
    auto rs = RootSystem::build(t);
    auto m = mini(rs);
    for_each_gf(rs, 2, [&](const GFPair& p) {
      auto v = volume_of_gf(rs, p);
      if (p.datum().gamma.size() != static_cast<std::size_t>(rs.rank()) + 1 || !v) return;
      std::vector<oracle::AffRootV> walls;
      for (const auto& x : p.simple_affine_roots()) walls.push_back({coords(rs, x.root), x.level});
      EXPECT_EQ(v->squared(), oracle::simplex_volume_sq(m, walls)) << t;
    });
  }
}

TEST(Index, Examples) {
  auto rs = RootSystem::build("A1");
  auto fund = validate_gf(rs, fundamental_datum(rs));
  auto two = validate_gf(rs, datum(rs, {{{1}, 0}, {{-1}, 2}}));
  auto three = validate_gf(rs, datum(rs, {{{1}, 0}, {{-1}, 3}}));
  EXPECT_EQ(index_of_gf(rs, two, fund).index, 2);
  EXPECT_EQ(index_of_gf(rs, fund, fund).index, 1);
  EXPECT_EQ(index_of_gf(rs, three, fund).index, 3);
  EXPECT_THROW(index_of_gf(rs, fund, two), ValidationError);
  auto finite = validate_gf(rs, datum(rs, {{{1}, 0}}));
  EXPECT_FALSE(index_of_gf(rs, finite, fund).finite);
}

TEST(CosetReps, Examples) {
  auto rs = RootSystem::build("A1");
  auto lat = lattices(rs);
  auto fund = validate_gf(rs, fundamental_datum(rs));
  auto two = validate_gf(rs, datum(rs, {{{1}, 0}, {{-1}, 2}}));
  EXPECT_EQ(coset_reps(rs, two, lat.coroot).size(), 2u);
  EXPECT_EQ(coset_reps(rs, fund, lat.coroot).size(), 1u);
  EXPECT_EQ(coset_reps(rs, fund, lat.coweight).size(), 2u);
  EXPECT_THROW(coset_reps(rs, validate_gf(rs, datum(rs, {{{1}, 0}})), lat.coroot), ValidationError);
}

TEST(CosetReps, SendSimpleRootsToPositiveRoots) {
  auto rs = RootSystem::build("B2");
  auto lat = lattices(rs);
  auto fund = validate_gf(rs, fundamental_datum(rs));
  for_each_gf(
      rs, 2,
      [&](const GFPair& p) {
        if (!volume_of_gf(rs, p)) return;
        auto reps = coset_reps(rs, p, lat.coroot);
        EXPECT_EQ(Int(static_cast<unsigned long>(reps.size())), index_of_gf(rs, p, fund).index);
        for (const auto& g : reps)
          for (const auto& x : p.simple_affine_roots()) EXPECT_TRUE(is_positive(rs, act_on_affroot(rs, g, x)));
      },
      [](const std::vector<int>& g) { return g.size() == 3; });
}

TEST(PsiX, ValidationExamples) {
  auto rs = RootSystem::build("A1");
  int a = rs.find({1}), na = rs.find({-1});
  auto full = a1_psix(rs, 0, XKind::P, 1);
  EXPECT_TRUE(full.z(a).contains(0) && full.z(a).contains(1) && full.z(a).contains(-7));
  auto finite = a1_psix(rs, 0, XKind::Zero, 0);
  EXPECT_EQ(finite.z(a), (ZFamily{0, 0}));
  auto odd = a1_psix(rs, make_rat(1, 2), XKind::P, 2);
  EXPECT_TRUE(odd.z(a).contains(1) && odd.z(a).contains(-1) && !odd.z(a).contains(0));
  EXPECT_TRUE(odd.z(na).contains(-1) && !odd.z(na).contains(2));
  EXPECT_EQ(odd.n_of(a), 2);
  EXPECT_TRUE(condition_z_holds(rs, odd));
  EXPECT_THROW(a1_psix(rs, make_rat(1, 4), XKind::P, 1), ValidationError);
  EXPECT_EQ(a1_psix(rs, make_rat(5, 2), XKind::P, 2), odd);
}

TEST(PsiX, DifferenceContainment) {
  EXPECT_TRUE(difference_contained({1, 2}, 2, {0, 1}, {1, 2}));
  EXPECT_FALSE(difference_contained({1, 2}, 1, {0, 1}, {1, 2}));
  EXPECT_TRUE(difference_contained({3, 0}, 1, {1, 0}, {2, 0}));
  EXPECT_FALSE(difference_contained({3, 0}, 1, {1, 0}, {1, 5}));
  EXPECT_TRUE(difference_contained({0, 4}, 3, {0, 2}, {0, 2}));
}

TEST(PsiX, RootExamples) {
  auto rs = RootSystem::build("A1");
  int a = rs.find({1}), na = rs.find({-1});
  auto all = levels(a, 0, 1, 4);
  all.merge(levels(na, 0, 1, 4));
  EXPECT_EQ(as_set(roots_of_psix(rs, a1_psix(rs, 0, XKind::P, 1), 4)), all);
  EXPECT_EQ(as_set(roots_of_psix(rs, a1_psix(rs, 0, XKind::Zero, 0), 4)), (std::set<AffRoot>{{a, 0}, {na, 0}}));
  auto odd = levels(a, 1, 2, 4);
  odd.merge(levels(na, 1, 2, 4));
  EXPECT_EQ(as_set(roots_of_psix(rs, a1_psix(rs, make_rat(1, 2), XKind::P, 2), 4)), odd);
}

TEST(PsiX, TranslationShiftsLevelFamilies) {
  auto rs = RootSystem::build("B2");
  auto group = weyl_group(rs);
  for (const auto& psi : all_subsystems(rs))
    for_each_psix(rs, psi, 2, 1, [&](const PsiXPair& p) {
      Vector gamma = fundamental_coweight(rs, 0) * Rat(1) + fundamental_coweight(rs, 1) * Rat(-2);
      auto q = act_on_psix(rs, ext_translation(rs, gamma), p);
      for (int r : p.info().psi) {
        std::int64_t shift = to_int64(rs.inner(r, gamma));
        auto z = p.z(r), z2 = q.z(r);
        EXPECT_TRUE(z2.contains(z.offset + shift));
        EXPECT_EQ(z2.modulus, z.modulus);
      }
      EXPECT_EQ(act_on_psix(rs, ext_identity(rs), p), p);
      auto w = group[5];
      auto moved = act_on_psix(rs, ext_from_weyl(rs, w), p);
      std::vector<int> img;
      for (int r : p.info().psi) img.push_back(w(r));
      EXPECT_EQ(moved.info().psi, RootSubset(img));
    });
}

TEST(PsiX, ActionIsAGroupAction) {
  auto rs = RootSystem::build("A2");
  auto group = weyl_group(rs);
  std::vector<ExtAffElement> gs;
  for (std::size_t i = 0; i < group.size(); i += 2)
    gs.push_back(compose(rs, ext_from_weyl(rs, group[i]),
                         ext_translation(rs, fundamental_coweight(rs, i % 2) * Rat(static_cast<long>(i) - 2))));
  for (const auto& psi : all_subsystems(rs))
    for_each_psix(rs, psi, 2, 1, [&](const PsiXPair& p) {
      for (const auto& g : gs)
        for (const auto& h : gs) {
          auto lhs = act_on_psix(rs, compose(rs, g, h), p);
          EXPECT_EQ(lhs, act_on_psix(rs, g, act_on_psix(rs, h, p)));
        }
      for (const auto& g : gs) {
        std::set<AffRoot> moved;
        for (const auto& x : roots_of_psix(rs, p, 3)) EXPECT_TRUE(contains_affroot(act_on_psix(rs, g, p), act_on_affroot(rs, g, x)));
      }
    });
}

TEST(PsiX, ElementsPreserveTheRootSet) {
  auto rs = RootSystem::build("B2");
  for (const auto& psi : all_subsystems(rs))
    for_each_psix(rs, psi, 2, 0, [&](const PsiXPair& p) {
      auto elems = elements_of_psix(rs, p, 1);
      for (const auto& g : elems) {
        EXPECT_EQ(act_on_psix(rs, g, p), p);
        for (const auto& x : roots_of_psix(rs, p, 2)) EXPECT_TRUE(contains_affroot(p, act_on_affroot(rs, g, x)));
      }
      for (std::size_t i = 0; i < elems.size(); i += 3)
        EXPECT_EQ(act_on_psix(rs, compose(rs, elems[i], inverse(rs, elems[(i * 7) % elems.size()])), p), p);
    });
}

TEST(PsiX, ElementExamples) {
  auto rs = RootSystem::build("B2");
  auto empty = validate_psix(rs, RootSubset(), Vector(2), AdmissibleLattice{});
  auto e = elements_of_psix(rs, empty, 3);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_TRUE(same_element(e[0], ext_identity(rs)));
  auto finite = validate_psix(rs, everything(rs), Vector(2), AdmissibleLattice{{{XKind::Zero, 0}}});
  EXPECT_EQ(elements_of_psix(rs, finite, 3).size(), 8u);
  auto a1 = RootSystem::build("A1");
  auto full = a1_psix(a1, 0, XKind::P, 1);
  EXPECT_EQ(elements_of_psix(a1, full, 2).size(), 10u);
}

TEST(PsiX, PointwiseStabilizerExamples) {
  auto rs = RootSystem::build("A1xA1");
  auto lat = lattices(rs);
  auto full = validate_psix(rs, everything(rs), Vector(2), AdmissibleLattice{{{XKind::P, 1}, {XKind::P, 1}}});
  auto s = pointwise_stabilizer(rs, full, lat.coroot);
  EXPECT_TRUE(s.finite_part.empty());
  EXPECT_TRUE(s.translations.empty());
  auto one = validate_psix(rs, subsystem_of(rs, {rs.find({1, 0})}), Vector(2), AdmissibleLattice{{{XKind::P, 1}}});
  s = pointwise_stabilizer(rs, one, lat.coroot);
  EXPECT_EQ(s.finite_part, subsystem_of(rs, {rs.find({0, 1})}));
  ASSERT_EQ(s.translations.size(), 1u);
  EXPECT_EQ(rs.inner(rs.find({1, 0}), s.translations[0]), 0);
  auto none = validate_psix(rs, RootSubset(), Vector(2), AdmissibleLattice{});
  s = pointwise_stabilizer(rs, none, lat.coroot);
  EXPECT_EQ(s.finite_part.size(), 4u);
  EXPECT_EQ(s.translations.size(), 2u);
}

TEST(PsiX, CentralizerAndNormalizerExamples) {
  auto rs = RootSystem::build("A1");
  auto finite = a1_psix(rs, 0, XKind::Zero, 0);
  auto full = a1_psix(rs, 0, XKind::P, 1);
  auto s = ext_from_weyl(rs, reflection_element(rs, 0));
  auto t = ext_translation(rs, fundamental_coweight(rs, 0));
  EXPECT_TRUE(centralizes(rs, ext_identity(rs), full));
  EXPECT_TRUE(centralizes(rs, s, finite));
  EXPECT_FALSE(centralizes(rs, t, full));
  EXPECT_TRUE(normalizes(rs, ext_identity(rs), full));
  EXPECT_TRUE(normalizes(rs, t, full));
  EXPECT_TRUE(normalizes(rs, ext_translation(rs, rs.coroot(0)), a1_psix(rs, 0, XKind::P, 2)));
  EXPECT_FALSE(normalizes(rs, t, a1_psix(rs, 0, XKind::P, 2)));
}

TEST(PsiX, SameOrbitExamples) {
  auto rs = RootSystem::build("A1");
  auto lat = lattices(rs);
  auto group = weyl_group(rs);
  auto p0 = a1_psix(rs, 0, XKind::P, 2);
  auto p1 = a1_psix(rs, make_rat(1, 2), XKind::P, 2);
  EXPECT_FALSE(same_orbit(rs, p0, p1, lat.coroot, group).has_value());
  EXPECT_TRUE(same_orbit(rs, p0, p1, lat.coweight, group).has_value());
}

TEST(PsiX, SameOrbitMatchesBruteForceOrbits) {
  auto rs = RootSystem::build("A2");
  auto group = weyl_group(rs);
  auto lat = lattices(rs);
  for (const auto* R : {&lat.coroot, &lat.coweight}) {
    std::vector<ExtAffElement> gens;
    for (int j = 0; j < rs.rank(); ++j) {
      gens.push_back(ext_from_weyl(rs, reflection_element(rs, j)));
      gens.push_back(ext_translation(rs, R->basis[j]));
      gens.push_back(ext_translation(rs, -R->basis[j]));
    }
    std::vector<PsiXPair> pairs;
    for (const auto& psi : all_subsystems(rs)) {
      if (psi.empty()) continue;
      for_each_psix(rs, psi, 2, 0, [&](const PsiXPair& p) {
        for (const auto& b : p.xprime().blocks)
          if (b.kind == XKind::Zero) return;
        pairs.push_back(p);
      });
    }
    ASSERT_GT(pairs.size(), 10u);
    std::size_t hits = 0, misses = 0;
    for (std::size_t i = 0; i < pairs.size(); i += 5) {
      std::vector<PsiXPair> orbit{pairs[i]};
      std::deque<PsiXPair> todo{pairs[i]};
      while (!todo.empty()) {
        auto cur = todo.front();
        todo.pop_front();
        for (const auto& g : gens) {
          auto nxt = act_on_psix(rs, g, cur);
          if (std::find(orbit.begin(), orbit.end(), nxt) == orbit.end()) {
            orbit.push_back(nxt);
            todo.push_back(nxt);
          }
        }
        ASSERT_LT(orbit.size(), 2000u);
      }
      for (std::size_t k = 0; k < pairs.size(); k += 3) {
        bool in = std::find(orbit.begin(), orbit.end(), pairs[k]) != orbit.end();
        EXPECT_EQ(same_orbit(rs, pairs[i], pairs[k], *R, group).has_value(), in);
        ++(in ? hits : misses);
      }
    }
    EXPECT_GT(hits, 0u);
    EXPECT_GT(misses, 0u);
  }
}

TEST(IsomorphismType, Examples) {
  auto rs = RootSystem::build("B2");
  EXPECT_EQ(isomorphism_type(rs, validate_gf(rs, fundamental_datum(rs))), std::vector<std::string>{"affine B2"});
  EXPECT_EQ(isomorphism_type(rs, validate_gf(rs, datum(rs, {{{1, 0}, 0}, {{0, 1}, 0}}))),
            std::vector<std::string>{"finite B2"});
  auto dual = datum(rs, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, 1}});
  EXPECT_EQ(isomorphism_type(rs, validate_gf(rs, dual)), std::vector<std::string>{"affine B2 (dual)"});
  auto a1 = RootSystem::build("A1");
  EXPECT_EQ(isomorphism_type(a1, a1_psix(a1, 0, XKind::P, 3)), std::vector<std::string>{"affine A1"});
}
