#include <gtest/gtest.h>

#include <random>

#include "mskw/errors.hpp"
#include "mskw/harness.hpp"
#include "mskw/moser.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace mskw;
using testutil::as_set;

TEST(Moser, KappaVOnZ5) {
  const auto r = testutil::cyclic_cayley(5, {0, 1, 2});
  for (const auto method : {KappaMethod::kEnumeration, KappaMethod::kFlow, KappaMethod::kBothAgree}) {
    const auto report = kappa_v(r, 0, method);
    EXPECT_EQ(report.kappa_v, 2);
    EXPECT_EQ(report.minimal_fragment.members(), testutil::v({0}));
  }
}

TEST(Moser, IdentityOnlyGenerators) {
  const auto report = kappa_v(testutil::cyclic_cayley(6, {0}), 0, KappaMethod::kBothAgree);
  EXPECT_EQ(report.kappa_v, 0);
  EXPECT_EQ(report.minimal_fragment.members(), testutil::v({0}));
}

TEST(Moser, MoserSetPredicate) {
  const auto r = testutil::cyclic_cayley(5, {0, 1, 2});
  EXPECT_TRUE(is_moser_set(r, 0, VertexSet::from_members(5, {0, 1, 2})));
  EXPECT_FALSE(is_moser_set(r, 0, VertexSet::from_members(5, {0, 4})));
  EXPECT_FALSE(is_moser_set(r, 0, VertexSet::from_members(5, {1})));
}

TEST(Moser, EnginesMatchOracleOnRandomDigraphs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 80; ++trial) {
    const auto n = 1 + trial % 10;
    const auto r = random_reflexive_digraph(n, 0.15 + 0.005 * trial, rng);
    const auto m = oracle::matrix_of(r);
    for (Vertex v = 0; v < n; ++v) {
      const auto expected = oracle::kappa_v(m, static_cast<int>(v));
      for (const auto method : {KappaMethod::kEnumeration, KappaMethod::kFlow}) {
        const auto got = kappa_v(r, v, method);
        ASSERT_EQ(got.kappa_v, expected.kappa) << trial << " v=" << v;
        ASSERT_EQ(as_set(got.minimal_fragment), expected.k) << trial << " v=" << v;
      }
    }
  }
}

TEST(Moser, FlowHandlesLargeRelations) {
  const auto r = testutil::cyclic_cayley(40, {0, 1, 5, 17});
  EXPECT_THROW(kappa_v(r, 0, KappaMethod::kEnumeration), CapacityError);
  const auto report = kappa_v(r, 0, KappaMethod::kFlow);
  EXPECT_EQ(report.kappa_v, 3);
  EXPECT_EQ(report.minimal_fragment.members(), testutil::v({0}));
}

TEST(Moser, FragmentsFormALattice) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const auto r = random_reflexive_digraph(7, 0.3, rng);
    for (Vertex v = 0; v < 7; ++v) {
      const auto report = kappa_v(r, v);
      const auto fragments = all_v_fragments(r, v, 10000);
      auto meet = VertexSet::full(7);
      for (const auto& f : fragments) meet &= f;
      EXPECT_EQ(meet, report.minimal_fragment);
      for (const auto& a : fragments) {
        for (const auto& b : fragments) {
          for (const auto& c : {a & b, a | b}) {
            EXPECT_TRUE(is_moser_set(r, v, c));
            EXPECT_EQ(static_cast<int>(boundary(r, c).size()), report.kappa_v);
          }
        }
      }
    }
  }
}

TEST(Moser, MainCheckZ7) {
  const auto r = testutil::cyclic_cayley(7, {0, 1, 2});
  const auto f = VertexSet::from_members(7, {0, 1, 2});
  const auto check = theorem_main_check(r, 0, f, SetSide::kFinite);
  EXPECT_TRUE(check.holds);
  EXPECT_EQ(check.boundary_size, 2);
  EXPECT_EQ(check.margin, 0);
  EXPECT_THROW(theorem_main_check(r, 0, VertexSet::from_members(7, {0, 6}), SetSide::kFinite), UsageError);
}

TEST(Moser, MainCheckCofinite) {
  // F = {0,1,2} given through its complement.
  const auto r = testutil::cyclic_cayley(7, {0, 1, 2});
  const auto complement = VertexSet::from_members(7, {3, 4, 5, 6});
  const auto check = theorem_main_check(r, 0, complement, SetSide::kCofinite);
  EXPECT_TRUE(check.holds);
  EXPECT_EQ(check.boundary_size, 2);
  EXPECT_EQ(check.bound, 2);
  ASSERT_TRUE(check.reverse_inclusion_holds.has_value());
  EXPECT_TRUE(*check.reverse_inclusion_holds);
}

TEST(Moser, SphereGrowthZ9IsTight) {
  const auto steps = sphere_growth(testutil::cyclic_cayley(9, {0, 1}), 0, 20);
  std::size_t admissible = 0;
  for (const auto& s : steps) {
    if (!s.admissible) continue;
    ++admissible;
    EXPECT_EQ(s.margin, 0) << s.j;
    EXPECT_EQ(s.size, s.j + 1);
  }
  EXPECT_EQ(admissible, 8U);
}

TEST(Moser, SphereGrowthMatchesIteratedImage) {
  const auto r = testutil::cyclic_cayley(13, {0, 1, 4});
  const auto steps = sphere_growth(r, 0, 5);
  ASSERT_GE(steps.size(), 2U);
  EXPECT_EQ(steps[1].size, 6U);
  for (const auto& s : steps) EXPECT_EQ(s.size, iterated_image(r, 0, s.j).size());
}

// Hand-built non-transitive relation: a 5-vertex digraph whose K sets differ.
TEST(ThetaPsi, InclusionAndCountingOnFixedDigraph) {
  const std::vector<Edge> edges = {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {0, 1}, {1, 2},
                                   {2, 3}, {3, 4}, {4, 0}, {0, 2}, {3, 1}};
  const Relation r(5, edges);
  const auto tp = build_theta_psi(r);
  const auto m = oracle::matrix_of(r);
  for (Vertex x = 0; x < 5; ++x) {
    const auto expected = oracle::kappa_v(m, static_cast<int>(x));
    EXPECT_EQ(tp.kappa[x], expected.kappa);
    EXPECT_EQ(as_set(tp.minimal_fragments[x]), expected.k);
    for (Vertex y = 0; y < 5; ++y)
      EXPECT_EQ(tp.theta.has_edge(x, y), m[x][y] && expected.k.count(static_cast<int>(y)) != 0);
  }
  EXPECT_TRUE(mader_lemma_check(r, tp).holds);
  EXPECT_TRUE(theta_counting_witness(tp).has_value());
}

TEST(ThetaPsi, InclusionOnRandomDigraphs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = random_reflexive_digraph(5 + trial % 4, 0.35, rng);
    const auto tp = build_theta_psi(r);
    ASSERT_TRUE(mader_lemma_check(r, tp).holds) << trial;
    ASSERT_TRUE(theta_counting_witness(tp).has_value()) << trial;
  }
}

TEST(ThetaPsi, CayleyFragmentsAreTranslates) {
  const auto g = build_group(GroupSpec::dihedral(4));
  const auto tp = build_theta_psi(cayley(testutil::subset(g, {0, 1, 4})));
  for (Element x = 0; x < 8; ++x) EXPECT_EQ(tp.minimal_fragments[x], VertexSet::singleton(8, x));
}
