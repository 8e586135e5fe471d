#include <gtest/gtest.h>

#include <random>

#include "mskw/errors.hpp"
#include "mskw/harness.hpp"
#include "mskw/isoperimetry.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace mskw;
using testutil::as_set;

namespace {

std::vector<std::set<int>> as_sets(const std::vector<VertexSet>& xs) {
  std::vector<std::set<int>> out;
  for (const auto& x : xs) out.push_back(as_set(x));
  return out;
}

Relation two_triangles() {
  std::vector<Edge> edges;
  for (Vertex base : {0U, 3U})
    for (Vertex a = 0; a < 3; ++a)
      for (Vertex b = 0; b < 3; ++b) edges.emplace_back(base + a, base + b);
  return Relation(6, edges);
}

}  // namespace

TEST(WeakConnectivity, PaperDefinitionIsZeroOnFiniteSets) {
  const auto r = testutil::cyclic_cayley(5, {0, 1});
  const auto report = weak_connectivity(r, WeakVariant::kPaperDefinition);
  EXPECT_EQ(report.kappa, 0);
  ASSERT_EQ(report.atoms.size(), 1U);
  EXPECT_EQ(report.atoms[0].size(), 5U);
}

TEST(WeakConnectivity, ProperSubsetOnZ5) {
  const auto r = testutil::cyclic_cayley(5, {0, 1});
  const auto report = weak_connectivity(r, WeakVariant::kProperSubset);
  EXPECT_EQ(report.kappa, 1);
  ASSERT_EQ(report.atoms.size(), 5U);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(report.atoms[v], VertexSet::singleton(5, v));
}

TEST(WeakConnectivity, DisjointTriangles) {
  const auto report = weak_connectivity(two_triangles(), WeakVariant::kProperSubset);
  EXPECT_EQ(report.kappa, 0);
  EXPECT_EQ(as_sets(report.atoms), (std::vector<std::set<int>>{{0, 1, 2}, {3, 4, 5}}));
}

TEST(WeakConnectivity, SingleVertexFallsBackToWholeSet) {
  const std::vector<Edge> loop = {{0, 0}};
  const auto report = weak_connectivity(Relation(1, loop), WeakVariant::kProperSubset);
  EXPECT_EQ(report.kappa, 0);
  EXPECT_EQ(report.atoms.size(), 1U);
}

TEST(WeakConnectivity, MatchesOracleAndFlowOnRandomDigraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = 2 + trial % 8;
    const auto r = random_reflexive_digraph(n, 0.2 + 0.01 * trial, rng);
    const auto m = oracle::matrix_of(r);
    for (const auto variant : {WeakVariant::kPaperDefinition, WeakVariant::kProperSubset}) {
      const auto expected = oracle::weak(m, variant == WeakVariant::kProperSubset);
      const auto got = weak_connectivity(r, variant);
      ASSERT_EQ(got.kappa, expected.kappa) << trial;
      ASSERT_EQ(as_sets(got.atoms), expected.atoms) << trial;
      EXPECT_EQ(weak_connectivity_by_flow(r, variant).kappa, expected.kappa) << trial;
    }
  }
}

TEST(WeakConnectivity, CapacityAndFallback) {
  const auto r = testutil::cyclic_cayley(30, {0, 1, 3});
  EXPECT_THROW(weak_connectivity(r, WeakVariant::kProperSubset), CapacityError);
  const auto report = weak_connectivity(r, WeakVariant::kProperSubset, {22, true});
  EXPECT_EQ(report.kappa, 1);
  EXPECT_EQ(report.method, SearchMethod::kFlow);
}

TEST(WeakConnectivity, VariantNames) {
  EXPECT_EQ(weak_variant_from_string("paper-definition"), WeakVariant::kPaperDefinition);
  EXPECT_EQ(to_string(WeakVariant::kProperSubset), "proper-subset");
  EXPECT_THROW(weak_variant_from_string("strict"), ValidationError);
}

TEST(Atoms, PaperDefinitionAtomsAreCosetsOfTheGeneratedSubgroup) {
  // <{0,2}> in Z6 is {0,2,4}; its cosets are the two atoms.
  const auto r = testutil::cyclic_cayley(6, {0, 2});
  const auto p = atoms_partition_check(r, WeakVariant::kPaperDefinition);
  EXPECT_TRUE(p.holds);
  EXPECT_EQ(as_sets(p.report.atoms), (std::vector<std::set<int>>{{0, 2, 4}, {1, 3, 5}}));
}

TEST(Atoms, ProperSubsetOnConnectedCycle) {
  const auto p = atoms_partition_check(testutil::cyclic_cayley(5, {0, 1}), WeakVariant::kProperSubset);
  EXPECT_TRUE(p.holds);
  EXPECT_TRUE(p.uncovered.empty());
  EXPECT_EQ(p.atom_of, (std::vector<std::int64_t>{0, 1, 2, 3, 4}));
}

TEST(Atoms, ProperSubsetAtomsOverlapOnCompleteRelation) {
  // Every (n-1)-subset has boundary 1, so the atoms overlap.
  const auto p = atoms_partition_check(testutil::cyclic_cayley(4, {0, 1, 2, 3}), WeakVariant::kProperSubset);
  EXPECT_EQ(p.report.kappa, 1);
  EXPECT_EQ(p.report.atoms.size(), 4U);
  EXPECT_FALSE(p.holds);
  EXPECT_TRUE(p.overlapping_atoms.has_value());
}

TEST(WeakFragments, LatticeClosureOnRandomDigraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto r = random_reflexive_digraph(6, 0.35, rng);
    const auto report = weak_connectivity(r, WeakVariant::kProperSubset);
    const auto fragments = all_weak_fragments(r, WeakVariant::kProperSubset, 1000);
    for (const auto& f : fragments) EXPECT_EQ(static_cast<int>(boundary(r, f).size()), report.kappa);
    for (const auto& a : fragments) {
      for (const auto& b : fragments) {
        const auto meet = a & b;
        const auto join = a | b;
        if (meet.empty() || join == VertexSet::full(6)) continue;
        EXPECT_EQ(static_cast<int>(boundary(r, meet).size()), report.kappa);
        EXPECT_EQ(static_cast<int>(boundary(r, join).size()), report.kappa);
      }
    }
  }
}

TEST(Submodularity, ExhaustiveOnSmallDigraph) {
  std::mt19937_64 rng(3);
  const auto r = random_reflexive_digraph(7, 0.3, rng);
  for (std::uint64_t x = 0; x < 128; ++x) {
    for (std::uint64_t y = 0; y < 128; ++y) {
      const auto X = VertexSet::from_mask(7, x);
      const auto Y = VertexSet::from_mask(7, y);
      ASSERT_LE(boundary(r, X | Y).size() + boundary(r, X & Y).size(), boundary(r, X).size() + boundary(r, Y).size());
    }
  }
}
