#include <gtest/gtest.h>

#include <numeric>

#include "mskw/errors.hpp"
#include "mskw/group.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace mskw;
using testutil::subset;

namespace {

void expect_group_axioms(const GroupTable& g) {
  const auto n = g.order();
  for (Element x = 0; x < n; ++x) {
    EXPECT_EQ(g.multiply(0, x), x);
    EXPECT_EQ(g.multiply(x, 0), x);
    EXPECT_EQ(g.multiply(x, g.inverse(x)), 0U);
    EXPECT_EQ(g.multiply(g.inverse(x), x), 0U);
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        ASSERT_EQ(g.multiply(g.multiply(x, y), z), g.multiply(x, g.multiply(y, z)));
  }
}

std::size_t element_order(const GroupTable& g, Element x) {
  std::size_t k = 1;
  for (Element p = x; p != 0; p = g.multiply(p, x)) ++k;
  return k;
}

}  // namespace

TEST(IndexSet, BasicOperations) {
  auto a = IndexSet::from_members(70, {1, 3, 65});
  const auto b = IndexSet::from_members(70, {3, 4});
  EXPECT_EQ(a.size(), 3U);
  EXPECT_EQ((a | b).members(), testutil::v({1, 3, 4, 65}));
  EXPECT_EQ((a & b).members(), testutil::v({3}));
  EXPECT_EQ((a - b).members(), testutil::v({1, 65}));
  EXPECT_EQ(a.complement().size(), 67U);
  EXPECT_TRUE(IndexSet::from_members(70, {3}).is_subset_of(b));
  a.erase(65);
  EXPECT_FALSE(a.contains(65));
  EXPECT_THROW(IndexSet::from_members(4, {4}), ValidationError);
  EXPECT_THROW(a | IndexSet(71), UsageError);
}

TEST(IndexSet, CanonicalOrderIsCardinalityThenLexicographic) {
  const auto a = IndexSet::from_members(5, {0, 4});
  const auto b = IndexSet::from_members(5, {1, 2});
  const auto c = IndexSet::from_members(5, {3});
  EXPECT_TRUE(canonical_less(c, a));
  EXPECT_TRUE(canonical_less(a, b));
  EXPECT_FALSE(canonical_less(b, a));
  EXPECT_TRUE(canonical_mask_less(0b10011, 0b10101));
}

TEST(Group, CyclicTableIsAdditionModN) {
  const auto g = testutil::cyclic(5);
  for (Element i = 0; i < 5; ++i)
    for (Element j = 0; j < 5; ++j) EXPECT_EQ(g->multiply(i, j), (i + j) % 5);
  EXPECT_TRUE(g->is_abelian());
}

TEST(Group, StandardFamiliesSatisfyAxioms) {
  for (const auto& spec : {GroupSpec::cyclic(1), GroupSpec::cyclic(12), GroupSpec::dihedral(3), GroupSpec::dihedral(6),
                           GroupSpec::symmetric(3), GroupSpec::symmetric(4), GroupSpec::quaternion(),
                           GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::dihedral(4)})}) {
    SCOPED_TRACE(spec.name());
    expect_group_axioms(*build_group(spec));
  }
}

TEST(Group, OrdersAndCommutativity) {
  EXPECT_EQ(build_group(GroupSpec::dihedral(6))->order(), 12U);
  EXPECT_EQ(build_group(GroupSpec::symmetric(4))->order(), 24U);
  EXPECT_FALSE(build_group(GroupSpec::symmetric(3))->is_abelian());
  EXPECT_FALSE(build_group(GroupSpec::dihedral(4))->is_abelian());
  const auto z = build_group(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(4)}));
  EXPECT_EQ(z->order(), 8U);
  EXPECT_TRUE(z->is_abelian());
}

TEST(Group, QuaternionHasOneInvolution) {
  const auto q = build_group(GroupSpec::quaternion());
  std::size_t involutions = 0;
  std::size_t order_four = 0;
  for (Element x = 1; x < 8; ++x) {
    const auto k = element_order(*q, x);
    involutions += k == 2;
    order_four += k == 4;
  }
  EXPECT_EQ(involutions, 1U);
  EXPECT_EQ(order_four, 6U);
  EXPECT_FALSE(q->is_abelian());
}

TEST(Group, DihedralHasNPlusOneInvolutionsForOddN) {
  const auto d = build_group(GroupSpec::dihedral(5));
  std::size_t involutions = 0;
  for (Element x = 1; x < d->order(); ++x) involutions += element_order(*d, x) == 2;
  EXPECT_EQ(involutions, 5U);
}

TEST(Group, ExplicitTableRejectsMissingInverse) {
  // 0 is the identity but nothing maps 1 back to it.
  try {
    GroupTable::from_table({{0, 1}, {1, 1}});
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("inverse"), std::string::npos);
  }
}

TEST(Group, ExplicitTableRejectsNonAssociative) {
  // Latin square with identity 0 that is not associative.
  const std::vector<std::vector<Element>> t = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    GroupTable::from_table(t);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("associativity"), std::string::npos);
  }
}

TEST(Group, ExplicitTableMovesIdentityToZero) {
  // Z3 written with identity at index 2.
  const auto g = GroupTable::from_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  expect_group_axioms(g);
  EXPECT_EQ(g.order(), 3U);
}

TEST(Group, SpecJsonRoundTrip) {
  const auto spec = GroupSpec::product({GroupSpec::cyclic(3), GroupSpec::quaternion()});
  EXPECT_EQ(group_spec_from_json(to_json(spec)), spec);
  EXPECT_EQ(group_spec_from_json(nlohmann::json::parse(R"({"type":"dihedral","n":6})")), GroupSpec::dihedral(6));
  EXPECT_THROW(group_spec_from_json(nlohmann::json::parse(R"({"type":"klein"})")), ValidationError);
  EXPECT_THROW(build_group(GroupSpec::symmetric(6)), CapacityError);
  EXPECT_THROW(build_group(GroupSpec::dihedral(2)), ValidationError);
}

TEST(Group, ProductSetInZ7) {
  const auto g = testutil::cyclic(7);
  const auto a = subset(g, {0, 1, 2});
  EXPECT_EQ(product_set(a, a).elements(), testutil::v({0, 1, 2, 3, 4}));
  EXPECT_EQ(inverse_set(subset(g, {1, 2})).elements(), testutil::v({5, 6}));
  EXPECT_EQ(complement_set(a).elements(), testutil::v({3, 4, 5, 6}));
  EXPECT_THROW(product_set(a, subset(testutil::cyclic(8), {1})), UsageError);
}

TEST(Group, ProductSetMatchesOracleOnS3) {
  const auto g = build_group(GroupSpec::symmetric(3));
  for (std::uint64_t ma = 1; ma < 64; ma += 5) {
    for (std::uint64_t mb = 1; mb < 64; mb += 7) {
      const auto a = GroupSubset(g, IndexSet::from_mask(6, ma));
      const auto b = GroupSubset(g, IndexSet::from_mask(6, mb));
      std::set<int> expected;
      for (auto x : a.elements())
        for (auto y : b.elements()) expected.insert(static_cast<int>(g->multiply(x, y)));
      EXPECT_EQ(testutil::as_set(product_set(a, b).members()), expected);
    }
  }
}
