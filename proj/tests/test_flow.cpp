#include <gtest/gtest.h>

#include "mskw/flow.hpp"
#include "test_util.hpp"

using namespace mskw;

TEST(FlowNetwork, ClassicExample) {
  // Two disjoint routes of capacity 3 and 2, plus a cross arc.
  FlowNetwork net(4);
  net.add_arc(0, 1, 3);
  net.add_arc(0, 2, 2);
  net.add_arc(1, 2, 5);
  net.add_arc(1, 3, 2);
  net.add_arc(2, 3, 3);
  EXPECT_EQ(net.max_flow(0, 3), 5);
  const auto side = net.residual_reachable(0);
  EXPECT_TRUE(side[0]);
  EXPECT_FALSE(side[3]);
}

TEST(FlowNetwork, LimitStopsEarly) {
  FlowNetwork net(2);
  net.add_arc(0, 1, 10);
  EXPECT_EQ(net.max_flow(0, 1, 4), 4);
}

TEST(FlowNetwork, FlowConservation) {
  FlowNetwork net(5);
  std::vector<FlowNetwork::ArcId> arcs = {net.add_arc(0, 1, 4), net.add_arc(0, 2, 4), net.add_arc(1, 3, 3),
                                          net.add_arc(2, 3, 2), net.add_arc(1, 2, 1), net.add_arc(3, 4, 10)};
  const auto value = net.max_flow(0, 4);
  EXPECT_EQ(value, 5);
  for (FlowNetwork::Node v = 1; v < 4; ++v) {
    std::int64_t balance = 0;
    for (FlowNetwork::Node u = 0; u < 5; ++u)
      for (const auto a : net.forward_arcs(u)) {
        if (u == v) balance -= net.flow(a);
        if (net.head(a) == v) balance += net.flow(a);
      }
    EXPECT_EQ(balance, 0) << v;
  }
  for (const auto a : arcs) EXPECT_LE(net.flow(a), net.capacity(a));
}

TEST(SplitNetwork, VertexConnectivityOfCycle) {
  // Directed 5-cycle: one internal vertex separates 0 from 2.
  const auto r = testutil::cyclic_cayley(5, {1});
  std::vector<SplitNetwork::VertexKind> kinds(5, SplitNetwork::VertexKind::kUnit);
  kinds[0] = kinds[2] = SplitNetwork::VertexKind::kUncuttable;
  SplitNetwork split(r, kinds);
  EXPECT_EQ(split.network().max_flow(split.out(0), split.in(2)), 1);
}

TEST(SplitNetwork, ForbiddenVertexHasNoSplitArc) {
  const auto r = testutil::cyclic_cayley(4, {1, 2});
  std::vector<SplitNetwork::VertexKind> kinds(4, SplitNetwork::VertexKind::kUnit);
  kinds[1] = SplitNetwork::VertexKind::kForbidden;
  SplitNetwork split(r, kinds);
  EXPECT_EQ(split.split_arc(1), SplitNetwork::npos);
  EXPECT_NE(split.split_arc(2), SplitNetwork::npos);
}
