#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "mskw/relation.hpp"

namespace mskw {

/// Integer-capacity flow network solved with shortest augmenting paths
/// (Edmonds-Karp). Arcs are explored in insertion order, so results are
/// deterministic.
class FlowNetwork {
 public:
  using Node = std::uint32_t;
  using ArcId = std::uint32_t;
  static constexpr std::int64_t kInfinite = std::numeric_limits<std::int32_t>::max();

  explicit FlowNetwork(std::size_t node_count);

  Node add_node();
  ArcId add_arc(Node from, Node to, std::int64_t capacity);

  /// Augments until no path remains or the flow reaches `limit`.
  std::int64_t max_flow(Node source, Node sink, std::int64_t limit = kInfinite);

  /// Nodes reachable from `source` in the residual network. After max_flow
  /// this is the source side of the unique minimal minimum cut.
  std::vector<bool> residual_reachable(Node source) const;

  std::size_t node_count() const { return out_.size(); }
  std::int64_t flow(ArcId arc) const { return arcs_[arc].flow; }
  std::int64_t capacity(ArcId arc) const { return arcs_[arc].capacity; }
  Node head(ArcId arc) const { return arcs_[arc].to; }
  /// Forward arcs leaving `node`, in insertion order.
  std::vector<ArcId> forward_arcs(Node node) const;

 private:
  struct Arc {
    Node to;
    std::int64_t capacity;
    std::int64_t flow;
  };
  // Arc 2k is forward, 2k+1 its residual twin.
  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcId>> out_;
};

/// Vertex-split network of a relation: vertex x becomes in(x) -> out(x) with
/// capacity 1 (or removed when forbidden, or infinite when uncuttable); every
/// non-loop edge x -> y becomes out(x) -> in(y) with infinite capacity.
class SplitNetwork {
 public:
  enum class VertexKind { kUnit, kUncuttable, kForbidden };

  SplitNetwork(const Relation& r, const std::vector<VertexKind>& kinds);

  FlowNetwork& network() { return network_; }
  const FlowNetwork& network() const { return network_; }
  FlowNetwork::Node in(Vertex x) const { return 2 * x; }
  FlowNetwork::Node out(Vertex x) const { return 2 * x + 1; }
  /// Split arc of x, or npos for forbidden vertices.
  FlowNetwork::ArcId split_arc(Vertex x) const { return split_arc_[x]; }

  static constexpr FlowNetwork::ArcId npos = std::numeric_limits<FlowNetwork::ArcId>::max();

 private:
  FlowNetwork network_;
  std::vector<FlowNetwork::ArcId> split_arc_;
};

}  // namespace mskw
