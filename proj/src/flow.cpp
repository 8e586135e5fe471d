#include "mskw/flow.hpp"

#include <algorithm>
#include <queue>

#include "mskw/errors.hpp"

namespace mskw {

FlowNetwork::FlowNetwork(std::size_t node_count) : out_(node_count) {}

FlowNetwork::Node FlowNetwork::add_node() {
  out_.emplace_back();
  return static_cast<Node>(out_.size() - 1);
}

FlowNetwork::ArcId FlowNetwork::add_arc(Node from, Node to, std::int64_t capacity) {
  if (from >= out_.size() || to >= out_.size()) throw UsageError("flow arc endpoint out of range");
  const auto id = static_cast<ArcId>(arcs_.size());
  arcs_.push_back({to, capacity, 0});
  arcs_.push_back({from, 0, 0});
  out_[from].push_back(id);
  out_[to].push_back(id + 1);
  return id;
}

std::int64_t FlowNetwork::max_flow(Node source, Node sink, std::int64_t limit) {
  std::int64_t total = 0;
  std::vector<ArcId> via(out_.size());
  std::vector<bool> seen(out_.size());
  while (total < limit) {
    std::fill(seen.begin(), seen.end(), false);
    std::queue<Node> queue;
    queue.push(source);
    seen[source] = true;
    while (!queue.empty() && !seen[sink]) {
      const Node u = queue.front();
      queue.pop();
      for (const auto a : out_[u]) {
        const auto& arc = arcs_[a];
        if (!seen[arc.to] && arc.capacity - arc.flow > 0) {
          seen[arc.to] = true;
          via[arc.to] = a;
          queue.push(arc.to);
        }
      }
    }
    if (!seen[sink]) break;

    std::int64_t push = limit - total;
    for (Node v = sink; v != source; v = arcs_[via[v] ^ 1U].to) {
      push = std::min(push, arcs_[via[v]].capacity - arcs_[via[v]].flow);
    }
    for (Node v = sink; v != source; v = arcs_[via[v] ^ 1U].to) {
      arcs_[via[v]].flow += push;
      arcs_[via[v] ^ 1U].flow -= push;
    }
    total += push;
  }
  return total;
}

std::vector<bool> FlowNetwork::residual_reachable(Node source) const {
  std::vector<bool> seen(out_.size(), false);
  std::queue<Node> queue;
  queue.push(source);
  seen[source] = true;
  while (!queue.empty()) {
    const Node u = queue.front();
    queue.pop();
    for (const auto a : out_[u]) {
      const auto& arc = arcs_[a];
      if (!seen[arc.to] && arc.capacity - arc.flow > 0) {
        seen[arc.to] = true;
        queue.push(arc.to);
      }
    }
  }
  return seen;
}

std::vector<FlowNetwork::ArcId> FlowNetwork::forward_arcs(Node node) const {
  std::vector<ArcId> out;
  for (const auto a : out_[node])
    if ((a & 1U) == 0) out.push_back(a);
  return out;
}

SplitNetwork::SplitNetwork(const Relation& r, const std::vector<VertexKind>& kinds)
    : network_(2 * r.vertex_count()), split_arc_(r.vertex_count(), npos) {
  if (kinds.size() != r.vertex_count()) throw UsageError("split network needs one kind per vertex");
  for (Vertex x = 0; x < r.vertex_count(); ++x) {
    switch (kinds[x]) {
      case VertexKind::kUnit: split_arc_[x] = network_.add_arc(in(x), out(x), 1); break;
      case VertexKind::kUncuttable: split_arc_[x] = network_.add_arc(in(x), out(x), FlowNetwork::kInfinite); break;
      case VertexKind::kForbidden: break;
    }
  }
  for (Vertex x = 0; x < r.vertex_count(); ++x) {
    if (kinds[x] == VertexKind::kForbidden) continue;
    for (const auto y : r.successors(x)) {
      if (y != x && kinds[y] != VertexKind::kForbidden) network_.add_arc(out(x), in(y), FlowNetwork::kInfinite);
    }
  }
}

}  // namespace mskw
