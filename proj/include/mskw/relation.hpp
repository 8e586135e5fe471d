#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mskw/group.hpp"
#include "mskw/index_set.hpp"

namespace mskw {

using Vertex = std::uint32_t;
using VertexSet = IndexSet;
using Edge = std::pair<Vertex, Vertex>;

/// A finite directed relation on {0, ..., n-1}. Successor and predecessor
/// lists are sorted and deduplicated. Immutable once built.
class Relation {
 public:
  static constexpr std::size_t kMaxVertices = 100000;

  Relation() = default;
  /// Throws CapacityError above kMaxVertices and ValidationError for
  /// out-of-range endpoints.
  Relation(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return successors_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Vertex> successors(Vertex x) const { return successors_[x]; }
  std::span<const Vertex> predecessors(Vertex x) const { return predecessors_[x]; }
  bool has_edge(Vertex x, Vertex y) const;
  /// True iff every vertex carries a loop.
  bool is_reflexive() const { return reflexive_; }
  bool has_loops() const { return loop_count_ > 0; }
  std::vector<Edge> edges() const;

  friend bool operator==(const Relation& a, const Relation& b) { return a.successors_ == b.successors_; }

 private:
  std::vector<std::vector<Vertex>> successors_;
  std::vector<std::vector<Vertex>> predecessors_;
  std::size_t edge_count_ = 0;
  std::size_t loop_count_ = 0;
  bool reflexive_ = false;
};

/// Cay(G, S): edge (x, y) iff x^-1 y is in S.
Relation cayley(const GroupSubset& generators);

VertexSet image(const Relation& r, const VertexSet& x);
VertexSet preimage(const Relation& r, const VertexSet& x);
/// Gamma(X) \ X.
VertexSet boundary(const Relation& r, const VertexSet& x);
/// Gamma^-(X) \ X, the boundary in the reversed relation.
VertexSet inverse_boundary(const Relation& r, const VertexSet& x);
/// V \ Gamma(X).
VertexSet exterior(const Relation& r, const VertexSet& x);
/// Gamma^j(v), with Gamma^0(v) = {v}.
VertexSet iterated_image(const Relation& r, Vertex v, std::size_t j);

struct InducedRelation {
  Relation relation;
  /// local index -> host index
  std::vector<Vertex> host_vertex;
  /// host index -> local index, kNotInduced for vertices outside X
  std::vector<std::uint32_t> local_vertex;

  static constexpr std::uint32_t kNotInduced = 0xffffffffU;
};

/// The subrelation on X. Throws UsageError for empty X.
InducedRelation induced(const Relation& r, const VertexSet& x);
Relation reflexive_closure(const Relation& r);
/// Every edge reversed; its successor sets are the predecessor sets of r.
Relation reverse(const Relation& r);

/// Successor bitmasks for relations on at most 64 vertices.
std::vector<std::uint64_t> successor_masks(const Relation& r);
std::vector<std::uint64_t> predecessor_masks(const Relation& r);

/// Graph JSON: {"n": int, "edges": [[u,v],...], "reflexive_closure": bool}.
Relation relation_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Relation& r);

}  // namespace mskw
