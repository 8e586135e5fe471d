#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mskw/group.hpp"
#include "mskw/relation.hpp"

namespace mskw {

// ---------------------------------------------------------------------------
// Bipartite matching

/// partner[x] is the right vertex matched to left vertex x.
struct PerfectMatching {
  std::vector<std::uint32_t> partner;
};

/// A left set whose neighbourhood is strictly smaller than itself.
struct HallViolator {
  IndexSet deficient;
  IndexSet neighbourhood;
};

using HallOutcome = std::variant<PerfectMatching, HallViolator>;

/// Either a perfect matching inside `adjacency` (left x may use right
/// vertices adjacency[x]) or a Hall violator. Both sides have
/// adjacency.size() vertices. Greedy initial matching in index order, then
/// augmenting paths from each free left vertex in index order.
HallOutcome hall_matching(const std::vector<std::vector<std::uint32_t>>& adjacency);

/// Size of a maximum matching; the same augmenting-path engine.
std::size_t maximum_matching_size(const std::vector<std::vector<std::uint32_t>>& adjacency, std::size_t right_size);

// ---------------------------------------------------------------------------
// sigma permutation

/// A permutation sigma of A with x * sigma(x) outside A for every x in A.
struct SigmaPermutation {
  GroupSubset domain;
  /// (x, sigma(x)) pairs, x increasing.
  std::vector<std::pair<Element, Element>> sigma;
};

/// Throws UsageError when A contains the identity.
SigmaPermutation sigma_permutation(const GroupSubset& a);

/// Empty string when valid, otherwise the first violated condition.
std::string verify_sigma(const SigmaPermutation& s);

// ---------------------------------------------------------------------------
// vertex-disjoint paths

struct DisjointPaths {
  std::vector<std::vector<Vertex>> paths;
};

/// Fewer than k vertices meeting every source-to-sink path.
struct VertexCut {
  VertexSet cut;
};

using PathsOutcome = std::variant<DisjointPaths, VertexCut>;

/// k vertex-disjoint directed paths from `sources` to `sinks` avoiding
/// `forbidden`, or a vertex cut smaller than k. A vertex that is both a source
/// and a sink is a one-vertex path.
PathsOutcome disjoint_paths(const Relation& r, const VertexSet& sources, const VertexSet& sinks, std::size_t k,
                            const VertexSet& forbidden);

/// Empty string when the paths satisfy the contract.
std::string verify_disjoint_paths(const Relation& r, const VertexSet& sources, const VertexSet& sinks,
                                  const VertexSet& forbidden, const DisjointPaths& paths);
/// Empty string when removing the cut disconnects sources from sinks.
std::string verify_vertex_cut(const Relation& r, const VertexSet& sources, const VertexSet& sinks,
                              const VertexSet& forbidden, const VertexCut& cut);

// ---------------------------------------------------------------------------
// cycle systems

/// Directed cycles through `hub` meeting pairwise exactly in the hub. Each
/// cycle is listed from the hub; the closing edge back to the hub is implied.
struct CycleSystem {
  Vertex hub = 0;
  std::vector<std::vector<Vertex>> cycles;
};

/// |Gamma(hub)| cycles. Throws UsageError for relations with loops.
CycleSystem mader_cycles(const Relation& r, Vertex hub);

/// Empty string when valid; `expected` is the required number of cycles.
std::string verify_cycle_system(const Relation& r, const CycleSystem& system, std::size_t expected);

// ---------------------------------------------------------------------------
// short zero products

/// s_1 ... s_k = identity with every s_i in S.
struct ZeroProductCertificate {
  GroupSubset generators;
  std::vector<Element> sequence;
  std::size_t k() const { return sequence.size(); }
  /// ceil(|G| / |S|)
  std::size_t bound() const;
};

/// A shortest such product, by breadth-first search from the identity.
ZeroProductCertificate shepherdson_sequence(const GroupSubset& s);

std::string verify_zero_product(const ZeroProductCertificate& c);

}  // namespace mskw
