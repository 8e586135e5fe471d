#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mskw/relation.hpp"

namespace mskw {

/// Which sets the weak connectivity minimum ranges over.
///
/// kPaperDefinition takes every nonempty X, so on a finite vertex set the
/// value is always 0 (X = V). kProperSubset restricts to nonempty X != V,
/// the informative finite reading; on a single vertex it falls back to X = V.
enum class WeakVariant { kPaperDefinition, kProperSubset };

enum class SearchMethod { kEnumeration, kFlow };

std::string to_string(WeakVariant v);
WeakVariant weak_variant_from_string(const std::string& s);
std::string to_string(SearchMethod m);

struct WeakFragmentReport {
  int kappa = 0;
  /// One witness per cardinality (the canonically first), in canonical order.
  std::vector<VertexSet> fragments;
  /// Every minimum-cardinality fragment, in canonical order.
  std::vector<VertexSet> atoms;
  WeakVariant variant = WeakVariant::kProperSubset;
  SearchMethod method = SearchMethod::kEnumeration;
};

struct WeakConnectivityOptions {
  std::size_t enumeration_cap = 22;
  bool flow_fallback = false;
};

/// Exact weak connectivity of a reflexive relation. Enumerates subsets up to
/// `enumeration_cap` vertices; above it either uses the cut-based search
/// (flow_fallback) or throws CapacityError.
WeakFragmentReport weak_connectivity(const Relation& r, WeakVariant variant,
                                     const WeakConnectivityOptions& options = {});

/// Cut-based computation; exposed separately so it can be cross-checked.
WeakFragmentReport weak_connectivity_by_flow(const Relation& r, WeakVariant variant);

/// Every weak fragment, canonical order, at most `limit` of them (enumeration only).
std::vector<VertexSet> all_weak_fragments(const Relation& r, WeakVariant variant, std::size_t limit,
                                          std::size_t enumeration_cap = 22);

struct AtomPartition {
  bool holds = false;
  /// Index into report.atoms of the atom holding each vertex, -1 if uncovered.
  std::vector<std::int64_t> atom_of;
  std::optional<std::pair<std::size_t, std::size_t>> overlapping_atoms;
  std::vector<Vertex> uncovered;
  WeakFragmentReport report;
};

/// Whether the weak atoms are pairwise disjoint and cover V.
AtomPartition atoms_partition_check(const Relation& r, WeakVariant variant = WeakVariant::kProperSubset,
                                    const WeakConnectivityOptions& options = {});

}  // namespace mskw
