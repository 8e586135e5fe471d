#include "mskw/isoperimetry.hpp"

#include <algorithm>
#include <limits>

#include "mskw/errors.hpp"
#include "mskw/flow.hpp"
#include "subset_search.hpp"

namespace mskw {

namespace {

void require_reflexive(const Relation& r, const char* op) {
  if (!r.is_reflexive()) throw UsageError(std::string(op) + " requires a reflexive relation");
}

// Range filter for the variant; a single vertex only has X = V available.
bool in_range(std::uint64_t x, std::uint64_t all, WeakVariant variant) {
  if (x == 0) return false;
  return variant == WeakVariant::kPaperDefinition || x != all || all == 1;
}

void sort_canonical(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

WeakFragmentReport weak_connectivity_by_enumeration(const Relation& r, WeakVariant variant) {
  const auto n = r.vertex_count();
  const auto succ = successor_masks(r);
  const std::uint64_t all = detail::low_bits(n);

  std::vector<std::optional<std::uint64_t>> first_of_size(n + 1);
  std::vector<std::uint64_t> atoms;
  int current = std::numeric_limits<int>::max();

  auto accept = [&](std::uint64_t x) { return in_range(x, all, variant); };
  auto visit = [&](std::uint64_t x, int b) {
    if (b < current) {
      current = b;
      std::fill(first_of_size.begin(), first_of_size.end(), std::nullopt);
      atoms.clear();
    }
    auto& slot = first_of_size[static_cast<std::size_t>(std::popcount(x))];
    if (!slot || canonical_mask_less(x, *slot)) slot = x;
    if (!atoms.empty() && std::popcount(x) < std::popcount(atoms.front())) atoms.clear();
    if (atoms.empty() || std::popcount(x) == std::popcount(atoms.front())) atoms.push_back(x);
  };
  const int kappa = detail::min_boundary_search(succ, 0, all, static_cast<int>(n), accept, visit);

  WeakFragmentReport report;
  report.kappa = kappa;
  report.variant = variant;
  report.method = SearchMethod::kEnumeration;
  for (const auto& f : first_of_size)
    if (f) report.fragments.push_back(VertexSet::from_mask(n, *f));
  std::sort(atoms.begin(), atoms.end(), canonical_mask_less);
  for (const auto a : atoms) report.atoms.push_back(VertexSet::from_mask(n, a));
  return report;
}

}  // namespace

std::string to_string(WeakVariant v) {
  return v == WeakVariant::kPaperDefinition ? "paper-definition" : "proper-subset";
}

WeakVariant weak_variant_from_string(const std::string& s) {
  if (s == "paper-definition") return WeakVariant::kPaperDefinition;
  if (s == "proper-subset") return WeakVariant::kProperSubset;
  throw ValidationError("unknown weak connectivity variant \"" + s + "\"");
}

std::string to_string(SearchMethod m) { return m == SearchMethod::kEnumeration ? "enumeration" : "flow"; }

WeakFragmentReport weak_connectivity_by_flow(const Relation& r, WeakVariant variant) {
  require_reflexive(r, "weak_connectivity");
  const auto n = static_cast<Vertex>(r.vertex_count());
  if (n == 0) throw UsageError("weak_connectivity requires at least one vertex");

  // Candidates with a nonempty exterior: for s in X and t outside Gamma(X),
  // the minimal minimum s-t vertex cut yields the smallest such fragment.
  std::vector<std::pair<int, VertexSet>> candidates;
  std::vector<SplitNetwork::VertexKind> kinds(n, SplitNetwork::VertexKind::kUnit);
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = 0; t < n; ++t) {
      if (r.has_edge(s, t)) continue;
      kinds[s] = SplitNetwork::VertexKind::kUncuttable;
      kinds[t] = SplitNetwork::VertexKind::kUncuttable;
      SplitNetwork split(r, kinds);
      kinds[s] = kinds[t] = SplitNetwork::VertexKind::kUnit;
      const auto value = split.network().max_flow(split.out(s), split.in(t));
      const auto reach = split.network().residual_reachable(split.out(s));
      VertexSet x(n);
      for (Vertex u = 0; u < n; ++u)
        if (reach[split.out(u)]) x.insert(u);
      candidates.emplace_back(static_cast<int>(value), std::move(x));
    }
  }
  // Candidates with Gamma(X) = V: |boundary| = n - |X|, so only the largest sets matter.
  if (variant == WeakVariant::kPaperDefinition || n == 1) {
    candidates.emplace_back(0, VertexSet::full(n));
  } else {
    for (Vertex u = 0; u < n; ++u) {
      auto x = VertexSet::full(n);
      x.erase(u);
      if (image(r, x) == VertexSet::full(n)) candidates.emplace_back(1, std::move(x));
    }
  }

  WeakFragmentReport report;
  report.variant = variant;
  report.method = SearchMethod::kFlow;
  report.kappa = std::numeric_limits<int>::max();
  for (const auto& [value, x] : candidates) report.kappa = std::min(report.kappa, value);

  std::vector<VertexSet> fragments;
  for (auto& [value, x] : candidates)
    if (value == report.kappa) fragments.push_back(x);
  sort_canonical(fragments);
  const auto atom_size = fragments.front().size();
  for (const auto& f : fragments) {
    if (f.size() == atom_size) report.atoms.push_back(f);
    if (report.fragments.empty() || report.fragments.back().size() != f.size()) report.fragments.push_back(f);
  }
  return report;
}

WeakFragmentReport weak_connectivity(const Relation& r, WeakVariant variant, const WeakConnectivityOptions& options) {
  require_reflexive(r, "weak_connectivity");
  if (r.vertex_count() == 0) throw UsageError("weak_connectivity requires at least one vertex");
  const auto cap = std::min<std::size_t>(options.enumeration_cap, 64);
  if (r.vertex_count() <= cap) return weak_connectivity_by_enumeration(r, variant);
  if (options.flow_fallback) return weak_connectivity_by_flow(r, variant);
  throw CapacityError("weak_connectivity: " + std::to_string(r.vertex_count()) +
                      " vertices exceed the enumeration cap of " + std::to_string(cap) +
                      " and the flow fallback is disabled");
}

std::vector<VertexSet> all_weak_fragments(const Relation& r, WeakVariant variant, std::size_t limit,
                                          std::size_t enumeration_cap) {
  require_reflexive(r, "all_weak_fragments");
  const auto n = r.vertex_count();
  if (n == 0 || n > std::min<std::size_t>(enumeration_cap, 64)) {
    throw CapacityError("all_weak_fragments: vertex count outside the enumeration range");
  }
  const auto succ = successor_masks(r);
  const std::uint64_t all = detail::low_bits(n);
  auto accept = [&](std::uint64_t x) { return in_range(x, all, variant); };
  const int kappa = detail::min_boundary_search(succ, 0, all, static_cast<int>(n), accept, [](std::uint64_t, int) {});

  std::vector<std::uint64_t> found;
  detail::min_boundary_search(succ, 0, all, kappa, accept, [&](std::uint64_t x, int b) {
    if (b == kappa) found.push_back(x);
  });
  std::sort(found.begin(), found.end(), canonical_mask_less);
  if (found.size() > limit) found.resize(limit);
  std::vector<VertexSet> out;
  for (const auto x : found) out.push_back(VertexSet::from_mask(n, x));
  return out;
}

AtomPartition atoms_partition_check(const Relation& r, WeakVariant variant, const WeakConnectivityOptions& options) {
  AtomPartition result;
  result.report = weak_connectivity(r, variant, options);
  const auto& atoms = result.report.atoms;
  result.atom_of.assign(r.vertex_count(), -1);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    atoms[i].for_each([&](Vertex x) {
      if (result.atom_of[x] >= 0) {
        if (!result.overlapping_atoms) result.overlapping_atoms.emplace(static_cast<std::size_t>(result.atom_of[x]), i);
      } else {
        result.atom_of[x] = static_cast<std::int64_t>(i);
      }
    });
  }
  for (Vertex x = 0; x < r.vertex_count(); ++x)
    if (result.atom_of[x] < 0) result.uncovered.push_back(x);
  result.holds = !result.overlapping_atoms && result.uncovered.empty();
  return result;
}

}  // namespace mskw
