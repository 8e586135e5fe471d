#include "mskw/moser.hpp"

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

void require_vertex(const Relation& r, Vertex v) {
  if (v >= r.vertex_count()) {
    throw UsageError("vertex " + std::to_string(v) + " outside relation of size " + std::to_string(r.vertex_count()));
  }
}

void require_enumerable(const Relation& r, const KappaOptions& options) {
  const auto cap = std::min<std::size_t>(options.enumeration_cap, 64);
  if (r.vertex_count() > cap) {
    throw CapacityError("kappa_v enumeration: " + std::to_string(r.vertex_count()) +
                        " vertices exceed the cap of " + std::to_string(cap));
  }
}

void keep_sample(std::vector<std::uint64_t>& sample) {
  std::sort(sample.begin(), sample.end(), canonical_mask_less);
  sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
  if (sample.size() > MoserReport::kFragmentSampleSize) sample.resize(MoserReport::kFragmentSampleSize);
}

MoserReport kappa_v_by_enumeration(const Relation& r, Vertex v, const KappaOptions& options) {
  require_enumerable(r, options);
  const auto n = r.vertex_count();
  const auto succ = successor_masks(r);
  const auto pred = predecessor_masks(r);
  const std::uint64_t all = detail::low_bits(n);
  const std::uint64_t required = std::uint64_t{1} << v;
  const std::uint64_t optional = all & ~pred[v];

  std::uint64_t running = all;
  std::vector<std::uint64_t> sample;
  int current = std::numeric_limits<int>::max();
  auto visit = [&](std::uint64_t x, int b) {
    if (b < current) {
      current = b;
      running = all;
      sample.clear();
    }
    running &= x;
    sample.push_back(x);
    if (sample.size() > 2 * MoserReport::kFragmentSampleSize) keep_sample(sample);
  };
  const int kappa = detail::min_boundary_search(
      succ, required, optional, static_cast<int>(n), [](std::uint64_t) { return true; }, visit);
  keep_sample(sample);

  MoserReport report;
  report.vertex = v;
  report.kappa_v = kappa;
  report.minimal_fragment = VertexSet::from_mask(n, running);
  for (const auto x : sample) report.fragments_sample.push_back(VertexSet::from_mask(n, x));
  report.method = KappaMethod::kEnumeration;
  if (static_cast<int>(boundary(r, report.minimal_fragment).size()) != kappa) {
    throw ConsistencyError("intersection of v-fragments is not a v-fragment");
  }
  return report;
}

// For every t outside Gamma(v), a minimum vertex cut separates v from t while
// the in-neighbours of v are tied to the sink, so they can be cut but never
// join the source side. The family with empty exterior is handled directly:
// its best member is the largest Moser set V \ (Gamma^-(v) \ {v}).
MoserReport kappa_v_by_flow(const Relation& r, Vertex v) {
  const auto n = static_cast<Vertex>(r.vertex_count());
  auto forbidden_side = VertexSet::from_members(n, r.predecessors(v));
  forbidden_side.erase(v);

  std::vector<std::pair<int, VertexSet>> candidates;
  std::vector<SplitNetwork::VertexKind> kinds(n, SplitNetwork::VertexKind::kUnit);
  kinds[v] = SplitNetwork::VertexKind::kUncuttable;
  for (Vertex t = 0; t < n; ++t) {
    if (r.has_edge(v, t)) continue;
    kinds[t] = SplitNetwork::VertexKind::kUncuttable;
    SplitNetwork split(r, kinds);
    kinds[t] = SplitNetwork::VertexKind::kUnit;
    auto& net = split.network();
    const auto sink = net.add_node();
    net.add_arc(split.in(t), sink, FlowNetwork::kInfinite);
    forbidden_side.for_each([&](Vertex w) { net.add_arc(split.out(w), sink, FlowNetwork::kInfinite); });
    const auto value = net.max_flow(split.out(v), sink);
    const auto reach = net.residual_reachable(split.out(v));
    VertexSet x(n);
    for (Vertex u = 0; u < n; ++u)
      if (reach[split.out(u)]) x.insert(u);
    candidates.emplace_back(static_cast<int>(value), std::move(x));
  }
  const auto largest = forbidden_side.complement();
  if (image(r, largest).size() == n) candidates.emplace_back(static_cast<int>(forbidden_side.size()), largest);

  MoserReport report;
  report.vertex = v;
  report.method = KappaMethod::kFlow;
  report.kappa_v = std::numeric_limits<int>::max();
  for (const auto& c : candidates) report.kappa_v = std::min(report.kappa_v, c.first);
  report.minimal_fragment = VertexSet::full(n);
  for (const auto& [value, x] : candidates) {
    if (value != report.kappa_v) continue;
    report.minimal_fragment &= x;
    report.fragments_sample.push_back(x);
  }
  std::sort(report.fragments_sample.begin(), report.fragments_sample.end(), canonical_less);
  report.fragments_sample.erase(std::unique(report.fragments_sample.begin(), report.fragments_sample.end()),
                                report.fragments_sample.end());
  if (report.fragments_sample.size() > MoserReport::kFragmentSampleSize) {
    report.fragments_sample.resize(MoserReport::kFragmentSampleSize);
  }
  return report;
}

}  // namespace

std::string to_string(KappaMethod m) {
  switch (m) {
    case KappaMethod::kEnumeration: return "enumeration";
    case KappaMethod::kFlow: return "flow";
    case KappaMethod::kBothAgree: return "both-agree";
  }
  return "?";
}

KappaMethod kappa_method_from_string(const std::string& s) {
  if (s == "enumeration") return KappaMethod::kEnumeration;
  if (s == "flow") return KappaMethod::kFlow;
  if (s == "both-agree") return KappaMethod::kBothAgree;
  throw ValidationError("unknown kappa_v method \"" + s + "\"");
}

bool is_moser_set(const Relation& r, Vertex v, const VertexSet& f) {
  require_reflexive(r, "is_moser_set");
  require_vertex(r, v);
  if (!f.contains(v)) return false;
  for (const auto w : r.predecessors(v))
    if (w != v && f.contains(w)) return false;
  return true;
}

MoserReport kappa_v(const Relation& r, Vertex v, KappaMethod method, const KappaOptions& options) {
  require_reflexive(r, "kappa_v");
  require_vertex(r, v);
  switch (method) {
    case KappaMethod::kEnumeration: return kappa_v_by_enumeration(r, v, options);
    case KappaMethod::kFlow: return kappa_v_by_flow(r, v);
    case KappaMethod::kBothAgree: {
      auto enumerated = kappa_v_by_enumeration(r, v, options);
      const auto flowed = kappa_v_by_flow(r, v);
      if (enumerated.kappa_v != flowed.kappa_v || enumerated.minimal_fragment != flowed.minimal_fragment) {
        throw ConsistencyError("kappa_v engines disagree at vertex " + std::to_string(v) + ": enumeration " +
                               std::to_string(enumerated.kappa_v) + ", flow " + std::to_string(flowed.kappa_v));
      }
      enumerated.method = KappaMethod::kBothAgree;
      return enumerated;
    }
  }
  throw UsageError("unknown kappa_v method");
}

std::vector<VertexSet> all_v_fragments(const Relation& r, Vertex v, std::size_t limit, const KappaOptions& options) {
  require_reflexive(r, "all_v_fragments");
  require_vertex(r, v);
  require_enumerable(r, options);
  const auto n = r.vertex_count();
  const auto succ = successor_masks(r);
  const auto pred = predecessor_masks(r);
  const std::uint64_t required = std::uint64_t{1} << v;
  const std::uint64_t optional = detail::low_bits(n) & ~pred[v];
  auto any = [](std::uint64_t) { return true; };
  const int kappa =
      detail::min_boundary_search(succ, required, optional, static_cast<int>(n), any, [](std::uint64_t, int) {});
  std::vector<std::uint64_t> found;
  detail::min_boundary_search(succ, required, optional, kappa, any, [&](std::uint64_t x, int b) {
    if (b == kappa) found.push_back(x);
  });
  std::sort(found.begin(), found.end(), canonical_mask_less);
  if (found.size() > limit) found.resize(limit);
  std::vector<VertexSet> out;
  for (const auto x : found) out.push_back(VertexSet::from_mask(n, x));
  return out;
}

ThetaPsi build_theta_psi(const Relation& r, const KappaOptions& options) {
  require_reflexive(r, "build_theta_psi");
  const auto n = static_cast<Vertex>(r.vertex_count());
  const auto method = n <= std::min<std::size_t>(options.enumeration_cap, 64) ? KappaMethod::kEnumeration
                                                                             : KappaMethod::kFlow;
  ThetaPsi tp;
  for (Vertex x = 0; x < n; ++x) {
    auto report = kappa_v(r, x, method, options);
    tp.kappa.push_back(report.kappa_v);
    tp.minimal_fragments.push_back(std::move(report.minimal_fragment));
  }
  std::vector<Edge> edges;
  for (Vertex x = 0; x < n; ++x)
    for (const auto y : r.successors(x))
      if (tp.minimal_fragments[x].contains(y)) edges.emplace_back(x, y);
  tp.theta = Relation(n, edges);
  for (Vertex x = 0; x < n; ++x) {
    VertexSet psi(n);
    for (const auto y : tp.theta.predecessors(x))
      if (tp.minimal_fragments[x].is_subset_of(tp.minimal_fragments[y])) psi.insert(y);
    tp.psi.push_back(std::move(psi));
  }
  return tp;
}

InclusionCheck mader_lemma_check(const Relation& r, const ThetaPsi& tp) {
  const auto n = static_cast<Vertex>(r.vertex_count());
  InclusionCheck check;
  for (Vertex x = 0; x < n && check.holds; ++x) {
    const auto allowed = boundary(r, tp.minimal_fragments[x]) - VertexSet::from_members(n, r.successors(x));
    for (const auto y : tp.theta.predecessors(x)) {
      if (!tp.psi[x].contains(y) && !allowed.contains(y)) {
        check.holds = false;
        check.counterexample.emplace(x, y);
        break;
      }
    }
  }
  return check;
}

InclusionCheck mader_lemma_check(const Relation& r, const KappaOptions& options) {
  return mader_lemma_check(r, build_theta_psi(r, options));
}

std::optional<Vertex> theta_counting_witness(const ThetaPsi& tp) {
  for (Vertex u = 0; u < tp.theta.vertex_count(); ++u) {
    if (tp.theta.successors(u).size() <= tp.theta.predecessors(u).size()) return u;
  }
  return std::nullopt;
}

MainCheck theorem_main_check(const Relation& r, Vertex v, const VertexSet& set, SetSide side) {
  require_reflexive(r, "theorem_main_check");
  require_vertex(r, v);
  if (set.universe() != r.vertex_count()) throw UsageError("set universe does not match the relation");
  MainCheck result;
  if (side == SetSide::kFinite) {
    if (!is_moser_set(r, v, set)) {
      throw UsageError("F is not a v-Moser set: it must contain v and no other in-neighbour of v");
    }
    result.boundary_size = static_cast<int>(boundary(r, set).size());
    result.bound = static_cast<int>(r.successors(v).size()) - 1;
  } else {
    if (set.contains(v)) throw UsageError("cofinite F must contain v, but v lies in the given complement");
    const auto f = set.complement();
    if (!is_moser_set(r, v, f)) {
      throw UsageError("cofinite F is not a v-Moser set: the complement must hold every in-neighbour of v but v");
    }
    const auto bd = boundary(r, f);
    result.boundary_size = static_cast<int>(bd.size());
    result.bound = static_cast<int>(r.predecessors(v).size()) - 1;
    auto dual = exterior(r, f);
    dual.insert(v);
    const auto dual_boundary = inverse_boundary(r, dual);
    result.reverse_boundary_size = static_cast<int>(dual_boundary.size());
    result.reverse_inclusion_holds = dual_boundary.is_subset_of(bd) && *result.reverse_boundary_size >= result.bound;
  }
  result.margin = result.boundary_size - result.bound;
  result.holds = result.margin >= 0 && result.reverse_inclusion_holds.value_or(true);
  return result;
}

std::vector<SphereStep> sphere_growth(const Relation& r, Vertex v, std::size_t max_j) {
  require_reflexive(r, "sphere_growth");
  require_vertex(r, v);
  const auto n = r.vertex_count();
  const auto in_nbrs = VertexSet::from_members(n, r.predecessors(v));
  const auto degree = r.successors(v).size();
  std::vector<SphereStep> steps;
  auto previous = VertexSet::singleton(n, v);
  for (std::size_t j = 1; j <= max_j; ++j) {
    auto current = image(r, previous);
    SphereStep step;
    step.j = j;
    step.size = current.size();
    step.previous_size = previous.size();
    step.admissible = (previous & in_nbrs) == VertexSet::singleton(n, v);
    step.bound = step.previous_size + degree - 1;
    step.margin = static_cast<long>(step.size) - static_cast<long>(step.bound);
    step.holds = !step.admissible || step.margin >= 0;
    steps.push_back(step);
    if (current == previous) break;
    previous = std::move(current);
  }
  return steps;
}

}  // namespace mskw
