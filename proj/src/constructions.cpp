#include "mskw/constructions.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>

#include "mskw/errors.hpp"
#include "mskw/flow.hpp"

namespace mskw {

namespace {

constexpr std::uint32_t kFree = 0xffffffffU;

class Matcher {
 public:
  Matcher(const std::vector<std::vector<std::uint32_t>>& adjacency, std::size_t right_size)
      : adj_(adjacency), left_match_(adjacency.size(), kFree), right_match_(right_size, kFree) {
    for (std::uint32_t x = 0; x < adj_.size(); ++x) {
      for (const auto w : adj_[x]) {
        if (w >= right_size) throw ValidationError("matching adjacency refers to a missing right vertex");
        if (right_match_[w] == kFree) {
          right_match_[w] = x;
          left_match_[x] = w;
          break;
        }
      }
    }
  }

  // Augmenting search from a free left vertex; on failure the visited
  // vertices form a Hall violator.
  bool augment(std::uint32_t u) {
    left_seen_.assign(adj_.size(), false);
    right_seen_.assign(right_match_.size(), false);
    return visit(u);
  }

  const std::vector<std::uint32_t>& left_match() const { return left_match_; }
  const std::vector<bool>& left_seen() const { return left_seen_; }
  const std::vector<bool>& right_seen() const { return right_seen_; }

 private:
  bool visit(std::uint32_t x) {
    left_seen_[x] = true;
    for (const auto w : adj_[x]) {
      if (right_seen_[w]) continue;
      right_seen_[w] = true;
      if (right_match_[w] == kFree || visit(right_match_[w])) {
        right_match_[w] = x;
        left_match_[x] = w;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<std::uint32_t>>& adj_;
  std::vector<std::uint32_t> left_match_;
  std::vector<std::uint32_t> right_match_;
  std::vector<bool> left_seen_;
  std::vector<bool> right_seen_;
};

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

HallOutcome hall_matching(const std::vector<std::vector<std::uint32_t>>& adjacency) {
  const auto n = adjacency.size();
  Matcher matcher(adjacency, n);
  for (std::uint32_t x = 0; x < n; ++x) {
    if (matcher.left_match()[x] != kFree || matcher.augment(x)) continue;
    HallViolator violator{IndexSet(n), IndexSet(n)};
    for (std::uint32_t y = 0; y < n; ++y) {
      if (matcher.left_seen()[y]) violator.deficient.insert(y);
      if (matcher.right_seen()[y]) violator.neighbourhood.insert(y);
    }
    return violator;
  }
  return PerfectMatching{matcher.left_match()};
}

std::size_t maximum_matching_size(const std::vector<std::vector<std::uint32_t>>& adjacency, std::size_t right_size) {
  Matcher matcher(adjacency, right_size);
  std::size_t size = 0;
  for (std::uint32_t x = 0; x < adjacency.size(); ++x) {
    if (matcher.left_match()[x] != kFree || matcher.augment(x)) ++size;
  }
  return size;
}

SigmaPermutation sigma_permutation(const GroupSubset& a) {
  const auto& g = *a.parent();
  if (a.contains(g.identity())) throw UsageError("sigma_permutation: A must not contain the identity");
  const auto elements = a.elements();
  std::vector<std::vector<std::uint32_t>> adjacency(elements.size());
  for (std::uint32_t i = 0; i < elements.size(); ++i)
    for (std::uint32_t j = 0; j < elements.size(); ++j)
      if (!a.contains(g.multiply(elements[i], elements[j]))) adjacency[i].push_back(j);

  const auto outcome = hall_matching(adjacency);
  if (const auto* violator = std::get_if<HallViolator>(&outcome)) {
    throw ConsistencyError("sigma_permutation: Hall condition fails on a set of size " +
                           std::to_string(violator->deficient.size()));
  }
  const auto& matching = std::get<PerfectMatching>(outcome);
  SigmaPermutation result{a, {}};
  for (std::uint32_t i = 0; i < elements.size(); ++i)
    result.sigma.emplace_back(elements[i], elements[matching.partner[i]]);
  return result;
}

std::string verify_sigma(const SigmaPermutation& s) {
  const auto& g = *s.domain.parent();
  const auto n = g.order();
  if (s.domain.contains(g.identity())) return "domain contains the identity";
  IndexSet seen_from(n);
  IndexSet seen_to(n);
  for (const auto& [x, y] : s.sigma) {
    if (x >= n || y >= n) return "element outside the group";
    if (!s.domain.contains(x) || !s.domain.contains(y)) return "sigma leaves the domain";
    if (seen_from.contains(x)) return "element " + std::to_string(x) + " mapped twice";
    if (seen_to.contains(y)) return "element " + std::to_string(y) + " hit twice";
    seen_from.insert(x);
    seen_to.insert(y);
    if (s.domain.contains(g.multiply(x, y))) {
      return "product of " + std::to_string(x) + " and sigma(x)=" + std::to_string(y) + " lies in A";
    }
  }
  if (seen_from != s.domain.members()) return "sigma is not defined on all of A";
  return {};
}

PathsOutcome disjoint_paths(const Relation& r, const VertexSet& sources, const VertexSet& sinks, std::size_t k,
                            const VertexSet& forbidden) {
  const auto n = static_cast<Vertex>(r.vertex_count());
  if (k == 0) throw UsageError("disjoint_paths needs k >= 1");
  std::vector<SplitNetwork::VertexKind> kinds(n, SplitNetwork::VertexKind::kUnit);
  forbidden.for_each([&](Vertex x) { kinds[x] = SplitNetwork::VertexKind::kForbidden; });
  SplitNetwork split(r, kinds);
  auto& net = split.network();
  const auto source = net.add_node();
  const auto sink = net.add_node();
  (sources - forbidden).for_each([&](Vertex x) { net.add_arc(source, split.in(x), FlowNetwork::kInfinite); });
  (sinks - forbidden).for_each([&](Vertex x) { net.add_arc(split.out(x), sink, FlowNetwork::kInfinite); });

  const auto value = net.max_flow(source, sink, static_cast<std::int64_t>(k));
  if (static_cast<std::size_t>(value) < k) {
    const auto reach = net.residual_reachable(source);
    VertexCut cut{VertexSet(n)};
    for (Vertex x = 0; x < n; ++x)
      if (kinds[x] != SplitNetwork::VertexKind::kForbidden && reach[split.in(x)] && !reach[split.out(x)]) cut.cut.insert(x);
    return cut;
  }

  // Each vertex carries at most one unit, so following flow from a source is unambiguous.
  DisjointPaths result;
  for (const auto a : net.forward_arcs(source)) {
    if (net.flow(a) <= 0) continue;
    Vertex x = net.head(a) / 2;
    std::vector<Vertex> path{x};
    std::vector<bool> used(n, false);
    used[x] = true;
    while (true) {
      std::optional<FlowNetwork::ArcId> next;
      for (const auto b : net.forward_arcs(split.out(x))) {
        if (net.flow(b) > 0 && (net.head(b) == sink || !used[net.head(b) / 2])) {
          next = b;
          break;
        }
      }
      if (!next) throw ConsistencyError("disjoint_paths: flow decomposition stalled");
      if (net.head(*next) == sink) break;
      x = net.head(*next) / 2;
      used[x] = true;
      path.push_back(x);
    }
    result.paths.push_back(std::move(path));
  }
  return result;
}

std::string verify_disjoint_paths(const Relation& r, const VertexSet& sources, const VertexSet& sinks,
                                  const VertexSet& forbidden, const DisjointPaths& paths) {
  VertexSet used(r.vertex_count());
  for (std::size_t i = 0; i < paths.paths.size(); ++i) {
    const auto& p = paths.paths[i];
    const auto tag = "path " + std::to_string(i) + ": ";
    if (p.empty()) return tag + "empty";
    if (!sources.contains(p.front())) return tag + "does not start at a source";
    if (!sinks.contains(p.back())) return tag + "does not end at a sink";
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j] >= r.vertex_count()) return tag + "vertex out of range";
      if (forbidden.contains(p[j])) return tag + "uses a forbidden vertex";
      if (used.contains(p[j])) return tag + "reuses vertex " + std::to_string(p[j]);
      used.insert(p[j]);
      if (j > 0 && !r.has_edge(p[j - 1], p[j])) return tag + "missing edge";
    }
  }
  return {};
}

std::string verify_vertex_cut(const Relation& r, const VertexSet& sources, const VertexSet& sinks,
                              const VertexSet& forbidden, const VertexCut& cut) {
  const auto blocked = forbidden | cut.cut;
  auto seen = sources - blocked;
  std::vector<Vertex> stack = seen.members();
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    if (sinks.contains(x)) return "vertex " + std::to_string(x) + " is a sink reachable around the cut";
    for (const auto y : r.successors(x)) {
      if (!blocked.contains(y) && !seen.contains(y)) {
        seen.insert(y);
        stack.push_back(y);
      }
    }
  }
  return {};
}

CycleSystem mader_cycles(const Relation& r, Vertex hub) {
  if (hub >= r.vertex_count()) throw UsageError("mader_cycles: hub outside the relation");
  if (r.has_loops()) throw UsageError("mader_cycles requires a loopless relation");
  const auto n = r.vertex_count();
  const auto out = VertexSet::from_members(n, r.successors(hub));
  const auto in = VertexSet::from_members(n, r.predecessors(hub));
  CycleSystem system{hub, {}};
  if (out.empty()) return system;
  const auto outcome = disjoint_paths(r, out, in, out.size(), VertexSet::singleton(n, hub));
  if (const auto* cut = std::get_if<VertexCut>(&outcome)) {
    throw ConsistencyError("mader_cycles: only " + std::to_string(cut->cut.size()) + " disjoint return paths for " +
                           std::to_string(out.size()) + " out-neighbours of vertex " + std::to_string(hub));
  }
  for (const auto& path : std::get<DisjointPaths>(outcome).paths) {
    std::vector<Vertex> cycle{hub};
    cycle.insert(cycle.end(), path.begin(), path.end());
    system.cycles.push_back(std::move(cycle));
  }
  return system;
}

std::string verify_cycle_system(const Relation& r, const CycleSystem& system, std::size_t expected) {
  if (system.cycles.size() != expected) {
    return "expected " + std::to_string(expected) + " cycles, found " + std::to_string(system.cycles.size());
  }
  VertexSet used(r.vertex_count());
  for (std::size_t i = 0; i < system.cycles.size(); ++i) {
    const auto& c = system.cycles[i];
    const auto tag = "cycle " + std::to_string(i) + ": ";
    if (c.size() < 2) return tag + "shorter than 2";
    if (c.front() != system.hub) return tag + "does not start at the hub";
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] >= r.vertex_count()) return tag + "vertex out of range";
      const auto next = c[(j + 1) % c.size()];
      if (!r.has_edge(c[j], next)) {
        return tag + "missing edge " + std::to_string(c[j]) + "->" + std::to_string(next);
      }
      if (j == 0) continue;
      if (c[j] == system.hub) return tag + "revisits the hub";
      if (used.contains(c[j])) return tag + "shares vertex " + std::to_string(c[j]) + " with another cycle";
      used.insert(c[j]);
    }
  }
  return {};
}

std::size_t ZeroProductCertificate::bound() const {
  return ceil_div(generators.parent()->order(), std::max<std::size_t>(generators.size(), 1));
}

ZeroProductCertificate shepherdson_sequence(const GroupSubset& s) {
  const auto& g = *s.parent();
  if (s.size() == 0) throw UsageError("shepherdson_sequence needs a nonempty generator set");
  if (s.contains(g.identity())) return {s, {g.identity()}};

  const auto gens = s.elements();
  constexpr Element kUnseen = 0xffffffffU;
  std::vector<Element> parent(g.order(), kUnseen);
  std::vector<Element> via(g.order(), kUnseen);
  std::queue<Element> queue;
  queue.push(g.identity());
  parent[g.identity()] = g.identity();
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop();
    for (const auto gen : gens) {
      const auto y = g.multiply(x, gen);
      if (y == g.identity()) {
        std::vector<Element> sequence{gen};
        for (auto z = x; z != g.identity(); z = parent[z]) sequence.push_back(via[z]);
        std::reverse(sequence.begin(), sequence.end());
        return {s, std::move(sequence)};
      }
      if (parent[y] == kUnseen) {
        parent[y] = x;
        via[y] = gen;
        queue.push(y);
      }
    }
  }
  throw ConsistencyError("shepherdson_sequence: no product returns to the identity");
}

std::string verify_zero_product(const ZeroProductCertificate& c) {
  const auto& g = *c.generators.parent();
  if (c.sequence.empty()) return "empty sequence";
  Element product = g.identity();
  for (const auto x : c.sequence) {
    if (x >= g.order() || !c.generators.contains(x)) return "element " + std::to_string(x) + " is not in S";
    product = g.multiply(product, x);
  }
  if (product != g.identity()) return "product is not the identity";
  if (c.k() > c.bound()) return "length exceeds ceil(|G|/|S|)";
  return {};
}

}  // namespace mskw
