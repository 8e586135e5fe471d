#include "mskw/relation.hpp"

#include <algorithm>
#include <string>

#include "mskw/errors.hpp"

namespace mskw {

namespace {

void sort_unique(std::vector<Vertex>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Relation::Relation(std::size_t vertex_count, std::span<const Edge> edges) {
  if (vertex_count > kMaxVertices) {
    throw CapacityError("relation with " + std::to_string(vertex_count) + " vertices exceeds the limit of " +
                        std::to_string(kMaxVertices));
  }
  successors_.resize(vertex_count);
  predecessors_.resize(vertex_count);
  for (const auto& [x, y] : edges) {
    if (x >= vertex_count || y >= vertex_count) {
      throw ValidationError("edge (" + std::to_string(x) + ", " + std::to_string(y) +
                            ") outside vertex range of size " + std::to_string(vertex_count));
    }
    successors_[x].push_back(y);
    predecessors_[y].push_back(x);
  }
  for (auto& s : successors_) sort_unique(s);
  for (auto& p : predecessors_) sort_unique(p);
  for (Vertex x = 0; x < vertex_count; ++x) {
    edge_count_ += successors_[x].size();
    if (has_edge(x, x)) ++loop_count_;
  }
  reflexive_ = loop_count_ == vertex_count;
}

bool Relation::has_edge(Vertex x, Vertex y) const {
  const auto& s = successors_[x];
  return std::binary_search(s.begin(), s.end(), y);
}

std::vector<Edge> Relation::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex x = 0; x < vertex_count(); ++x)
    for (const auto y : successors_[x]) out.emplace_back(x, y);
  return out;
}

Relation cayley(const GroupSubset& generators) {
  const auto& g = *generators.parent();
  const auto gens = generators.elements();
  std::vector<Edge> edges;
  edges.reserve(g.order() * gens.size());
  for (Element x = 0; x < g.order(); ++x)
    for (const auto s : gens) edges.emplace_back(x, g.multiply(x, s));
  return Relation(g.order(), edges);
}

VertexSet image(const Relation& r, const VertexSet& x) {
  VertexSet out(r.vertex_count());
  x.for_each([&](Vertex u) {
    for (const auto w : r.successors(u)) out.insert(w);
  });
  return out;
}

VertexSet preimage(const Relation& r, const VertexSet& x) {
  VertexSet out(r.vertex_count());
  x.for_each([&](Vertex u) {
    for (const auto w : r.predecessors(u)) out.insert(w);
  });
  return out;
}

VertexSet boundary(const Relation& r, const VertexSet& x) { return image(r, x) - x; }

VertexSet inverse_boundary(const Relation& r, const VertexSet& x) { return preimage(r, x) - x; }

VertexSet exterior(const Relation& r, const VertexSet& x) { return image(r, x).complement(); }

VertexSet iterated_image(const Relation& r, Vertex v, std::size_t j) {
  auto current = VertexSet::singleton(r.vertex_count(), v);
  for (std::size_t step = 0; step < j; ++step) {
    auto next = image(r, current);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

InducedRelation induced(const Relation& r, const VertexSet& x) {
  if (x.empty()) throw UsageError("induced subrelation needs a nonempty vertex set");
  InducedRelation out;
  out.host_vertex = x.members();
  out.local_vertex.assign(r.vertex_count(), InducedRelation::kNotInduced);
  for (std::uint32_t i = 0; i < out.host_vertex.size(); ++i) out.local_vertex[out.host_vertex[i]] = i;
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < out.host_vertex.size(); ++i) {
    for (const auto w : r.successors(out.host_vertex[i])) {
      if (x.contains(w)) edges.emplace_back(i, out.local_vertex[w]);
    }
  }
  out.relation = Relation(out.host_vertex.size(), edges);
  return out;
}

Relation reflexive_closure(const Relation& r) {
  auto edges = r.edges();
  for (Vertex x = 0; x < r.vertex_count(); ++x) edges.emplace_back(x, x);
  return Relation(r.vertex_count(), edges);
}

Relation reverse(const Relation& r) {
  auto edges = r.edges();
  for (auto& [x, y] : edges) std::swap(x, y);
  return Relation(r.vertex_count(), edges);
}

std::vector<std::uint64_t> successor_masks(const Relation& r) {
  if (r.vertex_count() > 64) throw CapacityError("bitmask kernels support at most 64 vertices");
  std::vector<std::uint64_t> masks(r.vertex_count(), 0);
  for (Vertex x = 0; x < r.vertex_count(); ++x)
    for (const auto y : r.successors(x)) masks[x] |= std::uint64_t{1} << y;
  return masks;
}

std::vector<std::uint64_t> predecessor_masks(const Relation& r) {
  if (r.vertex_count() > 64) throw CapacityError("bitmask kernels support at most 64 vertices");
  std::vector<std::uint64_t> masks(r.vertex_count(), 0);
  for (Vertex x = 0; x < r.vertex_count(); ++x)
    for (const auto y : r.predecessors(x)) masks[x] |= std::uint64_t{1} << y;
  return masks;
}

Relation relation_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 0) {
    throw ValidationError("graph JSON needs a nonnegative integer \"n\"");
  }
  const auto n = j["n"].get<long long>();
  if (n > static_cast<long long>(Relation::kMaxVertices)) {
    throw CapacityError("graph with " + std::to_string(n) + " vertices exceeds the limit of " +
                        std::to_string(Relation::kMaxVertices));
  }
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ValidationError("graph \"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
          e[0].get<long long>() < 0 || e[1].get<long long>() < 0) {
        throw ValidationError("graph edges must be pairs of nonnegative integers");
      }
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
  }
  Relation r(static_cast<std::size_t>(n), edges);
  if (j.value("reflexive_closure", false)) r = reflexive_closure(r);
  return r;
}

nlohmann::json to_json(const Relation& r) {
  auto edges = nlohmann::json::array();
  for (const auto& [x, y] : r.edges()) edges.push_back({x, y});
  return {{"n", r.vertex_count()}, {"edges", edges}, {"reflexive_closure", false}};
}

}  // namespace mskw
