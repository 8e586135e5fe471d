#include "mskw/json_io.hpp"

#include "mskw/errors.hpp"

namespace mskw {

nlohmann::json to_json(const IndexSet& s) { return s.members(); }

std::vector<std::uint32_t> index_list_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ValidationError("expected a JSON array of indices");
  std::vector<std::uint32_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 0xffffffffLL) {
      throw ValidationError("indices must be nonnegative integers");
    }
    out.push_back(v.get<std::uint32_t>());
  }
  return out;
}

IndexSet index_set_from_json(const nlohmann::json& j, std::size_t universe) {
  const auto list = index_list_from_json(j);
  return IndexSet::from_members(universe, list);
}

nlohmann::json to_json(const GroupTable& g) {
  std::vector<Element> inverse(g.order());
  for (Element x = 0; x < g.order(); ++x) inverse[x] = g.inverse(x);
  return {{"spec", to_json(g.spec())},
          {"order", g.order()},
          {"identity", g.identity()},
          {"abelian", g.is_abelian()},
          {"labels", g.labels()},
          {"inverse", inverse},
          {"product", g.table()}};
}

namespace {

nlohmann::json set_list(const std::vector<VertexSet>& sets) {
  auto out = nlohmann::json::array();
  for (const auto& s : sets) out.push_back(to_json(s));
  return out;
}

}  // namespace

nlohmann::json to_json(const WeakFragmentReport& r) {
  return {{"kappa", r.kappa},
          {"variant", to_string(r.variant)},
          {"method", to_string(r.method)},
          {"atoms", set_list(r.atoms)},
          {"fragments_sample", set_list(r.fragments)}};
}

nlohmann::json to_json(const AtomPartition& p) {
  nlohmann::json j = to_json(p.report);
  j["partition_holds"] = p.holds;
  j["atom_of"] = p.atom_of;
  j["uncovered"] = p.uncovered;
  j["overlapping_atoms"] = p.overlapping_atoms
                               ? nlohmann::json{p.overlapping_atoms->first, p.overlapping_atoms->second}
                               : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const MoserReport& r) {
  return {{"vertex", r.vertex},
          {"kappa_v", r.kappa_v},
          {"K_v", to_json(r.minimal_fragment)},
          {"fragments_sample", set_list(r.fragments_sample)},
          {"method", to_string(r.method)}};
}

nlohmann::json to_json(const ThetaPsi& tp) {
  auto theta = nlohmann::json::array();
  for (const auto& [x, y] : tp.theta.edges()) theta.push_back({x, y});
  return {{"kappa", tp.kappa},
          {"K", set_list(tp.minimal_fragments)},
          {"theta_edges", theta},
          {"psi", set_list(tp.psi)}};
}

nlohmann::json to_json(const MainCheck& c) {
  nlohmann::json j = {{"holds", c.holds}, {"boundary_size", c.boundary_size}, {"bound", c.bound}, {"margin", c.margin}};
  if (c.reverse_boundary_size) j["reverse_boundary_size"] = *c.reverse_boundary_size;
  if (c.reverse_inclusion_holds) j["reverse_inclusion_holds"] = *c.reverse_inclusion_holds;
  return j;
}

nlohmann::json to_json(const SphereStep& s) {
  return {{"j", s.j},         {"size", s.size},     {"previous_size", s.previous_size},
          {"admissible", s.admissible}, {"bound", s.bound}, {"margin", s.margin},
          {"holds", s.holds}};
}

nlohmann::json sigma_certificate(const SigmaPermutation& s) {
  auto pairs = nlohmann::json::array();
  for (const auto& [x, y] : s.sigma) pairs.push_back({x, y});
  return {{"kind", "sigma"},
          {"group", to_json(s.domain.parent()->spec())},
          {"set", s.domain.elements()},
          {"sigma", pairs}};
}

nlohmann::json cycles_certificate(const GroupSubset& generators, const CycleSystem& system) {
  return {{"kind", "cycles"},
          {"group", to_json(generators.parent()->spec())},
          {"gens", generators.elements()},
          {"hub", system.hub},
          {"cycles", system.cycles}};
}

nlohmann::json cycles_certificate(const Relation& r, const CycleSystem& system) {
  return {{"kind", "cycles"}, {"graph", to_json(r)}, {"hub", system.hub}, {"cycles", system.cycles}};
}

nlohmann::json zero_product_certificate(const ZeroProductCertificate& c) {
  return {{"kind", "shepherdson"},
          {"group", to_json(c.generators.parent()->spec())},
          {"gens", c.generators.elements()},
          {"sequence", c.sequence},
          {"k", c.k()},
          {"bound", c.bound()}};
}

CertificateCheck check_certificate(const nlohmann::json& cert) {
  CertificateCheck result;
  try {
    if (!cert.is_object() || !cert.contains("kind")) throw ValidationError("certificate needs a \"kind\"");
    result.kind = cert.at("kind").get<std::string>();
    if (result.kind == "sigma") {
      const auto group = build_group(group_spec_from_json(cert.at("group")));
      SigmaPermutation s{GroupSubset(group, index_set_from_json(cert.at("set"), group->order())), {}};
      for (const auto& p : cert.at("sigma")) {
        const auto pair = index_list_from_json(p);
        if (pair.size() != 2) throw ValidationError("sigma entries must be pairs");
        s.sigma.emplace_back(pair[0], pair[1]);
      }
      result.reason = verify_sigma(s);
    } else if (result.kind == "cycles") {
      Relation r;
      std::size_t expected = 0;
      if (cert.contains("graph")) {
        r = relation_from_json(cert.at("graph"));
      } else {
        const auto group = build_group(group_spec_from_json(cert.at("group")));
        const GroupSubset gens(group, index_set_from_json(cert.at("gens"), group->order()));
        if (gens.contains(group->identity())) throw ValidationError("cycle certificates need identity-free generators");
        r = cayley(gens);
      }
      CycleSystem system;
      system.hub = cert.at("hub").get<Vertex>();
      if (system.hub >= r.vertex_count()) throw ValidationError("hub outside the relation");
      expected = r.successors(system.hub).size();
      for (const auto& c : cert.at("cycles")) system.cycles.push_back(index_list_from_json(c));
      result.reason = verify_cycle_system(r, system, expected);
    } else if (result.kind == "shepherdson") {
      const auto group = build_group(group_spec_from_json(cert.at("group")));
      ZeroProductCertificate c{GroupSubset(group, index_set_from_json(cert.at("gens"), group->order())),
                               index_list_from_json(cert.at("sequence"))};
      result.reason = verify_zero_product(c);
      if (result.reason.empty() && cert.contains("k") && cert.at("k").get<std::size_t>() != c.k()) {
        result.reason = "recorded k does not match the sequence length";
      }
    } else {
      throw ValidationError("unknown certificate kind \"" + result.kind + "\"");
    }
  } catch (const nlohmann::json::exception& e) {
    result.reason = std::string("malformed certificate: ") + e.what();
  } catch (const Error& e) {
    result.reason = e.what();
  }
  result.valid = result.reason.empty();
  return result;
}

nlohmann::json to_json(const CertificateCheck& c) {
  return {{"valid", c.valid}, {"kind", c.kind}, {"reason", c.reason}};
}

}  // namespace mskw
