#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mskw/constructions.hpp"
#include "mskw/errors.hpp"
#include "mskw/harness.hpp"
#include "mskw/isoperimetry.hpp"
#include "mskw/json_io.hpp"
#include "mskw/moser.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json from_python(const py::object& o) {
  return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

mskw::GroupPtr group_of(const py::object& spec) { return mskw::build_group(mskw::group_spec_from_json(from_python(spec))); }

mskw::GroupSubset subset_of(const mskw::GroupPtr& g, const std::vector<std::uint32_t>& xs) {
  return mskw::GroupSubset(g, mskw::IndexSet::from_members(g->order(), xs));
}

mskw::Relation relation_of(const py::object& graph) { return mskw::relation_from_json(from_python(graph)); }

mskw::VertexSet set_of(const mskw::Relation& r, const std::vector<std::uint32_t>& xs) {
  return mskw::VertexSet::from_members(r.vertex_count(), xs);
}

}  // namespace

PYBIND11_MODULE(mskw, m) {
  m.doc() = "Boundary operators, Moser fragments and certificates on finite groups and relations";

  py::register_exception<mskw::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<mskw::UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<mskw::CapacityError>(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception<mskw::ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  // Groups and relations travel as the same JSON-shaped dicts the CLI accepts.
  m.def("build_group", [](const py::object& spec) { return to_python(mskw::to_json(*group_of(spec))); },
        py::arg("spec"));

  m.def("cayley",
        [](const py::object& spec, const std::vector<std::uint32_t>& gens) {
          return to_python(mskw::to_json(mskw::cayley(subset_of(group_of(spec), gens))));
        },
        py::arg("group"), py::arg("gens"));

  m.def("image",
        [](const py::object& graph, const std::vector<std::uint32_t>& x) {
          const auto r = relation_of(graph);
          return mskw::image(r, set_of(r, x)).members();
        },
        py::arg("graph"), py::arg("set"));
  m.def("boundary",
        [](const py::object& graph, const std::vector<std::uint32_t>& x) {
          const auto r = relation_of(graph);
          return mskw::boundary(r, set_of(r, x)).members();
        },
        py::arg("graph"), py::arg("set"));
  m.def("exterior",
        [](const py::object& graph, const std::vector<std::uint32_t>& x) {
          const auto r = relation_of(graph);
          return mskw::exterior(r, set_of(r, x)).members();
        },
        py::arg("graph"), py::arg("set"));
  m.def("iterated_image",
        [](const py::object& graph, std::uint32_t v, std::size_t j) {
          return mskw::iterated_image(relation_of(graph), v, j).members();
        },
        py::arg("graph"), py::arg("vertex"), py::arg("j"));

  m.def("kappa_v",
        [](const py::object& graph, std::uint32_t v, const std::string& method) {
          return to_python(mskw::to_json(mskw::kappa_v(relation_of(graph), v, mskw::kappa_method_from_string(method))));
        },
        py::arg("graph"), py::arg("vertex") = 0, py::arg("method") = "enumeration");

  m.def("weak_connectivity",
        [](const py::object& graph, const std::string& variant) {
          return to_python(mskw::to_json(mskw::weak_connectivity(relation_of(graph), mskw::weak_variant_from_string(variant))));
        },
        py::arg("graph"), py::arg("variant") = "proper-subset");

  m.def("sigma_permutation",
        [](const py::object& spec, const std::vector<std::uint32_t>& a) {
          return to_python(mskw::sigma_certificate(mskw::sigma_permutation(subset_of(group_of(spec), a))));
        },
        py::arg("group"), py::arg("set"));

  m.def("mader_cycles",
        [](const py::object& spec, const std::vector<std::uint32_t>& gens) {
          const auto s = subset_of(group_of(spec), gens);
          return to_python(mskw::cycles_certificate(s, mskw::mader_cycles(mskw::cayley(s), 0)));
        },
        py::arg("group"), py::arg("gens"));

  m.def("shepherdson_sequence",
        [](const py::object& spec, const std::vector<std::uint32_t>& gens) {
          return to_python(mskw::zero_product_certificate(mskw::shepherdson_sequence(subset_of(group_of(spec), gens))));
        },
        py::arg("group"), py::arg("gens"));

  m.def("check_certificate",
        [](const py::object& cert) { return to_python(mskw::to_json(mskw::check_certificate(from_python(cert)))); },
        py::arg("certificate"));

  m.def("run_campaign",
        [](const py::object& spec) {
          const auto parsed = mskw::campaign_spec_from_json(from_python(spec));
          mskw::CampaignReport report;
          {
            py::gil_scoped_release release;
            report = mskw::run_campaign(parsed);
          }
          return to_python(mskw::to_json(report));
        },
        py::arg("spec"));
}
