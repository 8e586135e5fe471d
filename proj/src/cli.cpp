#include "mskw/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mskw/constructions.hpp"
#include "mskw/errors.hpp"
#include "mskw/harness.hpp"
#include "mskw/isoperimetry.hpp"
#include "mskw/json_io.hpp"
#include "mskw/moser.hpp"

namespace mskw {

namespace {

using nlohmann::json;

// Inline JSON when the argument looks like JSON, otherwise a file path.
json load_json(const std::string& arg, const std::string& what) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot read " + what + " file \"" + arg + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed " + what + " JSON: " + e.what());
  }
}

struct Options {
  std::string group, gens, graph, set, spec, certificate;
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> cap;
  std::size_t jobs = 1;
  Vertex vertex = 0;
  std::string variant = "proper-subset";
  std::string method = "enumeration";
  std::size_t max_j = 64;
  std::size_t limit = 256;
  bool cofinite = false;
};

// Parsed inputs, all validated before any computation starts.
struct Inputs {
  GroupPtr group;
  std::optional<json> gens;
  std::optional<Relation> graph;
  std::optional<json> set;
};

enum class Generators { kAsGiven, kAddIdentity, kIdentityFree };

Inputs load_inputs(const Options& o) {
  Inputs in;
  if (!o.group.empty()) in.group = build_group(group_spec_from_json(load_json(o.group, "group")));
  if (!o.gens.empty()) in.gens = load_json(o.gens, "generator list");
  if (!o.graph.empty()) in.graph = relation_from_json(load_json(o.graph, "graph"));
  if (!o.set.empty()) in.set = load_json(o.set, "set");
  return in;
}

GroupSubset generators(const Inputs& in, Generators mode) {
  if (!in.group) throw UsageError("--group is required");
  if (!in.gens) throw UsageError("--gens is required");
  auto s = index_set_from_json(*in.gens, in.group->order());
  const auto id = in.group->identity();
  if (mode == Generators::kAddIdentity) s.insert(id);
  if (mode == Generators::kIdentityFree && s.contains(id)) {
    throw UsageError("generator set must not contain the identity for this subcommand");
  }
  return GroupSubset(in.group, s);
}

// Relation from --graph, or the Cayley relation of --group/--gens.
Relation relation(const Inputs& in, Generators mode) {
  if (in.graph) {
    if (in.group || in.gens) throw UsageError("give either --graph or --group/--gens, not both");
    return *in.graph;
  }
  return cayley(generators(in, mode));
}

Vertex checked_vertex(const Relation& r, Vertex v) {
  if (v >= r.vertex_count()) throw ValidationError("--vertex " + std::to_string(v) + " is out of range");
  return v;
}

VertexSet required_set(const Inputs& in, std::size_t n) {
  if (!in.set) throw UsageError("--set is required");
  return index_set_from_json(*in.set, n);
}

void render_text(const json& j, std::ostream& out, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        render_text(value, out, prefix + key + ".");
      } else {
        out << prefix << key << ": " << value.dump() << '\n';
      }
    }
  } else {
    out << prefix << j.dump() << '\n';
  }
}

void emit(const json& j, const Options& o, std::ostream& out) {
  if (o.format == "text") {
    render_text(j, out);
  } else {
    out << j.dump(2) << '\n';
  }
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.spec.empty()) throw UsageError("verify needs --spec");
  auto spec = campaign_spec_from_json(load_json(o.spec, "campaign spec"));
  if (o.seed) {
    spec.random.seed = *o.seed;
    spec.subset_policy.seed = *o.seed;
  }
  if (o.cap) spec.caps.enumeration_cap = *o.cap;
  spec.jobs = o.jobs;
  err << "estimated work: " << estimate_work(spec) << " subset evaluations\n";
  const auto report = run_campaign(spec);
  err << "wall time: " << report.wall_time_ms << " ms\n";
  emit(to_json(report), o, out);
  return report.all_passed() ? 0 : 2;
}

int dispatch(const std::string& command, const Options& o, std::ostream& out, std::ostream& err) {
  if (command == "verify") return run_verify(o, out, err);

  const auto in = load_inputs(o);
  KappaOptions kappa_options;
  WeakConnectivityOptions weak_options;
  if (o.cap) kappa_options.enumeration_cap = weak_options.enumeration_cap = *o.cap;

  if (command == "group") {
    if (!in.group) throw UsageError("--group is required");
    emit(to_json(*in.group), o, out);
  } else if (command == "cayley") {
    emit(to_json(relation(in, Generators::kAsGiven)), o, out);
  } else if (command == "boundary") {
    const auto r = relation(in, Generators::kAsGiven);
    const auto x = required_set(in, r.vertex_count());
    const auto ext = exterior(r, x);
    emit({{"set", to_json(x)},
          {"image", to_json(image(r, x))},
          {"boundary", to_json(boundary(r, x))},
          {"exterior", to_json(ext)},
          {"inverse_boundary_of_exterior", to_json(inverse_boundary(r, ext))}},
         o, out);
  } else if (command == "spheres") {
    const auto r = relation(in, Generators::kAddIdentity);
    const auto v = checked_vertex(r, o.vertex);
    json steps = json::array();
    bool holds = true;
    for (const auto& s : sphere_growth(r, v, o.max_j)) {
      steps.push_back(to_json(s));
      holds = holds && s.holds;
    }
    emit({{"vertex", v}, {"steps", steps}, {"holds", holds}}, o, out);
    return holds ? 0 : 2;
  } else if (command == "atoms") {
    const auto r = relation(in, Generators::kAddIdentity);
    emit(to_json(atoms_partition_check(r, weak_variant_from_string(o.variant), weak_options)), o, out);
  } else if (command == "kappa-v") {
    const auto r = relation(in, Generators::kAddIdentity);
    emit(to_json(kappa_v(r, checked_vertex(r, o.vertex), kappa_method_from_string(o.method), kappa_options)), o,
         out);
  } else if (command == "fragment") {
    const auto r = relation(in, Generators::kAddIdentity);
    const auto v = checked_vertex(r, o.vertex);
    const auto report = kappa_v(r, v, KappaMethod::kEnumeration, kappa_options);
    const auto fragments = all_v_fragments(r, v, o.limit, kappa_options);
    json list = json::array();
    for (const auto& f : fragments) list.push_back(to_json(f));
    emit({{"vertex", v},
          {"kappa_v", report.kappa_v},
          {"K_v", to_json(report.minimal_fragment)},
          {"fragments", list},
          {"truncated", fragments.size() >= o.limit}},
         o, out);
  } else if (command == "theta-psi") {
    const auto r = relation(in, Generators::kAddIdentity);
    const auto tp = build_theta_psi(r, kappa_options);
    const auto inclusion = mader_lemma_check(r, tp);
    auto j = to_json(tp);
    j["inclusion_holds"] = inclusion.holds;
    j["inclusion_counterexample"] =
        inclusion.counterexample ? json{inclusion.counterexample->first, inclusion.counterexample->second} : json();
    const auto witness = theta_counting_witness(tp);
    j["counting_witness"] = witness ? json(*witness) : json();
    emit(j, o, out);
    return inclusion.holds && witness ? 0 : 2;
  } else if (command == "mskw-check") {
    const auto r = relation(in, Generators::kAddIdentity);
    const auto v = checked_vertex(r, o.vertex);
    const auto x = required_set(in, r.vertex_count());
    const auto check = theorem_main_check(r, v, x, o.cofinite ? SetSide::kCofinite : SetSide::kFinite);
    emit(to_json(check), o, out);
    return check.holds ? 0 : 2;
  } else if (command == "sigma") {
    if (!in.group) throw UsageError("--group is required");
    const auto a = GroupSubset(in.group, required_set(in, in.group->order()));
    emit(sigma_certificate(sigma_permutation(a)), o, out);
  } else if (command == "cycles") {
    if (in.graph) {
      const auto r = relation(in, Generators::kIdentityFree);
      emit(cycles_certificate(r, mader_cycles(r, checked_vertex(r, o.vertex))), o, out);
    } else {
      const auto s = generators(in, Generators::kIdentityFree);
      const auto r = cayley(s);
      emit(cycles_certificate(s, mader_cycles(r, checked_vertex(r, o.vertex))), o, out);
    }
  } else if (command == "shepherdson") {
    emit(zero_product_certificate(shepherdson_sequence(generators(in, Generators::kIdentityFree))), o, out);
  } else {
    throw UsageError("unknown subcommand \"" + command + "\"");
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact isoperimetric and connectivity computations on finite groups and relations", "mskw"};
  app.require_subcommand(0, 1);
  Options o;

  app.add_option("--check-certificate", o.certificate, "Re-verify a certificate (inline JSON or file)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto common = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "Group spec (inline JSON or file)");
    sub->add_option("--gens", o.gens, "Generator list");
    sub->add_option("--graph", o.graph, "Graph JSON");
    sub->add_option("--vertex", o.vertex, "Base vertex");
    sub->add_option("--set", o.set, "Vertex or element set");
    sub->add_option("--cap", o.cap, "Enumeration cap (vertices)");
    sub->add_option("--seed", o.seed, "Seed override");
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--check-certificate", o.certificate, "Re-verify a certificate instead of computing");
  };

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"group", "Print a group's multiplication table"},
      {"cayley", "Print the Cayley relation of --gens"},
      {"boundary", "Image, boundary and exterior of --set"},
      {"spheres", "Sphere growth from --vertex"},
      {"atoms", "Weak connectivity and atoms"},
      {"kappa-v", "kappa_v and the minimal fragment K_v"},
      {"fragment", "Every v-fragment of --vertex"},
      {"theta-psi", "The Theta/Psi construction and its inclusion check"},
      {"mskw-check", "Boundary bound for one set"},
      {"sigma", "Permutation certificate for --set A"},
      {"cycles", "Cycle system through --vertex"},
      {"shepherdson", "Short product of generators equal to the identity"},
      {"verify", "Run a campaign spec"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    common(sub);
    if (name == "atoms") {
      sub->add_option("--variant", o.variant, "Weak-connectivity variant")
          ->check(CLI::IsMember({"paper-definition", "proper-subset"}));
    }
    if (name == "kappa-v") {
      sub->add_option("--method", o.method, "Search engine")->check(CLI::IsMember({"enumeration", "flow", "both-agree"}));
    }
    if (name == "spheres") sub->add_option("--max-j", o.max_j, "Largest radius");
    if (name == "fragment") sub->add_option("--limit", o.limit, "Most fragments listed");
    if (name == "mskw-check") sub->add_flag("--cofinite", o.cofinite, "--set holds the complement of F");
    if (name == "verify") sub->add_option("--spec", o.spec, "Campaign spec file or inline JSON");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "mskw: " << e.what() << '\n';
    return 1;
  }

  try {
    if (!o.certificate.empty()) {
      const auto check = check_certificate(load_json(o.certificate, "certificate"));
      emit(to_json(check), o, out);
      return check.valid ? 0 : 2;
    }
    const auto chosen = app.get_subcommands();
    if (chosen.empty()) {
      err << app.help();
      return 1;
    }
    return dispatch(chosen.front()->get_name(), o, out, err);
  } catch (const ConsistencyError& e) {
    err << "mskw: internal consistency failure: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "mskw: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "mskw: bad JSON input: " << e.what() << '\n';
    return 1;
  } catch (const std::bad_alloc&) {
    err << "mskw: out of memory\n";
    return 1;
  }
}

}  // namespace mskw
