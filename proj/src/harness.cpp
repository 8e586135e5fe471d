#include "mskw/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <thread>

#include "mskw/constructions.hpp"
#include "mskw/errors.hpp"
#include "mskw/isoperimetry.hpp"
#include "mskw/json_io.hpp"
#include "mskw/moser.hpp"
#include "subset_search.hpp"

namespace mskw {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Per-fixture accumulation, merged in fixture order.

class Recorder {
 public:
  explicit Recorder(const std::vector<std::string>& enabled) : enabled_(enabled.begin(), enabled.end()) {}

  bool enabled(const std::string& check) const { return enabled_.count(check) != 0; }

  void pass(const std::string& check, bool tight = false) {
    auto& t = tallies_[check];
    ++t.passed;
    if (tight) ++t.tight;
  }
  void not_applicable(const std::string& check) { ++tallies_[check].not_applicable; }

  // `still_fails` re-evaluates the module predicate; it returns true when the
  // violation is confirmed.
  void fail(const std::string& check, json fixture, json detail, const std::function<bool()>& still_fails) {
    ++tallies_[check].failed;
    if (counterexample_) return;
    bool confirmed = false;
    try {
      confirmed = still_fails();
    } catch (const std::exception&) {
      confirmed = true;
    }
    counterexample_ = Counterexample{check, std::move(fixture), std::move(detail), confirmed};
  }

  void record(const std::string& check, bool ok, bool tight, const json& fixture, const json& detail,
              const std::function<bool()>& still_fails) {
    if (ok) {
      pass(check, tight);
    } else {
      fail(check, fixture, detail, still_fails);
    }
  }

  void tight_instance(json instance) { tight_.push_back(std::move(instance)); }

  std::map<std::string, CheckTally> tallies_;
  std::optional<Counterexample> counterexample_;
  std::vector<json> tight_;
  std::optional<GroupSummary> group_;

 private:
  std::set<std::string> enabled_;
};

std::vector<Recorder> run_parallel(std::size_t jobs, std::size_t count, const std::vector<std::string>& checks,
                                   const std::function<void(std::size_t, Recorder&)>& work) {
  std::vector<Recorder> results(count, Recorder(checks));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        work(i, results[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const auto threads = std::max<std::size_t>(1, std::min(jobs, count));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return results;
}

void merge_into(CampaignReport& report, std::vector<Recorder>& parts) {
  for (auto& part : parts) {
    for (const auto& [name, t] : part.tallies_) {
      auto& dst = report.checks[name];
      dst.passed += t.passed;
      dst.failed += t.failed;
      dst.tight += t.tight;
      dst.not_applicable += t.not_applicable;
    }
    if (!report.counterexample && part.counterexample_) report.counterexample = part.counterexample_;
    for (auto& t : part.tight_) report.tight_instances.push_back(std::move(t));
    if (part.group_) {
      auto it = std::find_if(report.groups.begin(), report.groups.end(),
                             [&](const GroupSummary& g) { return g.name == part.group_->name; });
      if (it == report.groups.end()) {
        report.groups.push_back(*part.group_);
      } else {
        it->evaluated += part.group_->evaluated;
        it->tight += part.group_->tight;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Helpers

constexpr std::uint64_t kIdentityBit = 1;

std::vector<std::string> checks_for(CampaignKind kind) {
  std::vector<std::string> out;
  for (const auto& [name, info] : check_registry())
    if (info.campaign == kind) out.push_back(name);
  return out;
}

std::vector<std::string> enabled_checks(const CampaignSpec& spec) {
  return spec.checks.empty() ? checks_for(spec.kind) : spec.checks;
}

void require_mask_order(const GroupTable& g) {
  if (g.order() > 64) throw CapacityError("campaigns support groups of order at most 64");
}

std::vector<Element> mask_elements(std::uint64_t mask) {
  std::vector<Element> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(static_cast<Element>(std::countr_zero(mask)));
  return out;
}

GroupSubset subset_of(const GroupPtr& g, std::uint64_t mask) {
  return GroupSubset(g, IndexSet::from_mask(g->order(), mask));
}

json group_fixture(const GroupTable& g, std::uint64_t gens) {
  return {{"group", to_json(g.spec())}, {"gens", mask_elements(gens)}};
}

std::uint64_t inverse_mask(const GroupTable& g, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (const auto x : mask_elements(mask)) out |= std::uint64_t{1} << g.inverse(x);
  return out;
}

std::uint64_t left_translate(const GroupTable& g, Element by, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (const auto x : mask_elements(mask)) out |= std::uint64_t{1} << g.multiply(by, x);
  return out;
}

SubsetPolicy resolve_policy(const SubsetPolicy& policy, std::size_t n) {
  if (policy.kind != SubsetPolicy::Kind::kDefault) return policy;
  SubsetPolicy out = policy;
  out.kind = n <= 8 ? SubsetPolicy::Kind::kAllSubsets : SubsetPolicy::Kind::kUptoSize;
  out.max_size = 4;
  return out;
}

double choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return c;
}

double count_subsets(std::size_t n, const SubsetPolicy& raw, std::size_t forced_in, std::size_t forced_out) {
  const auto policy = resolve_policy(raw, n);
  const std::size_t free = n - forced_in - forced_out;
  switch (policy.kind) {
    case SubsetPolicy::Kind::kAllSubsets: return std::pow(2.0, static_cast<double>(free));
    case SubsetPolicy::Kind::kUptoSize: {
      double total = 0;
      for (std::size_t k = 0; k + forced_in <= policy.max_size && k <= free; ++k) total += choose(free, k);
      return total;
    }
    case SubsetPolicy::Kind::kRandomSample: return static_cast<double>(policy.samples);
    case SubsetPolicy::Kind::kDefault: break;
  }
  return 0;
}

std::string describe_sets(std::uint64_t a, std::uint64_t b) {
  json j = {mask_elements(a), mask_elements(b)};
  return j.dump();
}

// Boundary size by bitmask.
int boundary_size(const std::vector<std::uint64_t>& succ, std::uint64_t x) {
  return std::popcount(detail::image_mask(succ, x) & ~x);
}

// ---------------------------------------------------------------------------
// Structure checks shared by Cayley and random fixtures.

void structure_checks(const Relation& r, const json& fixture, const CampaignSpec& spec, std::uint64_t seed,
                      Recorder& rec) {
  const auto n = r.vertex_count();
  const auto succ = successor_masks(r);
  const std::uint64_t all = detail::low_bits(n);
  std::mt19937_64 rng(seed);

  if (rec.enabled("submodularity")) {
    std::vector<int> table;
    const bool exhaustive = n <= spec.caps.exhaustive_pair_order;
    auto bsize = [&](std::uint64_t x) { return exhaustive ? table[x] : boundary_size(succ, x); };
    if (exhaustive) {
      table.resize(std::size_t{1} << n);
      for (std::uint64_t x = 0; x <= all; ++x) table[x] = boundary_size(succ, x);
    }
    CheckTally local;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> bad;
    auto test = [&](std::uint64_t x, std::uint64_t y) {
      const int lhs = bsize(x | y) + bsize(x & y);
      const int rhs = bsize(x) + bsize(y);
      if (lhs > rhs) {
        ++local.failed;
        if (!bad) bad.emplace(x, y);
      } else {
        ++local.passed;
        if (lhs == rhs) ++local.tight;
      }
    };
    if (exhaustive) {
      for (std::uint64_t x = 0; x <= all; ++x)
        for (std::uint64_t y = x; y <= all; ++y) test(x, y);
    } else {
      for (std::size_t i = 0; i < spec.caps.sampled_pairs; ++i) test(rng() & all, rng() & all);
    }
    auto& t = rec.tallies_["submodularity"];
    t.passed += local.passed;
    t.tight += local.tight;
    if (bad) {
      const auto [x, y] = *bad;
      rec.tallies_["submodularity"].failed += local.failed - 1;
      rec.fail("submodularity", fixture, {{"X", mask_elements(x)}, {"Y", mask_elements(y)}}, [&, x = x, y = y] {
        const auto X = VertexSet::from_mask(n, x);
        const auto Y = VertexSet::from_mask(n, y);
        return boundary(r, X | Y).size() + boundary(r, X & Y).size() > boundary(r, X).size() + boundary(r, Y).size();
      });
    }
  }

  if (rec.enabled("duality") || rec.enabled("partition")) {
    std::vector<std::uint64_t> sets;
    if (n <= spec.caps.exhaustive_pair_order) {
      for (std::uint64_t x = 0; x <= all; ++x) sets.push_back(x);
    } else {
      for (std::size_t i = 0; i < 256; ++i) sets.push_back(rng() & all);
    }
    for (const auto m : sets) {
      const auto x = VertexSet::from_mask(n, m);
      const auto bd = boundary(r, x);
      const auto ext = exterior(r, x);
      if (rec.enabled("duality")) {
        const bool ok = inverse_boundary(r, ext).is_subset_of(bd);
        rec.record("duality", ok, false, fixture, {{"F", x.members()}}, [&] {
          return !inverse_boundary(r, exterior(r, x)).is_subset_of(boundary(r, x));
        });
      }
      if (rec.enabled("partition")) {
        const bool disjoint = !x.intersects(bd) && !x.intersects(ext) && !bd.intersects(ext);
        const bool ok = disjoint && (x | bd | ext) == VertexSet::full(n);
        rec.record("partition", ok, false, fixture, {{"X", x.members()}}, [&] {
          const auto b = image(r, x) - x;
          const auto e = image(r, x).complement();
          return x.intersects(b) || x.intersects(e) || b.intersects(e) || (x | b | e).size() != n;
        });
      }
    }
  }

  if (rec.enabled("moser-lattice")) {
    const auto pred = predecessor_masks(r);
    const KappaOptions options{spec.caps.enumeration_cap};
    for (Vertex v = 0; v < n; ++v) {
      const auto fragments = all_v_fragments(r, v, spec.caps.lattice_fragment_limit, options);
      std::vector<std::uint64_t> masks;
      for (const auto& f : fragments) masks.push_back(f.to_mask());
      const int kappa = boundary_size(succ, masks.front());
      const std::uint64_t v_bit = std::uint64_t{1} << v;
      auto is_fragment = [&](std::uint64_t x) {
        return (x & v_bit) != 0 && (x & pred[v]) == v_bit && boundary_size(succ, x) == kappa;
      };
      std::optional<std::pair<std::uint64_t, std::uint64_t>> bad;
      std::size_t passed = 0;
      for (std::size_t i = 0; i < masks.size(); ++i) {
        for (std::size_t j = i; j < masks.size(); ++j) {
          if (is_fragment(masks[i] & masks[j]) && is_fragment(masks[i] | masks[j])) {
            ++passed;
          } else if (!bad) {
            bad.emplace(masks[i], masks[j]);
          }
        }
      }
      // Minimality: K_v is the intersection of every v-fragment.
      const auto report = kappa_v(r, v, KappaMethod::kEnumeration, options);
      if (fragments.size() < spec.caps.lattice_fragment_limit) {
        std::uint64_t meet = all;
        for (const auto m : masks) meet &= m;
        if (meet != report.minimal_fragment.to_mask() && !bad) bad.emplace(meet, report.minimal_fragment.to_mask());
      }
      rec.tallies_["moser-lattice"].passed += passed;
      if (bad) {
        rec.fail("moser-lattice", fixture,
                 {{"vertex", v}, {"pair", json::parse(describe_sets(bad->first, bad->second))}}, [&, v, b = *bad] {
                   const auto a = VertexSet::from_mask(n, b.first);
                   const auto c = VertexSet::from_mask(n, b.second);
                   const auto k = kappa_v(r, v, KappaMethod::kEnumeration, options).kappa_v;
                   auto ok = [&](const VertexSet& s) {
                     return is_moser_set(r, v, s) && static_cast<int>(boundary(r, s).size()) == k;
                   };
                   return !(ok(a & c) && ok(a | c));
                 });
      }
    }
  }

  if (rec.enabled("weak-fragment-lattice")) {
    for (const auto variant : {WeakVariant::kPaperDefinition, WeakVariant::kProperSubset}) {
      const auto fragments = all_weak_fragments(r, variant, spec.caps.lattice_fragment_limit, spec.caps.enumeration_cap);
      std::vector<std::uint64_t> masks;
      for (const auto& f : fragments) masks.push_back(f.to_mask());
      const int kappa = boundary_size(succ, masks.front());
      auto in_range = [&](std::uint64_t x) {
        return x != 0 && (variant == WeakVariant::kPaperDefinition || x != all || n == 1);
      };
      for (std::size_t i = 0; i < masks.size(); ++i) {
        for (std::size_t j = i + 1; j < masks.size(); ++j) {
          const auto meet = masks[i] & masks[j];
          const auto join = masks[i] | masks[j];
          if (meet == 0 || !in_range(join)) {
            rec.not_applicable("weak-fragment-lattice");
            continue;
          }
          const bool ok = boundary_size(succ, meet) == kappa && boundary_size(succ, join) == kappa;
          rec.record("weak-fragment-lattice", ok, false, fixture,
                     {{"variant", to_string(variant)}, {"pair", json::parse(describe_sets(masks[i], masks[j]))}},
                     [&, meet, join] {
                       return static_cast<int>(boundary(r, VertexSet::from_mask(n, meet)).size()) != kappa ||
                              static_cast<int>(boundary(r, VertexSet::from_mask(n, join)).size()) != kappa;
                     });
        }
      }
    }
  }
}

void atom_checks(const GroupTable& g, const Relation& r, const json& fixture, const CampaignSpec& spec, Recorder& rec) {
  const auto n = r.vertex_count();
  const WeakConnectivityOptions options{spec.caps.enumeration_cap, false};
  const std::uint64_t all = detail::low_bits(n);
  for (const auto variant : {WeakVariant::kPaperDefinition, WeakVariant::kProperSubset}) {
    const auto partition = atoms_partition_check(r, variant, options);
    std::vector<std::uint64_t> atoms;
    for (const auto& a : partition.report.atoms) atoms.push_back(a.to_mask());

    if (rec.enabled("atom-partition")) {
      bool ok = partition.uncovered.empty();
      if (variant == WeakVariant::kPaperDefinition) {
        ok = ok && partition.holds;
      } else {
        // Two atoms may only overlap when together they exhaust V.
        for (std::size_t i = 0; i < atoms.size() && ok; ++i)
          for (std::size_t j = i + 1; j < atoms.size() && ok; ++j)
            ok = (atoms[i] & atoms[j]) == 0 || (atoms[i] | atoms[j]) == all;
      }
      rec.record("atom-partition", ok, false, fixture, {{"variant", to_string(variant)}, {"report", to_json(partition)}},
                 [&, variant] {
                   const auto again = atoms_partition_check(r, variant, options);
                   return variant == WeakVariant::kPaperDefinition ? !again.holds : !again.uncovered.empty();
                 });
    }
    if (rec.enabled("atom-translation")) {
      const std::set<std::uint64_t> atom_set(atoms.begin(), atoms.end());
      bool ok = true;
      for (Element x = 0; x < g.order() && ok; ++x)
        for (const auto a : atoms) ok = ok && atom_set.count(left_translate(g, x, a)) != 0;
      rec.record("atom-translation", ok, false, fixture, {{"variant", to_string(variant)}}, [] { return true; });
    }
  }
}

// ---------------------------------------------------------------------------
// Theorem checks

void theorem_checks_cayley(const GroupTable& g, std::uint64_t gens, const Relation& r, const json& fixture,
                           const CampaignSpec& spec, Recorder& rec) {
  const auto n = r.vertex_count();
  const KappaOptions options{spec.caps.enumeration_cap};
  const bool enumerable = n <= std::min<std::size_t>(spec.caps.enumeration_cap, 64);
  const int degree = std::popcount(gens);

  if (rec.enabled("flow-agreement")) {
    for (Vertex v = 0; v < n && enumerable; ++v) {
      bool ok = true;
      std::string why;
      try {
        kappa_v(r, v, KappaMethod::kBothAgree, options);
      } catch (const ConsistencyError& e) {
        ok = false;
        why = e.what();
      }
      rec.record("flow-agreement", ok, false, fixture, {{"vertex", v}, {"error", why}}, [&, v] {
        const auto a = kappa_v(r, v, KappaMethod::kEnumeration, options);
        const auto b = kappa_v(r, v, KappaMethod::kFlow, options);
        return a.kappa_v != b.kappa_v || a.minimal_fragment != b.minimal_fragment;
      });
    }
  }
  if (rec.enabled("theorem-main")) {
    const auto method = enumerable ? KappaMethod::kEnumeration : KappaMethod::kFlow;
    const auto report = kappa_v(r, 0, method, options);
    const bool ok = report.kappa_v == degree - 1 && report.minimal_fragment == VertexSet::singleton(n, 0);
    rec.record("theorem-main", ok, false, fixture, to_json(report), [&, method] {
      const auto again = kappa_v(r, 0, method, options);
      return again.kappa_v != degree - 1 || again.minimal_fragment != VertexSet::singleton(n, 0);
    });
  }
  if (rec.enabled("mader-lemma") || rec.enabled("theta-psi-counting") || rec.enabled("translation-equivariance")) {
    const auto tp = build_theta_psi(r, options);
    if (rec.enabled("mader-lemma")) {
      const auto check = mader_lemma_check(r, tp);
      rec.record("mader-lemma", check.holds, false, fixture,
                 check.counterexample ? json{check.counterexample->first, check.counterexample->second} : json(nullptr),
                 [&] { return !mader_lemma_check(r, options).holds; });
    }
    if (rec.enabled("theta-psi-counting")) {
      rec.record("theta-psi-counting", theta_counting_witness(tp).has_value(), false, fixture, nullptr,
                 [&] { return !theta_counting_witness(build_theta_psi(r, options)).has_value(); });
    }
    if (rec.enabled("translation-equivariance")) {
      const auto base = tp.minimal_fragments[0].to_mask();
      bool ok = true;
      for (Element x = 0; x < g.order() && ok; ++x) ok = tp.minimal_fragments[x].to_mask() == left_translate(g, x, base);
      rec.record("translation-equivariance", ok, false, fixture, nullptr, [] { return true; });
    }
  }
}

void theorem_checks_digraph(const Relation& r, const json& fixture, const CampaignSpec& spec, Recorder& rec) {
  const KappaOptions options{spec.caps.enumeration_cap};
  if (rec.enabled("flow-agreement")) {
    for (Vertex v = 0; v < r.vertex_count(); ++v) {
      bool ok = true;
      std::string why;
      try {
        kappa_v(r, v, KappaMethod::kBothAgree, options);
      } catch (const ConsistencyError& e) {
        ok = false;
        why = e.what();
      }
      rec.record("flow-agreement", ok, false, fixture, {{"vertex", v}, {"error", why}}, [&, v] {
        const auto a = kappa_v(r, v, KappaMethod::kEnumeration, options);
        const auto b = kappa_v(r, v, KappaMethod::kFlow, options);
        return a.kappa_v != b.kappa_v || a.minimal_fragment != b.minimal_fragment;
      });
    }
  }
  if (rec.enabled("mader-lemma") || rec.enabled("theta-psi-counting")) {
    const auto tp = build_theta_psi(r, options);
    if (rec.enabled("mader-lemma")) {
      const auto check = mader_lemma_check(r, tp);
      rec.record("mader-lemma", check.holds, false, fixture,
                 check.counterexample ? json{check.counterexample->first, check.counterexample->second} : json(nullptr),
                 [&] { return !mader_lemma_check(r, options).holds; });
    }
    if (rec.enabled("theta-psi-counting")) {
      rec.record("theta-psi-counting", theta_counting_witness(tp).has_value(), false, fixture, nullptr,
                 [&] { return !theta_counting_witness(build_theta_psi(r, options)).has_value(); });
    }
  }
}

json digraph_fixture(std::size_t index, const Relation& r) {
  return {{"digraph_index", index}, {"graph", to_json(r)}};
}

void write_corpus(const std::string& path, const std::vector<json>& instances) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write tight corpus to " + path);
  for (const auto& i : instances) out << i.dump() << '\n';
}

void recheck_corpus(const std::string& path, CampaignReport& report) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read regression corpus " + path);
  std::string line;
  auto& tally = report.checks["regression-corpus"];
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = json::parse(line);
    const auto g = build_group(group_spec_from_json(j.at("group")));
    const auto f = index_set_from_json(j.at("F"), g->order());
    const auto s = GroupSubset(g, index_set_from_json(j.at("S"), g->order()));
    const auto r = cayley(s);
    const auto check = theorem_main_check(r, 0, f, SetSide::kFinite);
    if (check.holds) {
      ++tally.passed;
      if (check.margin == 0) ++tally.tight;
    } else {
      ++tally.failed;
      if (!report.counterexample) report.counterexample = Counterexample{"regression-corpus", j, to_json(check), true};
    }
  }
}

template <typename Fn>
CampaignReport timed(const CampaignSpec& spec, Fn&& body) {
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  report.kind = spec.kind;
  report.estimated_work = estimate_work(spec);
  for (const auto& c : enabled_checks(spec)) report.checks[c];
  body(report);
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

// ---------------------------------------------------------------------------

bool CampaignReport::all_passed() const { return failures() == 0; }

std::size_t CampaignReport::failures() const {
  std::size_t total = 0;
  for (const auto& [name, t] : checks) total += t.failed;
  return total;
}

const std::map<std::string, CheckInfo>& check_registry() {
  using K = CampaignKind;
  static const std::map<std::string, CheckInfo> registry = {
      {"mskw", {K::kMskw, "finite F with F & S^-1 = {1}: |FS \\ F| >= |S| - 1"}},
      {"mskw-cofinite",
       {K::kMskw, "F given by its complement, F & S^-1 = {1}: |FS \\ F| >= |S^-1| - 1, via the reversed relation"}},
      {"theorem-main", {K::kTheorem, "point-transitive reflexive relation: kappa_v = |Gamma(v)| - 1 and K_v = {v}"}},
      {"flow-agreement", {K::kTheorem, "cut-based kappa_v and K_v equal the enumerated ones"}},
      {"mader-lemma", {K::kTheorem, "Theta^-(x) \\ Psi(x) is contained in boundary(K_x) \\ Gamma(x)"}},
      {"theta-psi-counting", {K::kTheorem, "some u has |Theta(u)| <= |Theta^-(u)|"}},
      {"translation-equivariance", {K::kTheorem, "K_{gv} = g K_v under left translation"}},
      {"sphere", {K::kSphere, "Gamma^{j-1}(v) & Gamma^-(v) = {v} implies |Gamma^j(v)| >= |Gamma^{j-1}(v)| + |Gamma(v)| - 1"}},
      {"sigma", {K::kConstructions, "1 not in A: a permutation sigma of A with x sigma(x) not in A"}},
      {"mader-cycles", {K::kConstructions, "loopless point-transitive: |Gamma(v)| cycles through v meeting only in v"}},
      {"shepherdson", {K::kConstructions, "s_1 ... s_k = 1 with s_i in S and k <= ceil(|G|/|S|)"}},
      {"shepherdson-minimum", {K::kConstructions, "breadth-first k equals the brute-force minimum product length"}},
      {"caccetta-haggkvist", {K::kConstructions, "loopless Cayley relation: |G| >= |S| (g - 1) + 1 for girth g"}},
      {"certificate-roundtrip", {K::kConstructions, "every emitted certificate re-verifies from its JSON form"}},
      {"submodularity", {K::kStructure, "|bd(X | Y)| + |bd(X & Y)| <= |bd(X)| + |bd(Y)|"}},
      {"duality", {K::kStructure, "inverse boundary of the exterior of F is contained in boundary(F)"}},
      {"partition", {K::kStructure, "X, boundary(X), exterior(X) partition V"}},
      {"moser-lattice", {K::kStructure, "v-fragments are closed under union and intersection; K_v is their meet"}},
      {"weak-fragment-lattice",
       {K::kStructure, "intersecting weak fragments have weak-fragment union and intersection"}},
      {"atom-partition", {K::kStructure, "weak atoms of a point-transitive relation partition V"}},
      {"atom-translation", {K::kStructure, "left translation maps weak atoms onto weak atoms"}},
  };
  return registry;
}

std::string to_string(CampaignKind k) {
  switch (k) {
    case CampaignKind::kMskw: return "mskw";
    case CampaignKind::kTheorem: return "theorem";
    case CampaignKind::kSphere: return "sphere";
    case CampaignKind::kConstructions: return "constructions";
    case CampaignKind::kStructure: return "structure";
  }
  return "?";
}

CampaignKind campaign_kind_from_string(const std::string& s) {
  for (const auto k : {CampaignKind::kMskw, CampaignKind::kTheorem, CampaignKind::kSphere, CampaignKind::kConstructions,
                       CampaignKind::kStructure}) {
    if (to_string(k) == s) return k;
  }
  throw ValidationError("unknown campaign \"" + s + "\"");
}

namespace {

FamilySpec family_from_json(const json& j) {
  FamilySpec f;
  if (j.is_string()) return family_from_json(json{{"family", j}});
  const auto name = j.at("family").get<std::string>();
  f.min_order = j.value("min_order", std::size_t{1});
  f.max_order = j.value("max_order", std::size_t{8});
  if (name == "cyclic-range") {
    f.family = GroupFamily::kCyclicRange;
  } else if (name == "dihedral-range") {
    f.family = GroupFamily::kDihedralRange;
    f.min_order = j.value("min_order", std::size_t{6});
  } else if (name == "symmetric-upto") {
    f.family = GroupFamily::kSymmetricUpto;
    f.min_order = j.value("min_degree", std::size_t{1});
    f.max_order = j.value("max_degree", std::size_t{3});
  } else if (name == "quaternion") {
    f.family = GroupFamily::kQuaternion;
  } else if (name == "explicit-list") {
    f.family = GroupFamily::kExplicitList;
    for (const auto& g : j.at("groups")) f.groups.push_back(group_spec_from_json(g));
  } else {
    throw ValidationError("unknown group family \"" + name + "\"");
  }
  return f;
}

SubsetPolicy policy_from_json(const json& j) {
  SubsetPolicy p;
  const auto kind = j.is_string() ? j.get<std::string>() : j.at("kind").get<std::string>();
  if (kind == "default") {
    p.kind = SubsetPolicy::Kind::kDefault;
  } else if (kind == "all-subsets") {
    p.kind = SubsetPolicy::Kind::kAllSubsets;
  } else if (kind == "all-upto-size") {
    p.kind = SubsetPolicy::Kind::kUptoSize;
    p.max_size = j.at("k").get<std::size_t>();
  } else if (kind == "random-sample") {
    p.kind = SubsetPolicy::Kind::kRandomSample;
    p.samples = j.at("m").get<std::size_t>();
    p.seed = j.value("seed", std::uint64_t{0});
  } else {
    throw ValidationError("unknown subset policy \"" + kind + "\"");
  }
  return p;
}

}  // namespace

CampaignSpec campaign_spec_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ValidationError("campaign spec must be a JSON object");
    CampaignSpec spec;
    spec.kind = campaign_kind_from_string(j.at("campaign").get<std::string>());
    if (j.contains("family")) spec.families.push_back(family_from_json(j.at("family").is_string()
                                                                          ? j
                                                                          : j.at("family")));
    if (j.contains("families"))
      for (const auto& f : j.at("families")) spec.families.push_back(family_from_json(f));
    if (j.contains("subset_policy")) spec.subset_policy = policy_from_json(j.at("subset_policy"));
    if (j.contains("checks")) {
      for (const auto& c : j.at("checks")) {
        const auto name = c.get<std::string>();
        const auto it = check_registry().find(name);
        if (it == check_registry().end()) throw ValidationError("unknown check \"" + name + "\"");
        if (it->second.campaign != spec.kind) {
          throw ValidationError("check \"" + name + "\" does not belong to the " + to_string(spec.kind) + " campaign");
        }
        spec.checks.push_back(name);
      }
    }
    if (j.contains("caps")) {
      const auto& c = j.at("caps");
      spec.caps.enumeration_cap = c.value("enumeration_cap", spec.caps.enumeration_cap);
      spec.caps.work_budget = c.value("work_budget", spec.caps.work_budget);
      spec.caps.exhaustive_pair_order = c.value("exhaustive_pair_order", spec.caps.exhaustive_pair_order);
      spec.caps.sampled_pairs = c.value("sampled_pairs", spec.caps.sampled_pairs);
      spec.caps.lattice_fragment_limit = c.value("lattice_fragment_limit", spec.caps.lattice_fragment_limit);
      spec.caps.max_generators = c.value("max_generators", spec.caps.max_generators);
      spec.caps.brute_force_order = c.value("brute_force_order", spec.caps.brute_force_order);
      spec.caps.max_sphere_steps = c.value("max_sphere_steps", spec.caps.max_sphere_steps);
    }
    if (j.contains("random_digraphs")) {
      const auto& r = j.at("random_digraphs");
      spec.random.count = r.value("count", std::size_t{0});
      spec.random.min_vertices = r.value("min_vertices", spec.random.min_vertices);
      spec.random.max_vertices = r.value("max_vertices", spec.random.max_vertices);
      spec.random.seed = r.value("seed", spec.random.seed);
      if (r.contains("edge_probability")) {
        const auto& p = r.at("edge_probability");
        if (p.is_array()) {
          spec.random.min_edge_probability = p.at(0).get<double>();
          spec.random.max_edge_probability = p.at(1).get<double>();
        } else {
          spec.random.min_edge_probability = spec.random.max_edge_probability = p.get<double>();
        }
      }
      if (spec.random.min_vertices == 0 || spec.random.min_vertices > spec.random.max_vertices ||
          spec.random.max_vertices > 64) {
        throw ValidationError("random_digraphs needs 1 <= min_vertices <= max_vertices <= 64");
      }
    }
    if (j.contains("seed")) {
      spec.random.seed = j.at("seed").get<std::uint64_t>();
      spec.subset_policy.seed = spec.random.seed;
    }
    if (j.contains("tight_corpus")) spec.tight_corpus_out = j.at("tight_corpus").get<std::string>();
    if (j.contains("regression_corpus")) spec.regression_corpus = j.at("regression_corpus").get<std::string>();
    spec.jobs = j.value("jobs", std::size_t{1});
    return spec;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed campaign spec: ") + e.what());
  }
}

json to_json(const CampaignReport& r, bool include_timing) {
  json checks = json::object();
  for (const auto& [name, t] : r.checks) {
    checks[name] = {{"passed", t.passed}, {"failed", t.failed}, {"tight", t.tight}, {"not_applicable", t.not_applicable}};
  }
  json groups = json::array();
  for (const auto& g : r.groups) groups.push_back({{"group", g.name}, {"evaluated", g.evaluated}, {"tight", g.tight}});
  json out = {{"campaign", to_string(r.kind)},
              {"fixtures", r.fixtures},
              {"estimated_work", r.estimated_work},
              {"checks", checks},
              {"groups", groups},
              {"tight_instances", r.tight_instances.size()},
              {"all_passed", r.all_passed()}};
  if (r.counterexample) {
    out["counterexample"] = {{"check", r.counterexample->check},
                             {"fixture", r.counterexample->fixture},
                             {"detail", r.counterexample->detail},
                             {"reverified", r.counterexample->reverified}};
  } else {
    out["counterexample"] = nullptr;
  }
  if (include_timing) out["wall_time_ms"] = r.wall_time_ms;
  return out;
}

std::vector<GroupPtr> campaign_groups(const CampaignSpec& spec) {
  std::vector<GroupPtr> out;
  for (const auto& f : spec.families) {
    switch (f.family) {
      case GroupFamily::kCyclicRange:
        for (auto n = std::max<std::size_t>(f.min_order, 1); n <= f.max_order; ++n)
          out.push_back(build_group(GroupSpec::cyclic(static_cast<std::uint32_t>(n))));
        break;
      case GroupFamily::kDihedralRange:
        for (auto n = std::max<std::size_t>(f.min_order, 6); n <= f.max_order; ++n)
          if (n % 2 == 0) out.push_back(build_group(GroupSpec::dihedral(static_cast<std::uint32_t>(n / 2))));
        break;
      case GroupFamily::kSymmetricUpto:
        for (auto n = std::max<std::size_t>(f.min_order, 1); n <= f.max_order; ++n)
          out.push_back(build_group(GroupSpec::symmetric(static_cast<std::uint32_t>(n))));
        break;
      case GroupFamily::kQuaternion: out.push_back(build_group(GroupSpec::quaternion())); break;
      case GroupFamily::kExplicitList:
        for (const auto& g : f.groups) out.push_back(build_group(g));
        break;
    }
  }
  return out;
}

double estimate_work(const CampaignSpec& spec) {
  double work = 0;
  for (const auto& g : campaign_groups(spec)) {
    const auto n = g->order();
    const auto& p = spec.subset_policy;
    switch (spec.kind) {
      case CampaignKind::kMskw: work += count_subsets(n, p, 1, 0) * count_subsets(n, p, 1, 0); break;
      case CampaignKind::kTheorem:
        work += count_subsets(n, p, 1, 0) * static_cast<double>(n) * std::pow(2.0, static_cast<double>(n));
        break;
      case CampaignKind::kSphere: work += count_subsets(n, p, 1, 0) * static_cast<double>(n); break;
      case CampaignKind::kConstructions: work += 3 * count_subsets(n, p, 0, 0); break;
      case CampaignKind::kStructure: {
        const double pairs = n <= spec.caps.exhaustive_pair_order ? std::pow(4.0, static_cast<double>(n))
                                                                 : static_cast<double>(spec.caps.sampled_pairs);
        work += count_subsets(n, p, 1, 0) * pairs;
        break;
      }
    }
  }
  const double per_digraph = spec.kind == CampaignKind::kStructure
                                 ? std::pow(4.0, static_cast<double>(spec.random.max_vertices))
                                 : static_cast<double>(spec.random.max_vertices) *
                                       std::pow(2.0, static_cast<double>(spec.random.max_vertices));
  work += static_cast<double>(spec.random.count) * per_digraph;
  return work;
}

CampaignReport run_campaign(const CampaignSpec& spec) {
  const double work = estimate_work(spec);
  if (work > spec.caps.work_budget) {
    throw CapacityError("campaign refused: estimated " + std::to_string(static_cast<long double>(work)) +
                        " subset evaluations exceed the budget of " +
                        std::to_string(static_cast<long double>(spec.caps.work_budget)));
  }
  CampaignReport report;
  switch (spec.kind) {
    case CampaignKind::kMskw: report = run_mskw_campaign(spec); break;
    case CampaignKind::kTheorem: report = run_theorem_campaign(spec); break;
    case CampaignKind::kSphere: report = run_sphere_campaign(spec); break;
    case CampaignKind::kConstructions: report = run_constructions_campaign(spec); break;
    case CampaignKind::kStructure: report = run_structure_campaign(spec); break;
  }
  if (spec.regression_corpus) recheck_corpus(*spec.regression_corpus, report);
  if (spec.tight_corpus_out) write_corpus(*spec.tight_corpus_out, report.tight_instances);
  return report;
}

CampaignReport run_mskw_campaign(const CampaignSpec& spec) {
  return timed(spec, [&](CampaignReport& report) {
    const auto groups = campaign_groups(spec);
    const auto checks = enabled_checks(spec);
    // One work item per (group, S).
    std::vector<std::pair<GroupPtr, std::uint64_t>> items;
    std::vector<std::vector<std::uint64_t>> fs;
    std::vector<std::size_t> group_of;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      require_mask_order(*groups[gi]);
      fs.push_back(policy_subsets(groups[gi]->order(), spec.subset_policy, kIdentityBit, 0));
      for (const auto s : policy_subsets(groups[gi]->order(), spec.subset_policy, kIdentityBit, 0)) {
        items.emplace_back(groups[gi], s);
        group_of.push_back(gi);
      }
    }
    auto parts = run_parallel(spec.jobs, items.size(), checks, [&](std::size_t i, Recorder& rec) {
      const auto& [g, s] = items[i];
      const auto n = g->order();
      const auto gens = mask_elements(s);
      const auto s_inv = inverse_mask(*g, s);
      std::vector<std::uint64_t> coset(n, 0);  // x S
      for (Element x = 0; x < n; ++x)
        for (const auto y : gens) coset[x] |= std::uint64_t{1} << g->multiply(x, y);
      const auto r = cayley(subset_of(g, s));
      const int bound = std::popcount(s) - 1;
      GroupSummary summary{g->spec().name(), 0, 0};
      for (const auto f : fs[group_of[i]]) {
        if ((f & s_inv) != kIdentityBit) continue;
        ++summary.evaluated;
        const json fixture = {{"group", to_json(g->spec())}, {"F", mask_elements(f)}, {"S", gens}};
        if (rec.enabled("mskw")) {
          std::uint64_t fs_mask = 0;
          for (auto m = f; m != 0; m &= m - 1) fs_mask |= coset[static_cast<std::size_t>(std::countr_zero(m))];
          const int margin = std::popcount(fs_mask & ~f) - bound;
          rec.record("mskw", margin >= 0, margin == 0, fixture, {{"margin", margin}}, [&, f] {
            return !theorem_main_check(r, 0, IndexSet::from_mask(n, f), SetSide::kFinite).holds;
          });
          if (margin == 0) {
            ++summary.tight;
            rec.tight_instance(fixture);
          }
        }
        if (rec.enabled("mskw-cofinite")) {
          const auto complement = IndexSet::from_mask(n, detail::low_bits(n) & ~f);
          const auto check = theorem_main_check(r, 0, complement, SetSide::kCofinite);
          rec.record("mskw-cofinite", check.holds, check.margin == 0, fixture, to_json(check), [&] {
            return !theorem_main_check(r, 0, complement, SetSide::kCofinite).holds;
          });
        }
      }
      rec.group_ = summary;
    });
    report.fixtures = items.size();
    merge_into(report, parts);
  });
}

CampaignReport run_theorem_campaign(const CampaignSpec& spec) {
  return timed(spec, [&](CampaignReport& report) {
    const auto checks = enabled_checks(spec);
    std::vector<std::pair<GroupPtr, std::uint64_t>> items;
    for (const auto& g : campaign_groups(spec)) {
      require_mask_order(*g);
      for (const auto s : policy_subsets(g->order(), spec.subset_policy, kIdentityBit, 0)) items.emplace_back(g, s);
    }
    const auto digraphs = campaign_digraphs(spec.random);
    auto parts = run_parallel(spec.jobs, items.size() + digraphs.size(), checks, [&](std::size_t i, Recorder& rec) {
      if (i < items.size()) {
        const auto& [g, s] = items[i];
        const auto r = cayley(subset_of(g, s));
        theorem_checks_cayley(*g, s, r, group_fixture(*g, s), spec, rec);
        rec.group_ = GroupSummary{g->spec().name(), 1, 0};
      } else {
        const auto k = i - items.size();
        theorem_checks_digraph(digraphs[k], digraph_fixture(k, digraphs[k]), spec, rec);
      }
    });
    report.fixtures = items.size() + digraphs.size();
    merge_into(report, parts);
  });
}

CampaignReport run_sphere_campaign(const CampaignSpec& spec) {
  return timed(spec, [&](CampaignReport& report) {
    const auto checks = enabled_checks(spec);
    std::vector<std::pair<GroupPtr, std::uint64_t>> items;
    for (const auto& g : campaign_groups(spec)) {
      require_mask_order(*g);
      for (const auto s : policy_subsets(g->order(), spec.subset_policy, kIdentityBit, 0)) items.emplace_back(g, s);
    }
    auto parts = run_parallel(spec.jobs, items.size(), checks, [&](std::size_t i, Recorder& rec) {
      const auto& [g, s] = items[i];
      const auto r = cayley(subset_of(g, s));
      GroupSummary summary{g->spec().name(), 0, 0};
      const auto steps = sphere_growth(r, 0, std::min(spec.caps.max_sphere_steps, g->order() + 1));
      for (const auto& step : steps) {
        if (!step.admissible) {
          rec.not_applicable("sphere");
          continue;
        }
        ++summary.evaluated;
        if (step.margin == 0) ++summary.tight;
        auto fixture = group_fixture(*g, s);
        fixture["j"] = step.j;
        rec.record("sphere", step.holds, step.margin == 0, fixture, to_json(step), [&, j = step.j] {
          return !sphere_growth(r, 0, j).back().holds;
        });
      }
      rec.group_ = summary;
    });
    report.fixtures = items.size();
    merge_into(report, parts);
  });
}

CampaignReport run_constructions_campaign(const CampaignSpec& spec) {
  return timed(spec, [&](CampaignReport& report) {
    const auto checks = enabled_checks(spec);
    const auto groups = campaign_groups(spec);
    for (const auto& g : groups) require_mask_order(*g);
    auto parts = run_parallel(spec.jobs, groups.size(), checks, [&](std::size_t gi, Recorder& rec) {
      const auto& g = groups[gi];
      const auto n = g->order();
      GroupSummary summary{g->spec().name(), 0, 0};
      auto roundtrip = [&](const json& cert, const json& fixture) {
        if (!rec.enabled("certificate-roundtrip")) return;
        const auto check = check_certificate(cert);
        rec.record("certificate-roundtrip", check.valid, false, fixture, to_json(check),
                   [&] { return !check_certificate(json::parse(cert.dump())).valid; });
      };

      const auto identity_free = policy_subsets(n, spec.subset_policy, 0, kIdentityBit);
      if (rec.enabled("sigma")) {
        for (const auto a : identity_free) {
          const json fixture = {{"group", to_json(g->spec())}, {"A", mask_elements(a)}};
          std::string why;
          std::optional<SigmaPermutation> sigma;
          try {
            sigma = sigma_permutation(subset_of(g, a));
            why = verify_sigma(*sigma);
          } catch (const Error& e) {
            why = e.what();
          }
          ++summary.evaluated;
          rec.record("sigma", why.empty(), false, fixture, {{"reason", why}},
                     [&, a] { return !verify_sigma(sigma_permutation(subset_of(g, a))).empty(); });
          if (sigma) roundtrip(sigma_certificate(*sigma), fixture);
        }
      }

      for (const auto s : identity_free) {
        if (s == 0 || static_cast<std::size_t>(std::popcount(s)) > spec.caps.max_generators) continue;
        const json fixture = group_fixture(*g, s);
        const auto gens = subset_of(g, s);
        const auto r = cayley(gens);
        if (rec.enabled("mader-cycles")) {
          std::string why;
          std::optional<CycleSystem> system;
          try {
            system = mader_cycles(r, 0);
            why = verify_cycle_system(r, *system, static_cast<std::size_t>(std::popcount(s)));
          } catch (const Error& e) {
            why = e.what();
          }
          rec.record("mader-cycles", why.empty(), false, fixture, {{"reason", why}}, [&] {
            return !verify_cycle_system(r, mader_cycles(r, 0), static_cast<std::size_t>(std::popcount(s))).empty();
          });
          if (system) roundtrip(cycles_certificate(gens, *system), fixture);
        }
        if (rec.enabled("caccetta-haggkvist")) {
          const auto girth = shepherdson_sequence(gens).k();
          const long margin = static_cast<long>(n) - static_cast<long>(std::popcount(s)) * static_cast<long>(girth - 1) - 1;
          rec.record("caccetta-haggkvist", margin >= 0, margin == 0, fixture, {{"girth", girth}, {"margin", margin}},
                     [&] { return static_cast<long>(n) < std::popcount(s) * static_cast<long>(girth - 1) + 1; });
        }
      }

      if (rec.enabled("shepherdson") || rec.enabled("shepherdson-minimum")) {
        for (const auto s : policy_subsets(n, spec.subset_policy, 0, 0)) {
          if (s == 0) continue;
          const json fixture = group_fixture(*g, s);
          const auto cert = shepherdson_sequence(subset_of(g, s));
          if (rec.enabled("shepherdson")) {
            const auto why = verify_zero_product(cert);
            rec.record("shepherdson", why.empty(), cert.k() == cert.bound(), fixture,
                       {{"reason", why}, {"k", cert.k()}, {"bound", cert.bound()}},
                       [&] { return !verify_zero_product(shepherdson_sequence(subset_of(g, s))).empty(); });
            roundtrip(zero_product_certificate(cert), fixture);
          }
          if (rec.enabled("shepherdson-minimum")) {
            if (n > spec.caps.brute_force_order) {
              rec.not_applicable("shepherdson-minimum");
            } else {
              const auto minimum = brute_force_product_length(*g, mask_elements(s));
              rec.record("shepherdson-minimum", minimum == cert.k(), false, fixture,
                         {{"k", cert.k()}, {"brute_force", minimum}},
                         [&] { return brute_force_product_length(*g, mask_elements(s)) != cert.k(); });
            }
          }
        }
      }
      rec.group_ = summary;
    });
    report.fixtures = groups.size();
    merge_into(report, parts);
  });
}

CampaignReport run_structure_campaign(const CampaignSpec& spec) {
  return timed(spec, [&](CampaignReport& report) {
    const auto checks = enabled_checks(spec);
    std::vector<std::pair<GroupPtr, std::uint64_t>> items;
    for (const auto& g : campaign_groups(spec)) {
      require_mask_order(*g);
      if (g->order() > std::min<std::size_t>(spec.caps.enumeration_cap, 64)) {
        throw CapacityError("structure campaign: group order exceeds the enumeration cap");
      }
      for (const auto s : policy_subsets(g->order(), spec.subset_policy, kIdentityBit, 0)) items.emplace_back(g, s);
    }
    const auto digraphs = campaign_digraphs(spec.random);
    auto parts = run_parallel(spec.jobs, items.size() + digraphs.size(), checks, [&](std::size_t i, Recorder& rec) {
      if (i < items.size()) {
        const auto& [g, s] = items[i];
        const auto r = cayley(subset_of(g, s));
        const auto fixture = group_fixture(*g, s);
        structure_checks(r, fixture, spec, spec.random.seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)), rec);
        if (rec.enabled("atom-partition") || rec.enabled("atom-translation")) atom_checks(*g, r, fixture, spec, rec);
        rec.group_ = GroupSummary{g->spec().name(), 1, 0};
      } else {
        const auto k = i - items.size();
        structure_checks(digraphs[k], digraph_fixture(k, digraphs[k]), spec,
                         spec.random.seed ^ (0xc2b2ae3d27d4eb4fULL * (k + 1)), rec);
      }
    });
    report.fixtures = items.size() + digraphs.size();
    merge_into(report, parts);
  });
}

Relation random_reflexive_digraph(std::size_t n, double p, std::mt19937_64& rng) {
  // Compare the top 53 bits against p so the draw does not depend on the
  // standard library's distribution implementation.
  std::vector<Edge> edges;
  for (Vertex x = 0; x < n; ++x) {
    edges.emplace_back(x, x);
    for (Vertex y = 0; y < n; ++y) {
      if (x == y) continue;
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) edges.emplace_back(x, y);
    }
  }
  return Relation(n, edges);
}

std::vector<Relation> campaign_digraphs(const RandomDigraphSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<Relation> out;
  const auto span = spec.max_vertices - spec.min_vertices + 1;
  for (std::size_t i = 0; i < spec.count; ++i) {
    const auto n = spec.min_vertices + static_cast<std::size_t>(rng() % span);
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double p = spec.min_edge_probability + (spec.max_edge_probability - spec.min_edge_probability) * u;
    out.push_back(random_reflexive_digraph(n, p, rng));
  }
  return out;
}

std::vector<std::uint64_t> policy_subsets(std::size_t n, const SubsetPolicy& raw, std::uint64_t include,
                                          std::uint64_t exclude) {
  if (n > 64) throw CapacityError("subset policies support universes of at most 64 elements");
  const auto policy = resolve_policy(raw, n);
  const std::uint64_t all = detail::low_bits(n);
  include &= all;
  exclude &= all & ~include;
  const auto free = mask_elements(all & ~include & ~exclude);
  std::vector<std::uint64_t> out;

  switch (policy.kind) {
    case SubsetPolicy::Kind::kAllSubsets: {
      if (free.size() > 30) throw CapacityError("all-subsets policy on more than 30 free elements");
      for (std::uint64_t t = 0; t < (std::uint64_t{1} << free.size()); ++t) {
        std::uint64_t m = include;
        for (std::size_t b = 0; b < free.size(); ++b)
          if ((t >> b) & 1U) m |= std::uint64_t{1} << free[b];
        out.push_back(m);
      }
      break;
    }
    case SubsetPolicy::Kind::kUptoSize: {
      const auto base = static_cast<std::size_t>(std::popcount(include));
      if (base > policy.max_size) break;
      const auto budget = policy.max_size - base;
      std::function<void(std::size_t, std::size_t, std::uint64_t)> grow = [&](std::size_t from, std::size_t left,
                                                                              std::uint64_t m) {
        out.push_back(m);
        if (left == 0) return;
        for (std::size_t i = from; i < free.size(); ++i) grow(i + 1, left - 1, m | (std::uint64_t{1} << free[i]));
      };
      grow(0, budget, include);
      break;
    }
    case SubsetPolicy::Kind::kRandomSample: {
      std::mt19937_64 rng(policy.seed ^ (n * 0x100000001b3ULL) ^ include ^ (exclude << 1));
      for (std::size_t i = 0; i < policy.samples; ++i) out.push_back(include | (rng() & all & ~include & ~exclude));
      break;
    }
    case SubsetPolicy::Kind::kDefault: break;
  }
  std::sort(out.begin(), out.end(), canonical_mask_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t brute_force_product_length(const GroupTable& g, const std::vector<Element>& s) {
  if (s.empty()) throw UsageError("brute_force_product_length needs a nonempty set");
  for (std::size_t k = 1; k <= g.order(); ++k) {
    std::vector<std::size_t> digits(k, 0);
    while (true) {
      Element product = g.identity();
      for (const auto d : digits) product = g.multiply(product, s[d]);
      if (product == g.identity()) return k;
      std::size_t pos = 0;
      while (pos < k && ++digits[pos] == s.size()) digits[pos++] = 0;
      if (pos == k) break;
    }
  }
  throw ConsistencyError("no product of length at most |G| returns to the identity");
}

}  // namespace mskw
