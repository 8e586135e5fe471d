#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mskw/group.hpp"
#include "mskw/relation.hpp"

namespace mskw {

enum class GroupFamily { kCyclicRange, kDihedralRange, kSymmetricUpto, kQuaternion, kExplicitList };

/// One family of groups. Range families are bounded by group order, so
/// "dihedral-range" with orders 6..12 yields the groups of orders 6, 8, 10, 12.
struct FamilySpec {
  GroupFamily family = GroupFamily::kCyclicRange;
  std::size_t min_order = 1;
  std::size_t max_order = 8;
  std::vector<GroupSpec> groups;
};

struct SubsetPolicy {
  enum class Kind { kDefault, kAllSubsets, kUptoSize, kRandomSample };
  Kind kind = Kind::kDefault;
  std::size_t max_size = 4;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

struct RandomDigraphSpec {
  std::size_t count = 0;
  std::size_t min_vertices = 5;
  std::size_t max_vertices = 10;
  double min_edge_probability = 0.3;
  double max_edge_probability = 0.3;
  std::uint64_t seed = 1;
};

struct CampaignCaps {
  std::size_t enumeration_cap = 22;
  /// Refuse specs whose estimated subset count exceeds this.
  double work_budget = 2e10;
  /// Exhaustive (X, Y) pairs up to this order, sampled pairs above it.
  std::size_t exhaustive_pair_order = 10;
  std::size_t sampled_pairs = 20000;
  /// Fragments kept per fixture for the pairwise lattice checks.
  std::size_t lattice_fragment_limit = 128;
  /// Generator-set size limit for loopless (cycle) fixtures.
  std::size_t max_generators = 4;
  /// Brute-force product search up to this order.
  std::size_t brute_force_order = 10;
  std::size_t max_sphere_steps = 64;
};

enum class CampaignKind { kMskw, kTheorem, kSphere, kConstructions, kStructure };

struct CampaignSpec {
  CampaignKind kind = CampaignKind::kMskw;
  std::vector<FamilySpec> families;
  SubsetPolicy subset_policy;
  /// Empty means every check of the campaign.
  std::vector<std::string> checks;
  CampaignCaps caps;
  RandomDigraphSpec random;
  std::optional<std::string> tight_corpus_out;
  std::optional<std::string> regression_corpus;
  std::size_t jobs = 1;
};

struct CheckTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t tight = 0;
  std::size_t not_applicable = 0;
};

struct Counterexample {
  std::string check;
  nlohmann::json fixture;
  nlohmann::json detail;
  /// Whether a second, independent evaluation of the module predicate confirmed it.
  bool reverified = false;
};

struct GroupSummary {
  std::string name;
  std::size_t evaluated = 0;
  std::size_t tight = 0;
};

struct CampaignReport {
  CampaignKind kind = CampaignKind::kMskw;
  std::size_t fixtures = 0;
  double estimated_work = 0;
  std::map<std::string, CheckTally> checks;
  std::vector<GroupSummary> groups;
  std::optional<Counterexample> counterexample;
  std::vector<nlohmann::json> tight_instances;
  double wall_time_ms = 0;

  bool all_passed() const;
  std::size_t failures() const;
};

/// Statement verified by a check, keyed by check name.
struct CheckInfo {
  CampaignKind campaign;
  std::string statement;
};
const std::map<std::string, CheckInfo>& check_registry();

std::string to_string(CampaignKind k);
CampaignKind campaign_kind_from_string(const std::string& s);

/// Throws ValidationError on malformed specs and unknown check names.
CampaignSpec campaign_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CampaignReport& r, bool include_timing = false);

/// Groups produced by the spec's families, in order.
std::vector<GroupPtr> campaign_groups(const CampaignSpec& spec);

/// Estimated number of subsets the campaign enumerates.
double estimate_work(const CampaignSpec& spec);

/// Refused with CapacityError when the estimate exceeds the budget.
CampaignReport run_campaign(const CampaignSpec& spec);
CampaignReport run_mskw_campaign(const CampaignSpec& spec);
CampaignReport run_theorem_campaign(const CampaignSpec& spec);
CampaignReport run_sphere_campaign(const CampaignSpec& spec);
CampaignReport run_constructions_campaign(const CampaignSpec& spec);
CampaignReport run_structure_campaign(const CampaignSpec& spec);

/// Reflexive digraph with each non-loop edge present independently with
/// probability p. Bit-reproducible across platforms for a given engine state.
Relation random_reflexive_digraph(std::size_t n, double p, std::mt19937_64& rng);

/// The fixed sequence of random digraphs a spec describes.
std::vector<Relation> campaign_digraphs(const RandomDigraphSpec& spec);

/// Subsets of a group of order n (n <= 64) allowed by the policy that contain
/// `include` and avoid `exclude`, in canonical order.
std::vector<std::uint64_t> policy_subsets(std::size_t n, const SubsetPolicy& policy, std::uint64_t include,
                                          std::uint64_t exclude);

/// Shortest product length returning to the identity, by enumerating
/// sequences of increasing length. Independent of the breadth-first search.
std::size_t brute_force_product_length(const GroupTable& g, const std::vector<Element>& s);

}  // namespace mskw
