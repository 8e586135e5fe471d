#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "mskw/errors.hpp"
#include "mskw/harness.hpp"

using namespace mskw;
using nlohmann::json;

namespace {

CampaignSpec parse(const char* text) { return campaign_spec_from_json(json::parse(text)); }

}  // namespace

TEST(CampaignSpec, ParsesFamiliesAndPolicies) {
  const auto spec = parse(R"({"campaign":"theorem",
      "families":[{"family":"cyclic-range","min_order":3,"max_order":5},
                  {"family":"dihedral-range","min_order":6,"max_order":10},
                  "quaternion"],
      "subset_policy":{"kind":"all-upto-size","k":3},
      "checks":["theorem-main"]})");
  EXPECT_EQ(spec.kind, CampaignKind::kTheorem);
  std::vector<std::string> names;
  for (const auto& g : campaign_groups(spec)) names.push_back(g->spec().name());
  EXPECT_EQ(names, (std::vector<std::string>{"Z3", "Z4", "Z5", "D3", "D4", "D5", "Q8"}));
  EXPECT_EQ(spec.subset_policy.kind, SubsetPolicy::Kind::kUptoSize);
  EXPECT_EQ(spec.subset_policy.max_size, 3U);
}

TEST(CampaignSpec, RejectsUnknownOrMisplacedChecks) {
  EXPECT_THROW(parse(R"({"campaign":"mskw","checks":["nope"]})"), ValidationError);
  EXPECT_THROW(parse(R"({"campaign":"mskw","checks":["sigma"]})"), ValidationError);
  EXPECT_THROW(parse(R"({"campaign":"everything"})"), ValidationError);
  EXPECT_THROW(parse(R"({"campaign":"mskw","family":{"family":"klein"}})"), ValidationError);
}

TEST(PolicySubsets, CountsAndOrder) {
  SubsetPolicy all{SubsetPolicy::Kind::kAllSubsets};
  EXPECT_EQ(policy_subsets(5, all, 1, 0).size(), 16U);
  EXPECT_EQ(policy_subsets(5, all, 0, 1).size(), 16U);
  SubsetPolicy upto{SubsetPolicy::Kind::kUptoSize, 2};
  // {0} plus at most one more of 9 others.
  EXPECT_EQ(policy_subsets(10, upto, 1, 0).size(), 10U);
  const auto subsets = policy_subsets(4, all, 0, 0);
  for (std::size_t i = 1; i < subsets.size(); ++i) EXPECT_TRUE(canonical_mask_less(subsets[i - 1], subsets[i]));
  SubsetPolicy sample{SubsetPolicy::Kind::kRandomSample, 0, 50, 9};
  EXPECT_EQ(policy_subsets(20, sample, 1, 0), policy_subsets(20, sample, 1, 0));
  for (const auto m : policy_subsets(20, sample, 1, 0)) EXPECT_EQ(m & 1U, 1U);
}

TEST(MskwCampaign, CyclicTwoToEight) {
  const auto report = run_campaign(parse(R"({"campaign":"mskw",
      "family":{"family":"cyclic-range","min_order":2,"max_order":8},"subset_policy":"all-subsets"})"));
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.groups.size(), 7U);
  for (const auto& g : report.groups) EXPECT_GT(g.tight, 0U) << g.name;
  // F={0}, S={0,1} in Z2 is among the tight instances.
  bool found = false;
  for (const auto& t : report.tight_instances)
    found = found || (t["group"]["n"] == 2 && t["F"] == json{0} && t["S"] == json{0, 1});
  EXPECT_TRUE(found);
}

TEST(MskwCampaign, BudgetRefusal) {
  auto spec = parse(R"({"campaign":"mskw","family":{"family":"cyclic-range","min_order":20,"max_order":20},
      "subset_policy":"all-subsets"})");
  EXPECT_GT(estimate_work(spec), spec.caps.work_budget);
  EXPECT_THROW(run_campaign(spec), CapacityError);
}

TEST(TheoremCampaign, SymmetricThree) {
  const auto report = run_campaign(parse(R"({"campaign":"theorem",
      "family":{"family":"symmetric-upto","min_degree":3,"max_degree":3},
      "subset_policy":{"kind":"all-upto-size","k":4}})"));
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.checks.at("theorem-main").passed, 26U);  // 1 + 5 + 10 + 10
}

TEST(Campaigns, ParallelRunIsIdentical) {
  const char* text = R"({"campaign":"structure","family":{"family":"cyclic-range","min_order":3,"max_order":6},
      "random_digraphs":{"count":40,"min_vertices":5,"max_vertices":7,"seed":3}})";
  auto serial = parse(text);
  auto parallel = serial;
  parallel.jobs = 4;
  EXPECT_EQ(to_json(run_campaign(serial)).dump(), to_json(run_campaign(parallel)).dump());
}

TEST(Campaigns, TightCorpusRoundTrip) {
  const std::string path = testing::TempDir() + "mskw_tight.jsonl";
  auto spec = parse(R"({"campaign":"mskw","family":{"family":"cyclic-range","min_order":3,"max_order":5},
      "subset_policy":"all-subsets","checks":["mskw"]})");
  spec.tight_corpus_out = path;
  const auto first = run_campaign(spec);
  spec.tight_corpus_out.reset();
  spec.regression_corpus = path;
  const auto second = run_campaign(spec);
  EXPECT_EQ(second.checks.at("regression-corpus").passed, first.tight_instances.size());
  EXPECT_EQ(second.checks.at("regression-corpus").tight, first.tight_instances.size());
  std::remove(path.c_str());
}

TEST(Campaigns, ReportJsonHasNoTimingByDefault) {
  const auto report = run_campaign(parse(R"({"campaign":"sphere","family":{"family":"cyclic-range","min_order":9,"max_order":9},
      "subset_policy":{"kind":"all-upto-size","k":2}})"));
  const auto j = to_json(report);
  EXPECT_FALSE(j.contains("wall_time_ms"));
  EXPECT_TRUE(to_json(report, true).contains("wall_time_ms"));
  EXPECT_TRUE(j["all_passed"].get<bool>());
}

TEST(BruteForce, ProductLength) {
  const auto g = build_group(GroupSpec::cyclic(7));
  EXPECT_EQ(brute_force_product_length(*g, {3}), 7U);
  EXPECT_EQ(brute_force_product_length(*g, {3, 4}), 2U);
  EXPECT_EQ(brute_force_product_length(*g, {0}), 1U);
}
