#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "mskw/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = mskw::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kZ5 = R"({"type":"cyclic","n":5})";

}  // namespace

TEST(Cli, KappaV) {
  const auto r = run({"kappa-v", "--group", kZ5, "--gens", "[0,1,2]", "--vertex", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["kappa_v"], 2);
  EXPECT_EQ(j["K_v"], json::array({0}));
}

TEST(Cli, IdentityIsAddedForReflexiveSubcommands) {
  const auto with = run({"kappa-v", "--group", kZ5, "--gens", "[0,1,2]"});
  const auto without = run({"kappa-v", "--group", kZ5, "--gens", "[1,2]"});
  EXPECT_EQ(with.out, without.out);
}

TEST(Cli, CyclesAndCertificateCheck) {
  const auto r = run({"cycles", "--group", kZ5, "--gens", "[1,2]", "--vertex", "0", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["cycles"].size(), 2U);
  const auto check = run({"--check-certificate", r.out});
  EXPECT_EQ(check.code, 0);
  EXPECT_TRUE(json::parse(check.out)["valid"].get<bool>());

  auto tampered = j;
  tampered["cycles"][1] = json::array({0, 1, 3});
  const auto bad = run({"--check-certificate", tampered.dump()});
  EXPECT_EQ(bad.code, 2);
}

TEST(Cli, LooplessSubcommandsRejectIdentity) {
  EXPECT_EQ(run({"cycles", "--group", kZ5, "--gens", "[0,1]"}).code, 1);
  EXPECT_EQ(run({"shepherdson", "--group", kZ5, "--gens", "[0,1]"}).code, 1);
}

TEST(Cli, Errors) {
  EXPECT_EQ(run({"verify", "--spec", "missing.json"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"kappa-v", "--group", "{not json", "--gens", "[1]"}).code, 1);
  EXPECT_EQ(run({"kappa-v", "--group", kZ5, "--gens", "[1]", "--vertex", "9"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {
      "verify", "--spec",
      R"({"campaign":"structure","random_digraphs":{"count":20,"min_vertices":5,"max_vertices":6},"checks":["duality"]})",
      "--seed", "5", "--jobs", "2"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, VerifyExitCodes) {
  const auto ok = run({"verify", "--spec", R"({"campaign":"mskw","family":{"family":"cyclic-range","min_order":2,"max_order":4}})"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  const auto refused = run({"verify", "--spec",
                            R"({"campaign":"mskw","family":{"family":"cyclic-range","min_order":30,"max_order":30},
                                "subset_policy":"all-subsets"})"});
  EXPECT_EQ(refused.code, 1);
  EXPECT_NE(refused.err.find("estimated"), std::string::npos);
}

TEST(Cli, OtherSubcommands) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"group", "--group", kZ5},
           {"cayley", "--group", kZ5, "--gens", "[0,1]"},
           {"boundary", "--graph", R"({"n":3,"edges":[[0,1],[1,2]],"reflexive_closure":true})", "--set", "[0]"},
           {"spheres", "--group", kZ5, "--gens", "[1]"},
           {"atoms", "--group", kZ5, "--gens", "[1]", "--variant", "paper-definition"},
           {"fragment", "--group", kZ5, "--gens", "[1,2]"},
           {"theta-psi", "--group", kZ5, "--gens", "[1]"},
           {"mskw-check", "--group", kZ5, "--gens", "[1,2]", "--set", "[0,1]"},
           {"mskw-check", "--group", kZ5, "--gens", "[1,2]", "--set", "[3,4]", "--cofinite"},
           {"sigma", "--group", kZ5, "--set", "[1,2]"},
           {"shepherdson", "--group", kZ5, "--gens", "[2]"}}) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << args[0] << ": " << r.err;
    EXPECT_TRUE(json::accept(r.out)) << args[0];
  }
  const auto text = run({"group", "--group", kZ5, "--format", "text"});
  EXPECT_NE(text.out.find("order: 5"), std::string::npos);
}
