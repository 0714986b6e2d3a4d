#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "rsd/error.hpp"
#include "rsd/oracle.hpp"
#include "rsd/run.hpp"

using namespace rsd;

namespace {

const std::string kData = RSD_DATA_DIR;
const std::string kGolden = RSD_GOLDEN_DIR;

RunConfig synthetic(RunMode mode = RunMode::mine) {
  RunConfig c;
  c.input = kData + "/synthetic.csv";
  c.target = "outcome";
  c.control = "group";
  c.mode = mode;
  return c;
}

nlohmann::json run_json(const RunConfig& c, int expect_code = 0) {
  std::ostringstream out, err;
  EXPECT_EQ(run(c, out, err), expect_code) << err.str();
  return out.str().empty() ? nlohmann::json() : nlohmann::json::parse(out.str());
}

int code_of(RunConfig c) {
  std::ostringstream out, err;
  return run(c, out, err);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, MineMatchesGoldenResults) {
  RunConfig c = synthetic();
  c.topk = 3;
  c.weight = 0.5;
  const nlohmann::json doc = run_json(c);
  EXPECT_EQ(doc["version"], kOutputVersion);
  ASSERT_EQ(doc["results"].size(), 3u);
  for (const auto& e : doc["results"]) {
    for (const char* k : {"descriptor", "coverage", "tendency", "covcent", "repr", "f", "m1", "m2", "size"})
      EXPECT_TRUE(e.contains(k)) << k;
  }
  for (const char* k : {"nodes_expanded", "nodes_pruned", "estimator_calls", "fccs_evals", "wall_ms"})
    EXPECT_TRUE(doc["stats"].contains(k)) << k;
  EXPECT_TRUE(doc["stats"]["wall_ms"].is_null());

  const nlohmann::json golden = nlohmann::json::parse(slurp(kGolden + "/synthetic_mine.json"));
  EXPECT_EQ(doc["results"], golden["results"]);
}

TEST(Cli, GoldenResultsMatchExhaustiveEnumeration) {
  RunConfig c = synthetic();
  const Prepared prep = prepare(c);
  const auto expect = brute_force_topk(prep.population, prep.propositions, 0.5, 3, 3);
  const nlohmann::json golden = nlohmann::json::parse(slurp(kGolden + "/synthetic_mine.json"));
  ASSERT_EQ(golden["results"].size(), expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) {
    EXPECT_EQ(golden["results"][i]["descriptor"], expect[i].descriptor);
    EXPECT_TRUE(proptest::near(golden["results"][i]["f"].get<double>(), expect[i].scores.f));
  }
}

TEST(Cli, BenchResultsAreEstimatorIndependent) {
  RunConfig c = synthetic(RunMode::bench);
  c.estimator = "naive,brig,rawr";
  c.topk = 3;
  c.max_depth = 2;
  const nlohmann::json doc = run_json(c);
  ASSERT_EQ(doc["runs"].size(), 3u);
  const auto& base = doc["runs"][2]["results"];
  for (const auto& r : doc["runs"]) {
    ASSERT_EQ(r["results"].size(), base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      EXPECT_EQ(r["results"][i]["descriptor"], base[i]["descriptor"]);
      EXPECT_TRUE(proptest::near(r["results"][i]["f"].get<double>(), base[i]["f"].get<double>()));
    }
  }
  EXPECT_NE(doc["runs"][1]["stats"], doc["runs"][2]["stats"]);
  EXPECT_LE(doc["runs"][2]["stats"]["nodes_expanded"].get<int>(), doc["runs"][1]["stats"]["nodes_expanded"].get<int>());
}

TEST(Cli, SweepTradeOff) {
  RunConfig c = synthetic(RunMode::sweep);
  c.topk = 1;
  c.max_depth = 2;
  const nlohmann::json doc = run_json(c);
  ASSERT_EQ(doc["sweep"].size(), 10u);
  for (std::size_t i = 1; i < doc["sweep"].size(); ++i) {
    const auto& prev = doc["sweep"][i - 1];
    const auto& cur = doc["sweep"][i];
    EXPECT_GE(cur["repr"].get<double>(), prev["repr"].get<double>() - 1e-12);
    EXPECT_LE(cur["covcent"].get<double>(), prev["covcent"].get<double>() + 1e-12);
  }
}

TEST(Cli, ExitCodes) {
  RunConfig missing = synthetic();
  missing.input = kData + "/does_not_exist.csv";
  EXPECT_EQ(code_of(missing), kExitData);

  RunConfig bad_column = synthetic();
  bad_column.target = "nope";
  EXPECT_EQ(code_of(bad_column), kExitData);

  RunConfig weight = synthetic();
  weight.weight = 1.0;
  EXPECT_EQ(code_of(weight), kExitConfig);

  RunConfig alpha = synthetic();
  alpha.alpha = 0.0;
  EXPECT_EQ(code_of(alpha), kExitConfig);

  RunConfig est = synthetic();
  est.estimator = "brig,rawr";
  EXPECT_EQ(code_of(est), kExitConfig);

  RunConfig budget = synthetic();
  budget.budget = 3;
  const nlohmann::json doc = run_json(budget, kExitBudget);
  EXPECT_TRUE(doc["stats"]["budget_exhausted"].get<bool>());
}

TEST(Cli, FlagParsing) {
  const std::string input = kData + "/players.csv";
  const std::string out = (std::filesystem::temp_directory_path() / "rsd_cli_flags.json").string();
  {
    const char* argv[] = {"rsd", "--input", input.c_str(), "--target", "salary", "--control", "free_agent",
                          "--topk", "2", "--max-depth", "2", "--out", out.c_str()};
    EXPECT_EQ(run_cli(static_cast<int>(std::size(argv)), argv), 0);
    const auto doc = nlohmann::json::parse(slurp(out));
    EXPECT_EQ(doc["config"]["topk"], 2);
    EXPECT_EQ(doc["config"]["estimator"], "rawr");
    EXPECT_EQ(doc["results"].size(), 2u);
    RunConfig back = doc["config"].get<RunConfig>();
    EXPECT_EQ(nlohmann::json(back), doc["config"]);
  }
  {
    const char* argv[] = {"rsd", "--input", input.c_str(), "--target", "salary", "--control", "free_agent",
                          "--frobnicate"};
    EXPECT_EQ(run_cli(static_cast<int>(std::size(argv)), argv), kExitConfig);
  }
  {
    const char* argv[] = {"rsd", "--input", input.c_str(), "--target", "salary", "--control", "free_agent",
                          "--mode", "dance"};
    EXPECT_EQ(run_cli(static_cast<int>(std::size(argv)), argv), kExitConfig);
  }
  std::filesystem::remove(out);
}

TEST(Cli, ConfigRoundTrip) {
  RunConfig c = synthetic(RunMode::sweep);
  c.seed = 42;
  c.alpha = 0.8;
  const RunConfig back = nlohmann::json(c).get<RunConfig>();
  EXPECT_EQ(nlohmann::json(back), nlohmann::json(c));
  EXPECT_THROW(nlohmann::json::object().get<RunConfig>(), Error);
}
