// Copyright 2026 The mipt-dqite Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "mipt/analysis/bounds_report.hpp"
#include "mipt/analysis/csv.hpp"
#include "mipt/analysis/failure.hpp"
#include "mipt/analysis/infidelity.hpp"
#include "mipt/analysis/mutual_info.hpp"
#include "mipt/circuit/generate.hpp"
#include "mipt/circuit/record.hpp"

namespace mipt {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("mipt_cli_") + info->test_suite_name() + "_" + info->name() +
                                        "_" + std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  /// Runs the tool from the scratch directory and returns its exit status.
  int run(const std::string& args, const std::string& env = "") const {
    const std::string cmd = "cd '" + dir_.string() + "' && " + env + (env.empty() ? "" : " ") + "'" +
                            MIPT_CLI_PATH + "' " + args + " > cli.log 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
  }

  std::string slurp(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  json load(const std::string& name) const { return json::parse(slurp(name)); }

  fs::path dir_;
};

TEST_F(CliTest, RecordIsByteDeterministic) {
  ASSERT_EQ(run("record --n 8 --layers 6 --p 0.3 --family haar --seed 17 --out a.traj.json"), 0);
  ASSERT_EQ(run("record --n 8 --layers 6 --p 0.3 --family haar --seed 17 --out b.traj.json"), 0);
  ASSERT_EQ(run("record --n 8 --layers 6 --p 0.3 --family haar --seed 18 --out c.traj.json"), 0);
  EXPECT_EQ(slurp("a.traj.json"), slurp("b.traj.json"));
  EXPECT_NE(slurp("a.traj.json"), slurp("c.traj.json"));

  CircuitSpec spec;
  spec.n = 8;
  spec.layers = 6;
  spec.p = 0.3;
  spec.family = GateFamily::kHaar;
  spec.seed = 17;
  EXPECT_EQ(deserialize(slurp("a.traj.json")), generate_and_record(spec).record);
}

TEST_F(CliTest, RecordWithoutMeasurements) {
  ASSERT_EQ(run("record --n 6 --layers 4 --p 0 --family clifford --out r.traj.json"), 0);
  const auto rec = deserialize(slurp("r.traj.json"));
  EXPECT_TRUE(rec.measurements.empty());
  EXPECT_EQ(rec.gates.size(), 4U * 6U);
}

TEST_F(CliTest, UsageErrorsExitWithOne) {
  EXPECT_EQ(run("record --n 7 --out x.json"), 1);
  EXPECT_EQ(run("record --p abc --out x.json"), 1);
  EXPECT_EQ(run("record --p 1.5 --out x.json"), 1);
  EXPECT_EQ(run("record --family brick --out x.json"), 1);
  EXPECT_EQ(run("nonsense"), 1);
  EXPECT_EQ(run(""), 1);
  EXPECT_EQ(run("fidelity-sweep --beta 1:0:0.5 --out f.csv"), 1);
  EXPECT_EQ(run("fidelity-sweep --beta 0:1:0 --out f.csv"), 1);
  EXPECT_EQ(run("bounds --P 0 --out b.json"), 1);
  EXPECT_EQ(run("bounds --poly 1:2 --out b.json"), 1);
  EXPECT_EQ(run("replay --traj missing.traj.json"), 1);
  EXPECT_FALSE(fs::exists(path("x.json")));
  EXPECT_FALSE(fs::exists(path("f.csv")));
  EXPECT_FALSE(fs::exists(path("b.json")));
}

TEST_F(CliTest, HelpAndVersionExitWithZero) {
  EXPECT_EQ(run("--help"), 0);
  EXPECT_EQ(run("--version"), 0);
  EXPECT_EQ(run("replay --help"), 0);
}

TEST_F(CliTest, MutualInfoMatchesLibrary) {
  ASSERT_EQ(run("mutualinfo --n 16 --p 0.1,0.4 --r 1,2,3 --ntraj 12 --seed 9 --jobs 3 --out mi.csv"), 0);
  MutualInfoSweep s;
  s.n = 16;
  s.layers = 16;
  s.p_values = {0.1, 0.4};
  s.r_values = {1, 2, 3};
  s.n_traj = 12;
  s.seed = 9;
  s.jobs = 1;
  EXPECT_EQ(slurp("mi.csv"), mutual_info_csv(sweep_mutual_info(s)));
}

TEST_F(CliTest, MutualInfoDefaultsCoverAllDistances) {
  ASSERT_EQ(run("mutualinfo --n 8 --p 0.2 --ntraj 3 --stat mean --out mi.csv"), 0);
  std::stringstream ss(slurp("mi.csv"));
  std::string line;
  std::getline(ss, line);
  EXPECT_EQ(line, "n,L,p,r,stat,value,stderr,n_traj");
  int rows = 0;
  while (std::getline(ss, line)) {
    ++rows;
    EXPECT_NE(line.find(",mean,"), std::string::npos);
  }
  EXPECT_EQ(rows, 3);
}

TEST_F(CliTest, CollapseRejectsSizesNotDivisibleBySixteen) {
  EXPECT_EQ(run("collapse --n 32,40 --out c.json"), 1);
  EXPECT_FALSE(fs::exists(path("c.json")));
}

TEST_F(CliTest, CollapseRecoversPlantedExponents) {
  ASSERT_EQ(run("collapse --n 32,64,128 --synthetic 1.7,0.75 --out c.json"), 0);
  const json j = load("c.json");
  ASSERT_EQ(j["branches"].size(), 2U);
  EXPECT_EQ(j["branches"][0]["branch"], "area");
  EXPECT_EQ(j["branches"][1]["branch"], "volume");
  EXPECT_NEAR(j["branches"][0]["nu"].get<double>(), 1.7, 0.05 * 1.7);
  EXPECT_NEAR(j["branches"][1]["nu"].get<double>(), 0.75, 0.05 * 0.75);
  EXPECT_FALSE(j["branches"][0]["degenerate"].get<bool>());
  EXPECT_FALSE(j["branches"][1]["degenerate"].get<bool>());
}

TEST_F(CliTest, ReplayWithoutMeasurementsIsExact) {
  ASSERT_EQ(run("record --n 6 --layers 4 --p 0 --family haar --seed 3 --out t.traj.json"), 0);
  ASSERT_EQ(run("replay --traj t.traj.json --out rp.json"), 0);
  const json j = load("rp.json");
  EXPECT_EQ(j["num_measurements"], 0);
  EXPECT_NEAR(j["final_fidelity"].get<double>(), 1.0, 1e-12);
  EXPECT_TRUE(fs::exists(path("rp.json.learned.json")));
  EXPECT_TRUE(fs::exists(path("rp.json.manifest.json")));
}

TEST_F(CliTest, StoredLearnedUnitariesReproduceReplay) {
  ASSERT_EQ(run("record --n 8 --layers 4 --p 0.25 --family haar --seed 11 --out t.traj.json"), 0);
  ASSERT_EQ(run("replay --traj t.traj.json --r 2 --beta 2 --out a.json --learned-out l.json --state-out sa.json"), 0);
  ASSERT_EQ(run("replay --traj t.traj.json --learned l.json --out b.json --learned-out l2.json --state-out sb.json"),
            0);
  const json a = load("a.json");
  const json b = load("b.json");
  ASSERT_GT(a["num_measurements"].get<int>(), 0);
  EXPECT_FALSE(a["learned_from_file"].get<bool>());
  EXPECT_TRUE(b["learned_from_file"].get<bool>());
  EXPECT_EQ(a["final_fidelity"].get<double>(), b["final_fidelity"].get<double>());
  EXPECT_EQ(slurp("sa.json"), slurp("sb.json"));
  EXPECT_EQ(slurp("l.json"), slurp("l2.json"));
  const double f = a["final_fidelity"].get<double>();
  EXPECT_GT(f, 0.0);
  EXPECT_LE(f, 1.0 + 1e-12);
}

TEST_F(CliTest, ReplayRejectsCliffordRecords) {
  ASSERT_EQ(run("record --n 6 --layers 3 --p 0.3 --family clifford --out t.traj.json"), 0);
  EXPECT_EQ(run("replay --traj t.traj.json --out rp.json"), 1);
  EXPECT_FALSE(fs::exists(path("rp.json")));
}

TEST_F(CliTest, ReplayRejectsCorruptRecords) {
  {
    std::ofstream out(path("bad.traj.json"));
    out << "{\"format_version\": 1, \"spec\": ";
  }
  EXPECT_EQ(run("replay --traj bad.traj.json --out rp.json"), 1);
  EXPECT_FALSE(fs::exists(path("rp.json")));
}

TEST_F(CliTest, ImpossibleOutcomeExitsWithTwoAndWritesNothing) {
  TrajectoryRecord rec;
  rec.spec.n = 4;
  rec.spec.layers = 2;
  rec.spec.p = 0.5;
  rec.spec.family = GateFamily::kHaar;
  for (int layer = 0; layer < 2; ++layer) {
    for (Sublayer sub : {Sublayer::kEven, Sublayer::kOdd}) {
      for (auto [a, b] : sublayer_pairs(4, sub)) {
        GateEvent ev;
        ev.layer = layer;
        ev.sublayer = sub;
        ev.q0 = a;
        ev.q1 = b;
        ev.gate = Eigen::Matrix4cd(Eigen::Matrix4cd::Identity());
        rec.gates.push_back(ev);
      }
    }
  }
  rec.measurements.push_back({0, 2, 1, 1.0});
  {
    std::ofstream out(path("imp.traj.json"));
    out << serialize(rec);
  }
  EXPECT_EQ(run("replay --traj imp.traj.json --r 1 --beta 1 --out rp.json"), 2);
  EXPECT_FALSE(fs::exists(path("rp.json")));
  EXPECT_FALSE(fs::exists(path("rp.json.learned.json")));
  EXPECT_FALSE(fs::exists(path("rp.json.manifest.json")));
}

TEST_F(CliTest, FidelitySweepMatchesLibraryAndBetaZeroRows) {
  ASSERT_EQ(run("fidelity-sweep --n 6 --p 0.2,0.6 --r 1,2 --beta 0:1:0.5 --ntraj 3 --seed 4 --jobs 2 --out f.csv"),
            0);
  InfidelitySweep s;
  s.n = 6;
  s.layers = 6;
  s.p_values = {0.2, 0.6};
  s.r_values = {1, 2};
  s.betas = {0.0, 0.5, 1.0};
  s.n_traj = 3;
  s.seed = 4;
  const auto rows = infidelity_sweep(s);
  EXPECT_EQ(slurp("f.csv"), infidelity_csv(rows));
  ASSERT_EQ(rows.size(), 2U * 2U * 3U * 3U);
  for (const auto& r : rows) {
    if (r.beta != 0.0) continue;
    EXPECT_NEAR(r.infidelity, 1.0 - r.born_p, 1e-12);
  }
}

TEST_F(CliTest, BoundsMatchLibrary) {
  ASSERT_EQ(run("bounds --P 0.3 --M 7 --epsilon 0.05 --dtau 0.05 --n 32 --poly 2:1:1,1:0:2 --out b.json"), 0);
  const json j = load("b.json");
  const BoundsReport r = eval_bounds_report(0.3, 7, 0.05, kOutcomeGap, 0.05);
  EXPECT_EQ(j["budget"]["c"].get<double>(), r.c);
  EXPECT_EQ(j["budget"]["epsilon_beta"].get<double>(), r.epsilon_beta);
  EXPECT_EQ(j["budget"]["beta"].get<double>(), r.beta);
  EXPECT_EQ(j["budget"]["n_beta"].get<int>(), r.n_beta);
  EXPECT_EQ(j["budget"]["T_beta"].get<double>(), r.t_beta);
  EXPECT_EQ(j["budget"]["runtime_total"].get<double>(), r.runtime_total);
  EXPECT_EQ(j["budget"]["fidelity_bound"].get<double>(), r.fidelity_bound);

  Polynomial poly;
  poly.terms.push_back({2.0, 1.0, 1.0});
  poly.terms.push_back({1.0, 0.0, 2.0});
  const FailureBound f = failure_probability_bound(7, 32, poly);
  EXPECT_EQ(j["failure"]["poly_value"].get<double>(), 2.0 * 32 * 7 + 49);
  EXPECT_EQ(j["failure"]["bound"].get<double>(), f.bound);
  EXPECT_EQ(j["log_convention"], "natural");
}

TEST_F(CliTest, AmplifyStepProbabilitiesExceedOneHalf) {
  ASSERT_EQ(run("amplify --k-amp 3 --m 6 --out a.json"), 0);
  const json j = load("a.json");
  ASSERT_EQ(j["runs"].size(), 1U);
  const auto probs = j["runs"][0]["step_probabilities"].get<std::vector<double>>();
  const auto pred = j["runs"][0]["predicted_probabilities"].get<std::vector<double>>();
  ASSERT_EQ(probs.size(), 6U);
  for (std::size_t i = 0; i < probs.size(); ++i) {
    EXPECT_GT(probs[i], 0.5);
    EXPECT_NEAR(probs[i], pred[i], 1e-12);
  }
  EXPECT_EQ(run("amplify --mode sideways --out z.json"), 1);
}

TEST_F(CliTest, AmplifyBothModesReportsGap) {
  ASSERT_EQ(run("amplify --k-amp 2 --m 3 --mode both --beta 5 --dtau 0.05 --out a.json"), 0);
  const json j = load("a.json");
  ASSERT_EQ(j["runs"].size(), 2U);
  EXPECT_EQ(j["runs"][0]["mode"], "exact");
  EXPECT_EQ(j["runs"][1]["mode"], "dqite");
  EXPECT_LT(j["final_fidelity_gap"].get<double>(), 1e-2);
}

TEST_F(CliTest, ManifestArgvReproducesOutput) {
  ASSERT_EQ(run("record --n 8 --layers 5 --p 0.4 --family clifford --seed 77 --out t.traj.json"), 0);
  const json m = load("t.traj.json.manifest.json");
  EXPECT_EQ(m["command"], "record");
  EXPECT_EQ(m["master_seed"], 77);
  EXPECT_EQ(m["outputs"][0], "t.traj.json");
  EXPECT_EQ(m["parameters"]["n"], 8);
  ASSERT_TRUE(m["wall_clock_seconds"].is_number());

  const std::string first = slurp("t.traj.json");
  fs::remove(path("t.traj.json"));
  const auto argv = m["argv"].get<std::vector<std::string>>();
  ASSERT_GE(argv.size(), 2U);
  std::string args;
  for (std::size_t i = 1; i < argv.size(); ++i) args += "'" + argv[i] + "' ";
  ASSERT_EQ(run(args), 0);
  EXPECT_EQ(slurp("t.traj.json"), first);
}

TEST_F(CliTest, NoTemporaryFilesRemain) {
  ASSERT_EQ(run("bounds --out b.json"), 0);
  for (const auto& e : fs::directory_iterator(dir_)) {
    EXPECT_EQ(e.path().string().find(".tmp"), std::string::npos) << e.path();
  }
}

TEST_F(CliTest, CliffordCacheIsCreatedAndReused) {
  const std::string cache = path("clifford.cache.json");
  const std::string env = "MIPT_TRAJ_CACHE='" + cache + "'";
  ASSERT_EQ(run("record --n 8 --layers 4 --p 0.3 --seed 5 --out a.traj.json", env), 0);
  ASSERT_TRUE(fs::exists(cache));
  const json c = load("clifford.cache.json");
  EXPECT_EQ(c["words"].size(), 11520U);
  const auto stamp = fs::last_write_time(cache);
  const std::string text = slurp("clifford.cache.json");

  ASSERT_EQ(run("record --n 8 --layers 4 --p 0.3 --seed 5 --out b.traj.json", env), 0);
  EXPECT_EQ(fs::last_write_time(cache), stamp);
  EXPECT_EQ(slurp("clifford.cache.json"), text);
  EXPECT_EQ(slurp("a.traj.json"), slurp("b.traj.json"));

  ASSERT_EQ(run("record --n 8 --layers 4 --p 0.3 --seed 5 --out c.traj.json"), 0);
  EXPECT_EQ(slurp("a.traj.json"), slurp("c.traj.json"));

  {
    std::ofstream out(cache, std::ios::trunc);
    out << "{\"format_version\":1,\"words\":[]}";
  }
  ASSERT_EQ(run("record --n 8 --layers 4 --p 0.3 --seed 5 --out d.traj.json", env), 0);
  EXPECT_EQ(slurp("a.traj.json"), slurp("d.traj.json"));
  EXPECT_EQ(slurp("clifford.cache.json"), text);
}

}  // namespace
}  // namespace mipt
