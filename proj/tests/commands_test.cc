// Copyright 2026 The opcost Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "opcost/commands.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "opcost/io.h"

namespace opcost {
namespace {

namespace fs = std::filesystem;

struct CommandRun {
  int status;
  std::string out;
  std::string err;
};

CommandRun Execute(const std::string& command, const KeyValueConfig& config,
            const std::string& base_dir = "") {
  std::ostringstream out, err;
  const int status = RunCommand(command, config, base_dir, out, err);
  return {status, out.str(), err.str()};
}

KeyValueConfig Config(std::initializer_list<std::pair<const char*, const char*>> items) {
  KeyValueConfig c;
  for (const auto& [k, v] : items) c.Set(k, v);
  return c;
}

fs::path FreshDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("opcost_cmd_" + name);
  fs::remove_all(dir);
  return dir;
}

TEST(CommandsTest, CountSmallBall) {
  const CommandRun r = Execute("count", Config({{"p", "2"}, {"K", "2"}}));
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "13\n");
}

TEST(CommandsTest, CountWithIntegerConstraint) {
  const CommandRun r = Execute("count", Config({{"p", "1"}, {"K", "1"}, {"integer_constraints", "10 <= 1"}}));
  EXPECT_EQ(r.out, "2\n");
}

TEST(CommandsTest, UnknownKeyRejected) {
  const CommandRun r = Execute("count", Config({{"p", "2"}, {"K", "2"}, {"kk", "3"}}));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("kk"), std::string::npos);
  EXPECT_EQ(r.err.rfind("error: ", 0), 0u);
}

TEST(CommandsTest, UnknownCommandRejected) {
  EXPECT_EQ(Execute("plot", KeyValueConfig{}).status, 1);
}

TEST(CommandsTest, StochasticCommandsNeedSeed) {
  const CommandRun r = Execute("gen", Config({{"scenario", "scheduling"}, {"output_dir", "/tmp/x"}}));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("seed"), std::string::npos);
}

TEST(CommandsTest, GenThenSweepProducesOneRowPerGridPoint) {
  const fs::path dir = FreshDir("sweep");
  ASSERT_EQ(Execute("gen", Config({{"scenario", "scheduling"}, {"seed", "3"},
                                   {"output_dir", dir.c_str()}}))
                .status,
            0);
  KeyValueConfig cfg = KeyValueConfig::Load((dir / "scenario.cfg").string());
  cfg.Set("seed", "1");
  cfg.Set("c1_points", "5");
  const CommandRun first = Execute("sweep", cfg, dir.string());
  ASSERT_EQ(first.status, 0) << first.err;
  std::istringstream in(first.out);
  const Table t = ParseTable(in, "sweep");
  EXPECT_EQ(t.values.rows(), 5);
  EXPECT_EQ(t.header[0], "c1");
  EXPECT_EQ(t.header[5], "r2_test");
  EXPECT_EQ(t.header.back(), "beta_2");
  EXPECT_EQ(Execute("sweep", cfg, dir.string()).out, first.out);
}

TEST(CommandsTest, FitWritesOutputFile) {
  const fs::path dir = FreshDir("fit");
  ASSERT_EQ(Execute("gen", Config({{"scenario", "housing"}, {"seed", "5"},
                                   {"output_dir", dir.c_str()}, {"n_train", "60"}}))
                .status,
            0);
  KeyValueConfig cfg = KeyValueConfig::Load((dir / "scenario.cfg").string());
  cfg.Set("seed", "2");
  cfg.Set("c1", "0.5");
  cfg.Set("output", "fit.csv");
  const CommandRun r = Execute("fit", cfg, dir.string());
  ASSERT_EQ(r.status, 0) << r.err;
  const Table t = LoadTable((dir / "fit.csv").string());
  EXPECT_EQ(t.values.rows(), 1);
  EXPECT_EQ(t.values(0, 0), 0.5);
}

TEST(CommandsTest, BoundWithUnitConfidenceOnZeroSample) {
  const fs::path dir = FreshDir("bound");
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "zero.csv");
    out << "x1,x2\n0,0\n0,0\n0,0\n";
  }
  const CommandRun r = Execute("bound", Config({{"sample", "zero.csv"}, {"b_bound", "1"},
                                         {"delta", "1"}, {"x_bound", "1"}}),
                        dir.string());
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("# final_bound_excess = 0\n"), std::string::npos) << r.out;
}

TEST(CommandsTest, RoCheckOnDemo) {
  const fs::path dir = FreshDir("ro");
  ASSERT_EQ(Execute("gen", Config({{"scenario", "ro-demo"}, {"seed", "1"},
                                   {"output_dir", dir.c_str()}}))
                .status,
            0);
  KeyValueConfig cfg = KeyValueConfig::Load((dir / "scenario.cfg").string());
  cfg.Set("seed", "1");
  cfg.Set("c1", "1");
  cfg.Set("pi_resolution", "51");
  cfg.Set("beta_resolution", "51");
  const CommandRun r = Execute("rocheck", cfg, dir.string());
  ASSERT_EQ(r.status, 0) << r.err;
  std::istringstream in(r.out);
  const Table t = ParseTable(in, "rocheck");
  EXPECT_EQ(t.values(0, t.Column("claimed")), 1.0);
}

TEST(CommandsTest, ProblemConfigRoundTrip) {
  KeyValueConfig cfg = Config({{"problem", "scheduling"}});
  const OpCostProblem p = ProblemFromConfig(cfg);
  KeyValueConfig written;
  ProblemToConfig(p, written);
  const OpCostProblem back = ProblemFromConfig(written);
  const auto& a = std::get<PrecedenceDag>(p.spec);
  const auto& b = std::get<PrecedenceDag>(back.spec);
  ASSERT_EQ(a.edges.size(), b.edges.size());
  for (size_t k = 0; k < a.edges.size(); ++k) {
    EXPECT_EQ(a.edges[k].from, b.edges[k].from);
    EXPECT_EQ(a.edges[k].to, b.edges[k].to);
    EXPECT_EQ(a.edges[k].instance, b.edges[k].instance);
  }
  KeyValueConfig staffing = Config({{"problem", "staffing"}});
  KeyValueConfig staffing_written;
  ProblemToConfig(ProblemFromConfig(staffing), staffing_written);
  EXPECT_EQ(std::get<StaffingSpec>(ProblemFromConfig(staffing_written).spec).coverage,
            StaffingSpec::CallCenter().coverage);
}

}  // namespace
}  // namespace opcost
