// Copyright 2026 The Authors.
//
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

#include "infogame/experiment.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "infogame/io.h"

namespace infogame {
namespace {

namespace fs = std::filesystem;

fs::path TempDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("infogame_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExperimentConfig Small(const std::string& experiment, const fs::path& out) {
  Json j = {{"experiment", experiment},
            {"seed", 7},
            {"class", {{"generator", "thresholds"}, {"n", 4}}},
            {"m", 2},
            {"eps", 0.25},
            {"output_dir", out.string()}};
  if (experiment == "generalize") {
    j["trials"] = 300;
    j["m_values"] = {2, 4};
  }
  if (experiment == "stability") {
    j["pairs"] = 5;
    j["shift_trials"] = 200;
  }
  if (experiment == "worst-vs-average") {
    j["eps"] = 0.0;
    j["sizes"] = {4, 8};
    j["grid_size"] = 20;
    j["pool_size"] = 60;
  }
  if (experiment == "minimax-solve") j["class"]["n"] = 3;
  return ConfigFromJson(j, fs::current_path());
}

struct CommandResult {
  int status;
  std::string output;
};

CommandResult Shell(const std::string& command) {
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

class ExperimentRunTest : public ::testing::TestWithParam<std::string> {};

TEST_P(ExperimentRunTest, ByteIdenticalAcrossRunsAndChecksPass) {
  const fs::path a = TempDir(GetParam() + "_a");
  const fs::path b = TempDir(GetParam() + "_b");
  const RunOutcome first = infogame::Run(Small(GetParam(), a));
  const RunOutcome second = infogame::Run(Small(GetParam(), b));
  ASSERT_EQ(first.exit_code, 0) << first.report.dump(2);
  ASSERT_EQ(second.exit_code, 0);
  EXPECT_TRUE(first.report["all_pass"].get<bool>()) << first.report["checks"].dump(2);
  EXPECT_EQ(Slurp(first.report_path), Slurp(second.report_path));
  EXPECT_EQ(Slurp(first.table_path), Slurp(second.table_path));
  EXPECT_FALSE(Slurp(first.table_path).empty());
  EXPECT_EQ(Slurp(first.report_path), DumpReport(first.report));
}

INSTANTIATE_TEST_SUITE_P(AllExperiments, ExperimentRunTest,
                         ::testing::Values("nets-demo", "cover", "minimax-solve",
                                           "worst-vs-average", "stability",
                                           "generalize"),
                         [](const auto& info) {
                           std::string name = info.param;
                           std::erase(name, '-');
                           return name;
                         });

TEST(ConfigTest, MissingSeedIsAConfigError) {
  ExperimentConfig cfg = Small("nets-demo", TempDir("noseed"));
  cfg.seed.reset();
  const RunOutcome out = infogame::Run(cfg);
  EXPECT_NE(out.exit_code, 0);
  EXPECT_EQ(out.report["error"]["field"], "seed");
  EXPECT_EQ(out.report["error"]["kind"], "config");
}

TEST(ConfigTest, UnknownKeysAndBadTypesAreRejected) {
  EXPECT_THROW(ConfigFromJson({{"experiment", "cover"}, {"sed", 1}}, "."), InputError);
  try {
    ConfigFromJson({{"experiment", "cover"}, {"m", "two"}}, ".");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.field(), "m");
  }
}

TEST(ConfigTest, ShippedConfigsValidateClean) {
  for (const auto& entry : fs::directory_iterator(fs::path(INFOGAME_SOURCE_DIR) / "configs")) {
    const std::vector<Diagnostic> d = Validate(LoadConfig(entry.path()));
    for (const Diagnostic& diag : d) {
      // The average-game configs use eps = 0 on purpose.
      EXPECT_EQ(diag.level, Diagnostic::Level::kWarning) << entry.path() << ": " << diag.message;
    }
    EXPECT_FALSE(HasErrors(d)) << entry.path();
  }
}

TEST(ConfigTest, ZeroEpsWarnsForTheNetsLearner) {
  ExperimentConfig cfg = Small("nets-demo", TempDir("eps0"));
  cfg.eps = 0.0;
  const std::vector<Diagnostic> d = Validate(cfg);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].level, Diagnostic::Level::kWarning);
  EXPECT_EQ(d[0].field, "eps");
}

TEST(ConfigTest, EnumerationBudgetIsEnforced) {
  ExperimentConfig cfg = Small("nets-demo", TempDir("budget"));
  cfg.class_spec = {{"generator", "thresholds"}, {"n", 64}};
  cfg.m = 12;
  const std::vector<Diagnostic> d = Validate(cfg);
  ASSERT_TRUE(HasErrors(d));
  bool found = false;
  for (const Diagnostic& diag : d) found = found || diag.field == "m";
  EXPECT_TRUE(found);
}

TEST(ConfigTest, BadInputFilesReportTheField) {
  ExperimentConfig cfg = Small("nets-demo", TempDir("badfile"));
  cfg.marginal = {{"file", "/nonexistent/marginal.json"}};
  const RunOutcome out = infogame::Run(cfg);
  EXPECT_EQ(out.exit_code, 2);
  EXPECT_EQ(out.report["error"]["field"], "marginal.file");
}

TEST(CliTest, SubcommandsAndErrors) {
  const std::string cli = INFOGAME_CLI_PATH;
  const fs::path dir = TempDir("cli");
  const CommandResult ok = Shell(cli + " cover --class thresholds:8 --seed 1 --eps 0.25 --out " +
                                 dir.string());
  EXPECT_EQ(ok.status, 0) << ok.output;
  const Json report = Json::parse(ok.output);
  EXPECT_TRUE(report["all_pass"].get<bool>());
  EXPECT_TRUE(fs::exists(dir / "cover.json"));
  EXPECT_TRUE(fs::exists(dir / "cover.csv"));

  const CommandResult noseed =
      Shell(cli + " nets-demo --class thresholds:4 --out " + dir.string());
  EXPECT_NE(noseed.status, 0);
  EXPECT_EQ(Json::parse(noseed.output)["error"]["field"], "seed");

  const CommandResult validate = Shell(cli + " validate --config " +
                                       (fs::path(INFOGAME_SOURCE_DIR) / "configs" /
                                        "nets_demo.json").string());
  EXPECT_EQ(validate.status, 0);
  EXPECT_EQ(Json::parse(validate.output)["diagnostics"], Json::array());

  const CommandResult env = Shell("INFOGAME_OUT_DIR=" + (dir / "env").string() + " " + cli +
                                  " cover --class thresholds:4 --seed 1 --eps 0.5");
  EXPECT_EQ(env.status, 0);
  EXPECT_TRUE(fs::exists(dir / "env" / "cover.json"));
}

}  // namespace
}  // namespace infogame
