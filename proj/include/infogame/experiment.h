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

#ifndef INFOGAME_EXPERIMENT_H_
#define INFOGAME_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "infogame/io.h"

namespace infogame {

// Upper limit on m * log2(n) * |C| for experiments that enumerate samples.
inline constexpr double kEnumerationBudget = 4096.0;

// A parsed experiment description. Experiment-specific fields are ignored by
// the other kinds.
struct ExperimentConfig {
  std::string experiment;  // nets-demo | minimax-solve | worst-vs-average |
                           // stability | generalize | cover
  std::optional<std::uint64_t> seed;
  Json class_spec = Json{{"generator", "thresholds"}, {"n", 8}};
  Json prior = "uniform";
  Json marginal = "uniform";
  Json nature = "symmetric";
  int m = 2;
  double eps = 0.25;
  double tol = 1e-3;
  int max_iter = 100000;
  double learner_step = 2.0;
  double nature_step = 2.0;
  std::string cover = "exact";
  std::vector<double> radii;       // cover; defaults to {eps}
  std::vector<int> sizes;          // worst-vs-average: domain sizes
  int grid_size = 20;              // worst-vs-average
  int pool_size = 500;             // worst-vs-average
  double worst_tol = 1e-2;         // worst-vs-average
  double worst_step = 10.0;        // worst-vs-average
  int pairs = 50;                  // stability
  int shift_trials = 0;            // stability; 0 skips the shift check
  double tilt = 0.2;               // stability
  std::vector<int> m_values;       // generalize; defaults to {m}
  int trials = 10000;              // generalize
  double delta = 0.1;              // generalize
  std::filesystem::path output_dir = ".";
  std::string report = "";         // defaults to <experiment>.json
  std::string table = "";          // defaults to <experiment>.csv
  std::filesystem::path base_dir = ".";  // resolves relative input paths
};

struct Diagnostic {
  enum class Level { kError, kWarning };
  Level level = Level::kError;
  std::string field;
  std::string message;
};

// Throws InputError on malformed JSON types or unknown keys.
ExperimentConfig ConfigFromJson(const Json& j,
                                const std::filesystem::path& base_dir);
ExperimentConfig LoadConfig(const std::filesystem::path& path);

// Schema and range checks without running anything. Empty means runnable;
// warnings alone do not block a run.
std::vector<Diagnostic> Validate(const ExperimentConfig& config);
bool HasErrors(const std::vector<Diagnostic>& diagnostics);
Json ToJson(const std::vector<Diagnostic>& diagnostics);

struct RunOutcome {
  int exit_code = 0;
  Json report;  // the report, or {"error": {...}} on failure
  std::filesystem::path report_path;
  std::filesystem::path table_path;
};

// Validates, runs and writes the JSON report and CSV table. The output
// directory is config.output_dir unless INFOGAME_OUT_DIR is set. The report
// is a function of the config: floats carry 12 significant digits and no
// timing is recorded.
RunOutcome Run(const ExperimentConfig& config);

// {"error": {"kind": ..., "field": ..., "message": ...}}
Json ErrorObject(const std::string& kind, const std::string& field,
                 const std::string& message);

// Serialized report text: two-space indented JSON and a trailing newline.
std::string DumpReport(const Json& report);

}  // namespace infogame

#endif  // INFOGAME_EXPERIMENT_H_
