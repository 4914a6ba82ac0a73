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

// Command-line front end for the experiment runner.
//
//   infogame run --config configs/nets_demo.json
//   infogame validate --config configs/nets_demo.json
//   infogame minimax-solve --class thresholds:3 --m 2 --eps 0 --seed 1
//
// Every subcommand prints its JSON report (or an error object) to stdout.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "infogame/experiment.h"

namespace {

using infogame::Json;

// "thresholds:8", "cube:3", "random:n:count:seed" or a JSON file path.
Json ClassSpec(const std::string& text) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  const std::string& name = parts[0];
  try {
    if ((name == "thresholds" || name == "cube") && parts.size() == 2) {
      return {{"generator", name}, {"n", std::stoi(parts[1])}};
    }
    if (name == "random" && parts.size() == 4) {
      return {{"generator", name},
              {"n", std::stoi(parts[1])},
              {"count", std::stoi(parts[2])},
              {"seed", std::stoull(parts[3])}};
    }
  } catch (const std::exception&) {
    throw infogame::InputError("class", "malformed generator '" + text + "'");
  }
  return {{"file", text}};
}

// "uniform" or a JSON file path.
Json NamedOrFile(const std::string& text, const char* keyword) {
  if (text == keyword) return text;
  return {{"file", text}};
}

struct Flags {
  std::string class_text = "thresholds:8";
  std::string prior = "uniform";
  std::string marginal = "uniform";
  std::string set = "symmetric";
  std::optional<std::uint64_t> seed;
  std::optional<int> m;
  std::optional<double> eps;
  std::optional<double> tol;
  std::optional<int> max_iter;
  std::optional<std::string> cover;
  std::vector<double> radii;
  std::vector<int> sizes;
  std::optional<int> grid_size;
  std::optional<int> pool_size;
  std::optional<double> worst_tol;
  std::optional<int> pairs;
  std::optional<double> tilt;
  std::optional<int> shift_trials;
  std::vector<int> m_values;
  std::optional<int> trials;
  std::optional<double> delta;
  std::string out = ".";
};

template <typename T>
void Put(Json& j, const char* key, const std::optional<T>& v) {
  if (v.has_value()) j[key] = *v;
}

Json ConfigJson(const std::string& experiment, const Flags& f) {
  Json j = {{"experiment", experiment},
            {"class", ClassSpec(f.class_text)},
            {"prior", NamedOrFile(f.prior, "uniform")},
            {"marginal", NamedOrFile(f.marginal, "uniform")},
            {"output_dir", f.out}};
  if (f.set == "symmetric") {
    j["nature"] = "symmetric";
  } else if (f.set.rfind("hull:", 0) == 0) {
    j["nature"] = {{"hull_file", f.set.substr(5)}};
  } else {
    throw infogame::InputError("set", "expected symmetric or hull:FILE");
  }
  Put(j, "seed", f.seed);
  Put(j, "m", f.m);
  Put(j, "eps", f.eps);
  Put(j, "tol", f.tol);
  Put(j, "max_iter", f.max_iter);
  Put(j, "cover", f.cover);
  Put(j, "grid_size", f.grid_size);
  Put(j, "pool_size", f.pool_size);
  Put(j, "worst_tol", f.worst_tol);
  Put(j, "pairs", f.pairs);
  Put(j, "tilt", f.tilt);
  Put(j, "shift_trials", f.shift_trials);
  Put(j, "trials", f.trials);
  Put(j, "delta", f.delta);
  if (!f.radii.empty()) j["radii"] = f.radii;
  if (!f.sizes.empty()) j["sizes"] = f.sizes;
  if (!f.m_values.empty()) j["m_values"] = f.m_values;
  return j;
}

int Emit(const Json& report, int code) {
  std::cout << infogame::DumpReport(report);
  return code;
}

int RunConfig(const infogame::ExperimentConfig& config) {
  const infogame::RunOutcome outcome = infogame::Run(config);
  return Emit(outcome.report, outcome.exit_code);
}

void AddCommon(CLI::App* cmd, Flags& f) {
  cmd->add_option("--class", f.class_text,
                  "class file, or thresholds:N | cube:N | random:N:COUNT:SEED")
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "random seed (required)");
  cmd->add_option("--m", f.m, "sample size");
  cmd->add_option("--eps", f.eps, "empirical error allowance / cover radius");
  cmd->add_option("--out", f.out,
                  "output directory (INFOGAME_OUT_DIR overrides)")
      ->capture_default_str();
}

void AddMarginal(CLI::App* cmd, Flags& f) {
  cmd->add_option("--marginal", f.marginal, "uniform, or a distribution file")
      ->capture_default_str();
  cmd->add_option("--cover", f.cover, "exact | greedy");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information complexity experiments on finite hypothesis classes"};
  app.require_subcommand(1);
  std::string config_path;
  Flags f;

  auto* run = app.add_subcommand("run", "run an experiment config");
  run->add_option("--config", config_path, "experiment config (JSON)")->required();
  auto* validate = app.add_subcommand("validate", "check a config without running it");
  validate->add_option("--config", config_path, "experiment config (JSON)")->required();

  auto* nets = app.add_subcommand("nets-demo", "audit the nets learner per hypothesis");
  AddCommon(nets, f);
  AddMarginal(nets, f);

  auto* cover = app.add_subcommand("cover", "greedy and exact covers vs Haussler's bound");
  AddCommon(cover, f);
  AddMarginal(cover, f);
  cover->add_option("--radii", f.radii, "cover radii (default: eps)");

  auto* minimax = app.add_subcommand("minimax-solve", "solve the average information game");
  AddCommon(minimax, f);
  minimax->add_option("--prior", f.prior, "uniform, or a prior file")->capture_default_str();
  minimax->add_option("--set", f.set, "symmetric | hull:FILE")->capture_default_str();
  minimax->add_option("--tol", f.tol, "target duality gap (bits)");
  minimax->add_option("--max-iter", f.max_iter, "mirror-prox iterations");
  minimax->add_option("--cover", f.cover, "cover mode for the nets bound");

  auto* worst = app.add_subcommand("worst-vs-average",
                                   "worst-case game probe against the average game");
  AddCommon(worst, f);
  worst->add_option("--sizes", f.sizes, "domain sizes to sweep");
  worst->add_option("--grid-size", f.grid_size, "nature grid size");
  worst->add_option("--pool-size", f.pool_size, "candidate pool for the grid");
  worst->add_option("--tol", f.tol, "average game duality gap (bits)");
  worst->add_option("--worst-tol", f.worst_tol, "worst-case game duality gap (bits)");
  worst->add_option("--max-iter", f.max_iter, "mirror-prox iterations");

  auto* stability = app.add_subcommand("stability", "prior-shift inequalities");
  AddCommon(stability, f);
  AddMarginal(stability, f);
  stability->add_option("--pairs", f.pairs, "random (P, Q) pairs");
  stability->add_option("--tilt", f.tilt, "mass moved in the tilt case");
  stability->add_option("--shift-trials", f.shift_trials,
                        "Monte Carlo trials per h for the shift check (0 skips)");
  stability->add_option("--delta", f.delta, "reporting cut");

  auto* generalize = app.add_subcommand("generalize", "Monte Carlo generalization experiment");
  AddCommon(generalize, f);
  AddMarginal(generalize, f);
  generalize->add_option("--prior", f.prior, "uniform, or a prior file")->capture_default_str();
  generalize->add_option("--m-values", f.m_values, "sample sizes to sweep");
  generalize->add_option("--trials", f.trials, "trials per hypothesis");
  generalize->add_option("--delta", f.delta, "reporting cut on per-h failure");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return RunConfig(infogame::LoadConfig(config_path));
    if (validate->parsed()) {
      const auto diagnostics = infogame::Validate(infogame::LoadConfig(config_path));
      return Emit({{"diagnostics", infogame::ToJson(diagnostics)}},
                  infogame::HasErrors(diagnostics) ? 2 : 0);
    }
    for (CLI::App* cmd : app.get_subcommands()) {
      const Json j = ConfigJson(cmd->get_name(), f);
      return RunConfig(infogame::ConfigFromJson(j, std::filesystem::current_path()));
    }
  } catch (const infogame::InputError& e) {
    return Emit(infogame::ErrorObject("input", e.field(), e.what()), 2);
  } catch (const std::exception& e) {
    return Emit(infogame::ErrorObject("runtime", "", e.what()), 1);
  }
  return 0;
}
