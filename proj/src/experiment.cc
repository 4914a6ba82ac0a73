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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "infogame/analysis.h"
#include "infogame/minimax.h"
#include "infogame/nets.h"
#include "infogame/rng.h"

namespace infogame {

namespace fs = std::filesystem;

namespace {

const std::set<std::string> kExperiments = {
    "nets-demo", "minimax-solve", "worst-vs-average",
    "stability", "generalize",    "cover"};

// Experiments that enumerate the sample space of every hypothesis.
bool Enumerates(const std::string& kind) {
  return kind == "nets-demo" || kind == "minimax-solve" ||
         kind == "worst-vs-average" || kind == "stability";
}

// Experiments driven by the nets learner, which tolerates empirical error.
bool UsesNets(const std::string& kind) {
  return kind == "nets-demo" || kind == "stability" || kind == "generalize";
}

// The nets cascade needs a positive base radius. With eps = 0 the learner
// still only accepts consistent hypotheses; the covers start at radius 1/2.
double NetBase(double eps) { return eps > 0.0 ? eps : 1.0; }

template <typename T>
void Read(const Json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw InputError(key, "field has the wrong type");
  }
}

std::string Format(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

class Csv {
 public:
  explicit Csv(std::vector<std::string> header) {
    AddRow(std::move(header));
  }
  void AddRow(std::vector<std::string> cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      out_ << (i == 0 ? "" : ",") << cells[i];
    }
    out_ << "\n";
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

std::string Bool(bool b) { return b ? "true" : "false"; }

// Every reported inequality carries both sides and a verdict.
class Checks {
 public:
  void Add(const std::string& name, double lhs, double rhs, bool pass) {
    list_.push_back({{"name", name}, {"lhs", lhs}, {"rhs", rhs},
                     {"pass", pass ? "pass" : "fail"}});
    all_ &= pass;
  }
  bool all() const { return all_; }
  Json json() const { return list_; }

 private:
  Json list_ = Json::array();
  bool all_ = true;
};

struct Output {
  Json results;
  Checks checks;
  std::string table;
};

Json WithN(const Json& spec, int n) {
  Json out = spec;
  out["n"] = n;
  return out;
}

CoverMode Mode(const ExperimentConfig& cfg) {
  try {
    return ParseCoverMode(cfg.cover);
  } catch (const std::invalid_argument& e) {
    throw InputError("cover", e.what());
  }
}

Output NetsDemo(const ExperimentConfig& cfg) {
  const HypothesisClass c = ClassFromJson(cfg.class_spec, cfg.base_dir);
  const DistributionOverX d =
      DistributionFromJson(cfg.marginal, c.domain_size(), cfg.base_dir, "marginal");
  const SymmetricSampleDistribution x = IidToSymmetric(d, cfg.m);
  const NetSequence seq = BuildNetSequence(c, d, NetBase(cfg.eps), Mode(cfg));
  const int vc = VcDimension(c);
  Output out;
  Json stages = Json::array();
  for (const EpsilonNet& net : seq.nets()) {
    const double bound = HausslerBound(net.radius, vc);
    const int size = static_cast<int>(net.members.size());
    stages.push_back({{"radius", net.radius}, {"size", size},
                      {"haussler_bound", bound}});
    out.checks.Add("haussler r=" + Format(net.radius), size, bound,
                   size <= bound);
  }
  Csv csv({"h", "information", "output_entropy", "stop_entropy", "size_term",
           "bound", "chain_ok", "tail_ok", "identity_ok"});
  Json per_h = Json::array();
  for (int h = 0; h < c.size(); ++h) {
    const StoppingReport r = MakeStoppingReport(seq, c, x, h, cfg.eps);
    per_h.push_back({{"h", h},
                     {"output", r.hypothesis},
                     {"information", r.information},
                     {"output_entropy", r.output_entropy},
                     {"stop_entropy", r.stop_entropy},
                     {"size_term", r.size_term},
                     {"bound", r.bound()},
                     {"stop_pmf", r.stop_pmf},
                     {"stage_sizes", r.stage_sizes}});
    const std::string tag = " h=" + std::to_string(h);
    out.checks.Add("entropy chain" + tag, r.information, r.bound(), r.chain_ok);
    double excess = 0.0;
    for (size_t j = 1; j < r.stop_pmf.size(); ++j) {
      excess = std::max(excess, r.stop_pmf[j] - std::ldexp(1.0, -static_cast<int>(j)));
    }
    out.checks.Add("stopping tail" + tag, excess, 0.0, r.tail_ok);
    out.checks.Add("I = H(A(S))" + tag, r.information, r.output_entropy,
                   r.identity_ok);
    csv.AddRow({std::to_string(h), Format(r.information), Format(r.output_entropy),
                Format(r.stop_entropy), Format(r.size_term), Format(r.bound()),
                Bool(r.chain_ok), Bool(r.tail_ok), Bool(r.identity_ok)});
  }
  out.results = {{"vc_dimension", vc},
                 {"base_radius", seq.base_epsilon()},
                 {"stages", stages},
                 {"fallback_size", seq.fallback().members.size()},
                 {"per_hypothesis", per_h}};
  out.table = csv.str();
  return out;
}

Output Cover(const ExperimentConfig& cfg) {
  const HypothesisClass c = ClassFromJson(cfg.class_spec, cfg.base_dir);
  const DistributionOverX d =
      DistributionFromJson(cfg.marginal, c.domain_size(), cfg.base_dir, "marginal");
  const std::vector<double> radii =
      cfg.radii.empty() ? std::vector<double>{cfg.eps} : cfg.radii;
  const bool exact = c.size() <= kMaxExactCoverClassSize;
  const int vc = VcDimension(c);
  Output out;
  Csv csv({"radius", "greedy_size", "exact_size", "haussler_bound"});
  Json rows = Json::array();
  for (double r : radii) {
    const int greedy = static_cast<int>(GreedyCover(c, d, r).members.size());
    const double bound = HausslerBound(r, vc);
    Json row = {{"radius", r}, {"greedy_size", greedy}, {"haussler_bound", bound}};
    std::string exact_cell;
    if (exact) {
      const int best = static_cast<int>(ExactMinimalCover(c, d, r).members.size());
      row["exact_size"] = best;
      exact_cell = std::to_string(best);
      out.checks.Add("haussler r=" + Format(r), best, bound, best <= bound);
      out.checks.Add("greedy >= exact r=" + Format(r), greedy, best, greedy >= best);
    } else {
      out.checks.Add("haussler r=" + Format(r), greedy, bound, greedy <= bound);
    }
    rows.push_back(row);
    csv.AddRow({Format(r), std::to_string(greedy), exact_cell, Format(bound)});
  }
  out.results = {{"vc_dimension", vc}, {"covers", rows}};
  out.table = csv.str();
  return out;
}

SaddleOptions Options(const ExperimentConfig& cfg) {
  SaddleOptions o;
  o.tol = cfg.tol;
  o.max_iter = cfg.max_iter;
  o.learner_step = cfg.learner_step;
  o.nature_step = cfg.nature_step;
  return o;
}

// Prior-averaged nets audit bound H(J) + sum_j P(J=j) log2 |N_j| with the
// covers built for the marginal of `x`.
double NetsBound(const HypothesisClass& c, const Prior& prior,
                 const SymmetricSampleDistribution& x, double eps,
                 CoverMode mode) {
  const DistributionOverX d = Marginal(x);
  const NetSequence seq = BuildNetSequence(c, d, NetBase(eps), mode);
  double total = 0.0;
  for (int h = 0; h < c.size(); ++h) {
    if (prior[h] > 0.0) {
      total += prior[h] * MakeStoppingReport(seq, c, x, h, eps).bound();
    }
  }
  return total;
}

Output MinimaxSolve(const ExperimentConfig& cfg) {
  const HypothesisClass c = ClassFromJson(cfg.class_spec, cfg.base_dir);
  const Prior prior = PriorFromJson(cfg.prior, c.size(), cfg.base_dir);
  const NatureStrategySet set =
      NatureFromJson(cfg.nature, c.domain_size(), cfg.m, cfg.base_dir);
  const SaddleResult r = SolveSaddle(c, prior, cfg.eps, set, Options(cfg));
  Output out;
  out.checks.Add("duality gap <= tol", r.gap, cfg.tol, r.gap <= cfg.tol);
  const double spread = std::abs(r.max_min - r.min_max);
  out.checks.Add("|max-min - min-max| <= 2 tol", spread, 2.0 * cfg.tol,
                 spread <= 2.0 * cfg.tol);

  std::vector<SymmetricSampleDistribution> vertices;
  if (set.kind == NatureStrategySet::Kind::kFullSymmetric) {
    vertices = SymmetricVertices(c.domain_size(), cfg.m);
  } else {
    for (const DistributionOverX& g : set.generators) {
      vertices.push_back(IidToSymmetric(g, cfg.m));
    }
  }
  const AverageComplexity sweep =
      AverageInformationComplexity(c, prior, r.learner, vertices);
  out.checks.Add("vertex sweep <= value + tol", sweep.value, r.value + cfg.tol,
                 sweep.value <= r.value + cfg.tol);
  out.checks.Add("nature best response <= value + tol", r.min_max,
                 r.value + cfg.tol, r.min_max <= r.value + cfg.tol);
  Csv csv({"vertex", "average_information", "nets_bound"});
  double nets_max = 0.0;
  for (size_t k = 0; k < vertices.size(); ++k) {
    const double bound = NetsBound(c, prior, vertices[k], cfg.eps, Mode(cfg));
    nets_max = std::max(nets_max, bound);
    csv.AddRow({std::to_string(k), Format(sweep.per_vertex[k]), Format(bound)});
  }
  out.checks.Add("value <= max vertex nets bound + tol", r.value,
                 nets_max + cfg.tol, r.value <= nets_max + cfg.tol);
  out.results = {{"value", r.value},
                 {"max_min", r.max_min},
                 {"min_max", r.min_max},
                 {"gap", r.gap},
                 {"iterations", r.iterations},
                 {"converged", r.converged},
                 {"vertex_sweep_max", sweep.value},
                 {"vertex_sweep_argmax", sweep.argmax},
                 {"nets_bound_max", nets_max},
                 {"nature", ToJson(r.nature)},
                 {"nature_weights", r.nature_weights},
                 {"learner", ToJson(r.learner)}};
  out.table = csv.str();
  return out;
}

Output WorstVsAverage(const ExperimentConfig& cfg) {
  const std::vector<int> sizes =
      cfg.sizes.empty() ? std::vector<int>{cfg.class_spec.value("n", 8)} : cfg.sizes;
  SaddleOptions worst_options = Options(cfg);
  worst_options.tol = cfg.worst_tol;
  worst_options.learner_step = cfg.worst_step;
  worst_options.nature_step = cfg.worst_step;
  Output out;
  Csv csv({"instance", "worst_value", "average_value", "gap", "ratio",
           "worst_lower_bound", "average_upper_bound"});
  Json rows = Json::array();
  double last_ratio = 0.0;
  for (size_t i = 0; i < sizes.size(); ++i) {
    const int n = sizes[i];
    const HypothesisClass c = ClassFromJson(WithN(cfg.class_spec, n), cfg.base_dir);
    const Prior prior = PriorFromJson(cfg.prior, c.size(), cfg.base_dir);
    const SaddleResult avg = SolveSaddle(
        c, prior, cfg.eps, NatureStrategySet::FullSymmetric(cfg.m), Options(cfg));
    Rng rng(DeriveSeed(*cfg.seed, static_cast<std::uint64_t>(n)));
    std::vector<DistributionOverX> pool{DistributionOverX::Uniform(n)};
    while (static_cast<int>(pool.size()) < cfg.pool_size) {
      pool.emplace_back(RandomSimplexPoint(rng, n));
    }
    const std::vector<DistributionOverX> grid =
        RefineNatureGrid(c, cfg.eps, cfg.m, pool, cfg.grid_size, worst_options);
    const WorstCaseResult worst =
        WorstCaseValue(c, cfg.eps, cfg.m, grid, worst_options);
    // Certified: the worst-case game value is at least worst.lower_bound and
    // the average game value is at most max_min + gap.
    const double avg_upper = avg.max_min + avg.gap;
    const double ratio = worst.value / avg.value;
    const std::string name = "n=" + std::to_string(n);
    out.checks.Add("worst >= average " + name, worst.lower_bound, avg_upper,
                   worst.lower_bound >= avg_upper);
    if (i > 0) {
      out.checks.Add("ratio nondecreasing " + name, ratio, last_ratio,
                     ratio >= last_ratio);
    }
    last_ratio = ratio;
    Json grid_json = Json::array();
    for (const DistributionOverX& g : grid) grid_json.push_back(g.probs());
    rows.push_back({{"n", n},
                    {"worst_value", worst.value},
                    {"worst_lower_bound", worst.lower_bound},
                    {"worst_hypothesis", worst.worst_hypothesis},
                    {"worst_grid_index", worst.worst_grid_index},
                    {"worst_converged", worst.converged},
                    {"average_value", avg.value},
                    {"average_upper_bound", avg_upper},
                    {"average_gap", avg.gap},
                    {"average_converged", avg.converged},
                    {"ratio", ratio},
                    {"grid", grid_json}});
    csv.AddRow({name, Format(worst.value), Format(avg.value),
                Format(worst.value - avg.value), Format(ratio),
                Format(worst.lower_bound), Format(avg_upper)});
  }
  out.results = {{"instances", rows}};
  out.table = csv.str();
  return out;
}

LearnerChannel NetsChannel(const HypothesisClass& c, const NetSequence& seq,
                           int m, double eps) {
  return DeterministicChannel(
      c,
      [&](const LabeledSample& s) { return NetsLearn(c, seq, s, eps).hypothesis; },
      m, SampleKeying::kMultiset);
}

Json StabilityJson(const StabilityReport& r) {
  return {{"expected_p", r.expected_p}, {"expected_q", r.expected_q},
          {"lhs", r.lhs},               {"weighted_l1", r.weighted_l1},
          {"l1", r.l1},                 {"cs_bound", r.cs_bound},
          {"ratio_cap", r.ratio_cap.value_or(0.0)},
          {"ratio_bound", r.ratio_bound}};
}

Output Stability(const ExperimentConfig& cfg) {
  const HypothesisClass c = ClassFromJson(cfg.class_spec, cfg.base_dir);
  const DistributionOverX d =
      DistributionFromJson(cfg.marginal, c.domain_size(), cfg.base_dir, "marginal");
  const SymmetricSampleDistribution x = IidToSymmetric(d, cfg.m);
  const NetSequence seq = BuildNetSequence(c, d, NetBase(cfg.eps), Mode(cfg));
  const LearnerChannel a = NetsChannel(c, seq, cfg.m, cfg.eps);
  Output out;
  Csv csv({"case", "expected_p", "expected_q", "lhs", "weighted_l1", "l1",
           "cs_bound", "ratio_cap", "ratio_bound", "cs_ok", "ratio_ok"});
  auto record = [&](const std::string& name, const Prior& p, const Prior& q) {
    const StabilityReport r = StabilityCheck(c, p, q, x, a, DensityRatio(p, q));
    out.checks.Add("cauchy-schwarz " + name, r.lhs, r.cs_bound, r.cs_ok);
    out.checks.Add("ratio " + name, r.expected_q, r.ratio_bound, r.ratio_ok);
    csv.AddRow({name, Format(r.expected_p), Format(r.expected_q), Format(r.lhs),
                Format(r.weighted_l1), Format(r.l1), Format(r.cs_bound),
                Format(*r.ratio_cap), Format(r.ratio_bound), Bool(r.cs_ok),
                Bool(r.ratio_ok)});
    return r;
  };
  Rng rng(DeriveSeed(*cfg.seed, 0));
  Json pairs = Json::array();
  for (int i = 0; i < cfg.pairs; ++i) {
    const Prior p(RandomSimplexPoint(rng, c.size()));
    const Prior q(RandomSimplexPoint(rng, c.size()));
    pairs.push_back(StabilityJson(record("pair " + std::to_string(i), p, q)));
  }
  // Tilt: move mass toward the hypothesis with the most information.
  const std::vector<double> info = PerHypothesisInformation(c, x, a);
  const int top = static_cast<int>(
      std::max_element(info.begin(), info.end()) - info.begin());
  const Prior uniform = Prior::Uniform(c.size());
  std::vector<double> tilted(c.size());
  for (int h = 0; h < c.size(); ++h) {
    tilted[h] = (1.0 - cfg.tilt) * uniform[h] + (h == top ? cfg.tilt : 0.0);
  }
  const Prior q_tilt(tilted);
  const StabilityReport tilt = record("tilt", uniform, q_tilt);
  out.results = {{"information", info}, {"pairs", pairs},
                 {"tilt", StabilityJson(tilt)}, {"tilt_hypothesis", top}};
  if (cfg.shift_trials > 0) {
    const RandomizedLearner learner = NetsLearner(c, seq, cfg.eps);
    const std::uint64_t seed = DeriveSeed(*cfg.seed, 1);
    const GeneralizationReport at_p = GeneralizationExperiment(
        c, uniform, learner, d, cfg.m, cfg.eps, cfg.shift_trials, seed, cfg.delta);
    const GeneralizationReport at_q = GeneralizationExperiment(
        c, q_tilt, learner, d, cfg.m, cfg.eps, cfg.shift_trials,
        DeriveSeed(*cfg.seed, 2), cfg.delta);
    const ShiftReport s = SampleComplexityShift(at_p, at_q);
    out.checks.Add("failure under Q <= failure under P + l1 + 3 se", s.failure_q,
                   s.bound + 3.0 * s.se, s.holds);
    out.results["shift"] = {{"failure_p", s.failure_p}, {"failure_q", s.failure_q},
                            {"l1", s.l1}, {"bound", s.bound}, {"se", s.se}};
  }
  out.table = csv.str();
  return out;
}

Output Generalize(const ExperimentConfig& cfg) {
  const HypothesisClass c = ClassFromJson(cfg.class_spec, cfg.base_dir);
  const Prior prior = PriorFromJson(cfg.prior, c.size(), cfg.base_dir);
  const DistributionOverX d =
      DistributionFromJson(cfg.marginal, c.domain_size(), cfg.base_dir, "marginal");
  const NetSequence seq = BuildNetSequence(c, d, NetBase(cfg.eps), Mode(cfg));
  const RandomizedLearner learner = NetsLearner(c, seq, cfg.eps);
  const std::vector<int> ms =
      cfg.m_values.empty() ? std::vector<int>{cfg.m} : cfg.m_values;
  Output out;
  Csv csv({"m", "h", "failure", "se", "mass_above_cut"});
  Json points = Json::array();
  const GeneralizationReport* prev = nullptr;
  std::vector<GeneralizationReport> reports;
  reports.reserve(ms.size());
  for (int m : ms) {
    reports.push_back(GeneralizationExperiment(
        c, prior, learner, d, m, cfg.eps, cfg.trials,
        DeriveSeed(*cfg.seed, static_cast<std::uint64_t>(m)), cfg.delta));
    const GeneralizationReport& r = reports.back();
    for (int h = 0; h < c.size(); ++h) {
      csv.AddRow({std::to_string(m), std::to_string(h), Format(r.failure[h]),
                  Format(r.failure_se[h]), ""});
    }
    csv.AddRow({std::to_string(m), "all", Format(r.average_failure),
                Format(r.average_se), Format(r.mass_above_cut)});
    points.push_back({{"m", m},
                      {"average_failure", r.average_failure},
                      {"average_se", r.average_se},
                      {"mass_above_cut", r.mass_above_cut},
                      {"failure", r.failure},
                      {"failure_se", r.failure_se}});
    if (prev != nullptr) {
      const double slack = 3.0 * std::hypot(prev->average_se, r.average_se);
      out.checks.Add("failure nonincreasing m=" + std::to_string(m),
                     r.average_failure, prev->average_failure + slack,
                     r.average_failure <= prev->average_failure + slack);
    }
    prev = &r;
  }
  out.results = {{"threshold", 2.0 * cfg.eps},
                 {"delta", cfg.delta},
                 {"trials_per_hypothesis", cfg.trials},
                 {"points", points}};
  out.table = csv.str();
  return out;
}

void WriteFile(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
  f << text;
}

}  // namespace

ExperimentConfig ConfigFromJson(const Json& j, const fs::path& base_dir) {
  if (!j.is_object()) throw InputError("config", "expected a JSON object");
  static const std::set<std::string> kKeys = {
      "experiment", "seed",       "class",     "prior",      "marginal",
      "nature",     "m",          "eps",       "tol",        "max_iter",
      "learner_step", "nature_step", "cover",  "radii",      "sizes",
      "grid_size",  "pool_size",  "worst_tol", "worst_step", "pairs",
      "shift_trials", "tilt",     "m_values",  "trials",     "delta",
      "output_dir", "report",     "table"};
  for (const auto& [key, value] : j.items()) {
    if (!kKeys.contains(key)) throw InputError(key, "unknown field");
  }
  ExperimentConfig c;
  c.base_dir = base_dir;
  Read(j, "experiment", c.experiment);
  if (j.contains("seed")) {
    const Json& s = j.at("seed");
    if (!s.is_number_integer() || (!s.is_number_unsigned() && s.get<std::int64_t>() < 0)) {
      throw InputError("seed", "seed must be a nonnegative integer");
    }
    c.seed = s.get<std::uint64_t>();
  }
  if (j.contains("class")) c.class_spec = j.at("class");
  if (j.contains("prior")) c.prior = j.at("prior");
  if (j.contains("marginal")) c.marginal = j.at("marginal");
  if (j.contains("nature")) c.nature = j.at("nature");
  Read(j, "m", c.m);
  Read(j, "eps", c.eps);
  Read(j, "tol", c.tol);
  Read(j, "max_iter", c.max_iter);
  Read(j, "learner_step", c.learner_step);
  Read(j, "nature_step", c.nature_step);
  Read(j, "cover", c.cover);
  Read(j, "radii", c.radii);
  Read(j, "sizes", c.sizes);
  Read(j, "grid_size", c.grid_size);
  Read(j, "pool_size", c.pool_size);
  Read(j, "worst_tol", c.worst_tol);
  Read(j, "worst_step", c.worst_step);
  Read(j, "pairs", c.pairs);
  Read(j, "shift_trials", c.shift_trials);
  Read(j, "tilt", c.tilt);
  Read(j, "m_values", c.m_values);
  Read(j, "trials", c.trials);
  Read(j, "delta", c.delta);
  std::string out_dir = c.output_dir.string();
  Read(j, "output_dir", out_dir);
  c.output_dir = out_dir;
  Read(j, "report", c.report);
  Read(j, "table", c.table);
  return c;
}

ExperimentConfig LoadConfig(const fs::path& path) {
  return ConfigFromJson(ReadJsonFile(path, "config"), path.parent_path());
}

std::vector<Diagnostic> Validate(const ExperimentConfig& cfg) {
  std::vector<Diagnostic> out;
  auto error = [&](const std::string& field, const std::string& message) {
    out.push_back({Diagnostic::Level::kError, field, message});
  };
  auto warn = [&](const std::string& field, const std::string& message) {
    out.push_back({Diagnostic::Level::kWarning, field, message});
  };
  if (!kExperiments.contains(cfg.experiment)) {
    error("experiment", "unknown experiment '" + cfg.experiment + "'");
  }
  if (!cfg.seed.has_value()) error("seed", "seed is mandatory");
  if (cfg.m < 1) error("m", "m must be >= 1");
  if (!(cfg.eps >= 0.0 && cfg.eps <= 1.0)) error("eps", "eps must be in [0, 1]");
  if (!(cfg.tol > 0.0)) error("tol", "tol must be positive");
  if (cfg.max_iter < 1) error("max_iter", "max_iter must be >= 1");
  if (!(cfg.learner_step > 0.0)) error("learner_step", "must be positive");
  if (!(cfg.nature_step > 0.0)) error("nature_step", "must be positive");
  if (cfg.cover != "exact" && cfg.cover != "greedy") {
    error("cover", "cover must be \"exact\" or \"greedy\"");
  }
  for (double r : cfg.radii) {
    if (!(r > 0.0 && r <= 1.0)) error("radii", "radii must be in (0, 1]");
  }
  if (!(cfg.worst_tol > 0.0)) error("worst_tol", "must be positive");
  if (!(cfg.worst_step > 0.0)) error("worst_step", "must be positive");
  if (cfg.pool_size < 1) error("pool_size", "must be >= 1");
  if (cfg.grid_size < 1 || cfg.grid_size > cfg.pool_size) {
    error("grid_size", "must be in [1, pool_size]");
  }
  if (cfg.pairs < 0) error("pairs", "must be >= 0");
  if (cfg.shift_trials < 0) error("shift_trials", "must be >= 0");
  if (!(cfg.tilt >= 0.0 && cfg.tilt <= 1.0)) error("tilt", "must be in [0, 1]");
  for (int m : cfg.m_values) {
    if (m < 1) error("m_values", "sample sizes must be >= 1");
  }
  if (cfg.trials < 1) error("trials", "must be >= 1");
  if (!(cfg.delta >= 0.0 && cfg.delta <= 1.0)) error("delta", "must be in [0, 1]");
  if (cfg.eps == 0.0 && UsesNets(cfg.experiment)) {
    warn("eps", "eps = 0: the nets learner accepts only consistent hypotheses "
                "and its stopping-time tail bound is not guaranteed");
  }
  if (cfg.eps == 0.0 && cfg.experiment == "cover" && cfg.radii.empty()) {
    error("eps", "cover radius eps must be positive");
  }

  // Classes to check: one per domain size for the sweep.
  std::vector<Json> specs;
  if (cfg.experiment == "worst-vs-average") {
    if (!cfg.class_spec.is_object() || !cfg.class_spec.contains("generator")) {
      error("class", "worst-vs-average needs a class generator");
      return out;
    }
    for (int n : cfg.sizes) {
      if (n < 1) error("sizes", "domain sizes must be >= 1");
    }
    if (!HasErrors(out)) {
      for (int n : cfg.sizes) specs.push_back(WithN(cfg.class_spec, n));
    }
    if (cfg.sizes.empty()) specs.push_back(cfg.class_spec);
    if (!cfg.prior.is_string()) {
      error("prior", "worst-vs-average sweeps class sizes; use \"uniform\"");
    }
  } else {
    specs.push_back(cfg.class_spec);
  }
  for (const Json& spec : specs) {
    try {
      const HypothesisClass c = ClassFromJson(spec, cfg.base_dir);
      const int n = c.domain_size();
      if (Enumerates(cfg.experiment) && cfg.m >= 1) {
        const double cost = cfg.m * std::log2(std::max(n, 2)) * c.size();
        if (cost > kEnumerationBudget) {
          error("m", "m * log2(n) * |C| = " + Format(cost) +
                         " exceeds the enumeration budget " +
                         Format(kEnumerationBudget));
        }
      }
      if (cfg.cover == "exact" && c.size() > kMaxExactCoverClassSize &&
          cfg.experiment != "cover") {
        error("cover", "exact covers need |C| <= " +
                           std::to_string(kMaxExactCoverClassSize));
      }
      if (cfg.experiment != "worst-vs-average") {
        PriorFromJson(cfg.prior, c.size(), cfg.base_dir);
      }
      DistributionFromJson(cfg.marginal, n, cfg.base_dir, "marginal");
      if (cfg.experiment == "minimax-solve" && cfg.m >= 1) {
        NatureFromJson(cfg.nature, n, cfg.m, cfg.base_dir);
      }
    } catch (const InputError& e) {
      error(e.field(), e.what());
    }
  }
  return out;
}

bool HasErrors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) {
    return d.level == Diagnostic::Level::kError;
  });
}

Json ToJson(const std::vector<Diagnostic>& diagnostics) {
  Json out = Json::array();
  for (const Diagnostic& d : diagnostics) {
    out.push_back({{"level", d.level == Diagnostic::Level::kError ? "error" : "warning"},
                   {"field", d.field},
                   {"message", d.message}});
  }
  return out;
}

Json ErrorObject(const std::string& kind, const std::string& field,
                 const std::string& message) {
  return {{"error", {{"kind", kind}, {"field", field}, {"message", message}}}};
}

std::string DumpReport(const Json& report) {
  return Rounded(report).dump(2) + "\n";
}

RunOutcome Run(const ExperimentConfig& cfg) {
  RunOutcome outcome;
  const std::vector<Diagnostic> diagnostics = Validate(cfg);
  if (HasErrors(diagnostics)) {
    const auto first = std::find_if(
        diagnostics.begin(), diagnostics.end(),
        [](const Diagnostic& d) { return d.level == Diagnostic::Level::kError; });
    outcome.exit_code = 2;
    outcome.report = ErrorObject("config", first->field, first->message);
    outcome.report["error"]["diagnostics"] = ToJson(diagnostics);
    return outcome;
  }
  static const std::map<std::string, std::function<Output(const ExperimentConfig&)>>
      kRunners = {{"nets-demo", NetsDemo},       {"cover", Cover},
                  {"minimax-solve", MinimaxSolve}, {"worst-vs-average", WorstVsAverage},
                  {"stability", Stability},      {"generalize", Generalize}};
  try {
    Output out = kRunners.at(cfg.experiment)(cfg);
    Json report = {{"experiment", cfg.experiment},
                   {"seed", *cfg.seed},
                   {"m", cfg.m},
                   {"eps", cfg.eps},
                   {"results", std::move(out.results)},
                   {"checks", out.checks.json()},
                   {"all_pass", out.checks.all()},
                   {"diagnostics", ToJson(diagnostics)}};
    const char* env = std::getenv("INFOGAME_OUT_DIR");
    const fs::path dir = env != nullptr && *env != '\0' ? fs::path(env) : cfg.output_dir;
    outcome.report_path =
        dir / (cfg.report.empty() ? cfg.experiment + ".json" : cfg.report);
    outcome.table_path =
        dir / (cfg.table.empty() ? cfg.experiment + ".csv" : cfg.table);
    WriteFile(outcome.report_path, DumpReport(report));
    WriteFile(outcome.table_path, out.table);
    outcome.report = std::move(report);
  } catch (const InputError& e) {
    outcome.exit_code = 2;
    outcome.report = ErrorObject("input", e.field(), e.what());
  } catch (const std::exception& e) {
    outcome.exit_code = 1;
    outcome.report = ErrorObject("runtime", cfg.experiment, e.what());
  }
  return outcome;
}

}  // namespace infogame
