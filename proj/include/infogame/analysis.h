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

#ifndef INFOGAME_ANALYSIS_H_
#define INFOGAME_ANALYSIS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "infogame/core_model.h"
#include "infogame/info.h"
#include "infogame/nets.h"
#include "infogame/prob.h"
#include "infogame/rng.h"

namespace infogame {

struct StabilityReport {
  std::vector<double> information;  // I(S_h; A(S_h)) per h, bits
  double expected_p = 0.0;          // E_{h ~ P} I
  double expected_q = 0.0;          // E_{h ~ Q} I
  double lhs = 0.0;                 // |E_P I - E_Q I|
  double weighted_l1 = 0.0;         // sum_h I_h |P(h) - Q(h)|
  double l1 = 0.0;                  // ||P - Q||_1
  double cs_bound = 0.0;  // sqrt(E_P I^2 + E_Q I^2) sqrt(||P - Q||_1)
  bool cs_ok = false;     // lhs <= weighted_l1 <= cs_bound, up to 1e-9
  std::optional<double> ratio_cap;  // C with sup_h Q(h) / P(h) <= C
  double ratio_bound = 0.0;         // C E_P I, when a cap is given
  bool ratio_ok = true;             // E_Q I <= C E_P I, up to 1e-9
};

// Exact per-h information of `a` under `x`, and both sides of the
// prior-shift inequalities. Throws std::invalid_argument when `ratio_cap`
// is given but sup_h Q(h) / P(h) exceeds it.
StabilityReport StabilityCheck(const HypothesisClass& c, const Prior& p,
                               const Prior& q,
                               const SymmetricSampleDistribution& x,
                               const LearnerChannel& a,
                               std::optional<double> ratio_cap = std::nullopt);

// sup_h Q(h) / P(h); infinite when Q charges a hypothesis P does not.
double DensityRatio(const Prior& p, const Prior& q);

struct AverageComplexity {
  double value = 0.0;  // max over vertices of E_{h ~ prior} I, bits
  int argmax = 0;
  std::vector<double> per_vertex;
};

AverageComplexity AverageInformationComplexity(
    const HypothesisClass& c, const Prior& prior, const LearnerChannel& a,
    const std::vector<SymmetricSampleDistribution>& vertices);

// The point masses on every multiset of size m over n points.
std::vector<SymmetricSampleDistribution> SymmetricVertices(int n, int m);

// Maps a sample to a hypothesis index, drawing any internal randomness from
// the generator.
using RandomizedLearner = std::function<int(const LabeledSample&, Rng&)>;

RandomizedLearner ChannelLearner(LearnerChannel a);
RandomizedLearner FromDeterministic(DeterministicLearner learner);
RandomizedLearner NetsLearner(const HypothesisClass& c, NetSequence seq,
                              double eps);

struct GeneralizationReport {
  int m = 0;
  double eps = 0.0;
  double delta = 0.0;  // reporting cut on per-h failure probability
  int trials = 0;      // per hypothesis with positive prior weight
  std::vector<double> prior;
  std::vector<double> failure;     // Pr[true error > 2 eps] per h
  std::vector<double> failure_se;  // Monte Carlo standard errors
  double average_failure = 0.0;    // prior-weighted
  double average_se = 0.0;
  double mass_above_cut = 0.0;  // prior mass of h with failure > delta
};

// For every h with positive prior weight, draws `trials` samples
// S ~ (D, h(D))^m, runs the learner and records whether the exact true
// error of its output exceeds 2 eps. The stream for h is seeded with
// DeriveSeed(seed, h), so the report is a function of the arguments.
GeneralizationReport GeneralizationExperiment(const HypothesisClass& c,
                                              const Prior& prior,
                                              const RandomizedLearner& learner,
                                              const DistributionOverX& d,
                                              int m, double eps, int trials,
                                              std::uint64_t seed,
                                              double delta = 0.1);

struct ShiftReport {
  double failure_p = 0.0;
  double failure_q = 0.0;
  double l1 = 0.0;
  double bound = 0.0;  // min(1, failure_p + l1)
  double se = 0.0;     // combined standard error of failure_q - failure_p
  bool holds = false;  // failure_q <= bound + 3 se
};

// Failure guarantee carried from prior P to Q by the L1 shift, checked
// against a run of the same experiment under Q.
ShiftReport SampleComplexityShift(const GeneralizationReport& at_p,
                                  const GeneralizationReport& at_q);

}  // namespace infogame

#endif  // INFOGAME_ANALYSIS_H_
