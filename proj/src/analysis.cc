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

#include "infogame/analysis.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <utility>

namespace infogame {

namespace {

constexpr double kSlack = 1e-9;

}  // namespace

double DensityRatio(const Prior& p, const Prior& q) {
  if (p.size() != q.size()) throw std::invalid_argument("prior sizes differ");
  double ratio = 0.0;
  for (int h = 0; h < p.size(); ++h) {
    if (q[h] <= 0.0) continue;
    if (p[h] <= 0.0) return std::numeric_limits<double>::infinity();
    ratio = std::max(ratio, q[h] / p[h]);
  }
  return ratio;
}

StabilityReport StabilityCheck(const HypothesisClass& c, const Prior& p,
                               const Prior& q,
                               const SymmetricSampleDistribution& x,
                               const LearnerChannel& a,
                               std::optional<double> ratio_cap) {
  if (p.size() != c.size() || q.size() != c.size()) {
    throw std::invalid_argument("priors and class sizes differ");
  }
  if (ratio_cap.has_value() && DensityRatio(p, q) > *ratio_cap) {
    throw std::invalid_argument("sup Q/P exceeds the supplied ratio cap");
  }
  StabilityReport r;
  r.information = PerHypothesisInformation(c, x, a);
  double second_p = 0.0;
  double second_q = 0.0;
  for (int h = 0; h < c.size(); ++h) {
    const double i = r.information[h];
    r.expected_p += p[h] * i;
    r.expected_q += q[h] * i;
    second_p += p[h] * i * i;
    second_q += q[h] * i * i;
    r.weighted_l1 += i * std::abs(p[h] - q[h]);
  }
  r.lhs = std::abs(r.expected_p - r.expected_q);
  r.l1 = L1Distance(p, q);
  r.cs_bound = std::sqrt(second_p + second_q) * std::sqrt(r.l1);
  r.cs_ok = r.lhs <= r.weighted_l1 + kSlack && r.weighted_l1 <= r.cs_bound + kSlack;
  r.ratio_cap = ratio_cap;
  if (ratio_cap.has_value()) {
    r.ratio_bound = *ratio_cap * r.expected_p;
    r.ratio_ok = r.expected_q <= r.ratio_bound + kSlack;
  }
  return r;
}

AverageComplexity AverageInformationComplexity(
    const HypothesisClass& c, const Prior& prior, const LearnerChannel& a,
    const std::vector<SymmetricSampleDistribution>& vertices) {
  if (vertices.empty()) throw std::invalid_argument("no strategy vertices");
  AverageComplexity r;
  for (size_t k = 0; k < vertices.size(); ++k) {
    const double v = AverageInformation(c, prior, vertices[k], a);
    r.per_vertex.push_back(v);
    if (k == 0 || v > r.value) {
      r.value = v;
      r.argmax = static_cast<int>(k);
    }
  }
  return r;
}

std::vector<SymmetricSampleDistribution> SymmetricVertices(int n, int m) {
  const MultisetIndex index(n, m);
  std::vector<SymmetricSampleDistribution> out;
  out.reserve(index.size());
  for (int u = 0; u < index.size(); ++u) {
    out.emplace_back(n, m, std::map<Multiset, double>{{index[u], 1.0}});
  }
  return out;
}

RandomizedLearner ChannelLearner(LearnerChannel a) {
  auto shared = std::make_shared<const LearnerChannel>(std::move(a));
  return [shared](const LabeledSample& sample, Rng& rng) {
    const ChannelRow& row = shared->Row(sample);
    const double u = UniformDouble(rng);
    double acc = 0.0;
    int last = -1;
    for (int y : row.allowed) {
      if (row.probs[y] <= 0.0) continue;
      acc += row.probs[y];
      last = y;
      if (u < acc) return y;
    }
    return last;
  };
}

RandomizedLearner FromDeterministic(DeterministicLearner learner) {
  return [learner = std::move(learner)](const LabeledSample& sample, Rng&) {
    return learner(sample);
  };
}

RandomizedLearner NetsLearner(const HypothesisClass& c, NetSequence seq,
                              double eps) {
  auto state = std::make_shared<const std::pair<HypothesisClass, NetSequence>>(
      c, std::move(seq));
  return [state, eps](const LabeledSample& sample, Rng&) {
    return NetsLearn(state->first, state->second, sample, eps).hypothesis;
  };
}

GeneralizationReport GeneralizationExperiment(const HypothesisClass& c,
                                              const Prior& prior,
                                              const RandomizedLearner& learner,
                                              const DistributionOverX& d,
                                              int m, double eps, int trials,
                                              std::uint64_t seed,
                                              double delta) {
  if (prior.size() != c.size()) {
    throw std::invalid_argument("prior and class sizes differ");
  }
  if (d.size() != c.domain_size()) {
    throw std::invalid_argument("distribution and domain sizes differ");
  }
  if (m < 1) throw std::invalid_argument("sample size m must be >= 1");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  GeneralizationReport r;
  r.m = m;
  r.eps = eps;
  r.delta = delta;
  r.trials = trials;
  r.prior = prior.weights();
  r.failure.assign(c.size(), 0.0);
  r.failure_se.assign(c.size(), 0.0);
  const DiscreteSampler points(d.probs());
  double variance = 0.0;
  for (int h = 0; h < c.size(); ++h) {
    if (prior[h] <= 0.0) continue;
    Rng rng(DeriveSeed(seed, static_cast<std::uint64_t>(h)));
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
      const LabeledSample sample = DrawIidSample(points, c[h], m, rng);
      const int out = learner(sample, rng);
      if (TrueError(c[out], c[h], d) > 2.0 * eps) ++failures;
    }
    const double f = static_cast<double>(failures) / trials;
    r.failure[h] = f;
    r.failure_se[h] = std::sqrt(f * (1.0 - f) / trials);
    r.average_failure += prior[h] * f;
    variance += prior[h] * prior[h] * f * (1.0 - f) / trials;
    if (f > delta) r.mass_above_cut += prior[h];
  }
  r.average_se = std::sqrt(variance);
  return r;
}

ShiftReport SampleComplexityShift(const GeneralizationReport& at_p,
                                  const GeneralizationReport& at_q) {
  if (at_p.prior.size() != at_q.prior.size() || at_p.m != at_q.m ||
      at_p.eps != at_q.eps) {
    throw std::invalid_argument("reports describe different experiments");
  }
  ShiftReport s;
  s.failure_p = at_p.average_failure;
  s.failure_q = at_q.average_failure;
  s.l1 = L1Distance(Prior(at_p.prior), Prior(at_q.prior));
  s.bound = std::min(1.0, s.failure_p + s.l1);
  s.se = std::hypot(at_p.average_se, at_q.average_se);
  s.holds = s.failure_q <= s.bound + 3.0 * s.se;
  return s;
}

}  // namespace infogame
