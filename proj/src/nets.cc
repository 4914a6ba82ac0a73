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

#include "infogame/nets.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "infogame/info.h"

namespace infogame {

CoverMode ParseCoverMode(const std::string& name) {
  if (name == "greedy") return CoverMode::kGreedy;
  if (name == "exact") return CoverMode::kExact;
  throw std::invalid_argument("unknown cover mode '" + name +
                              "' (expected greedy or exact)");
}

std::string CoverModeName(CoverMode mode) {
  return mode == CoverMode::kGreedy ? "greedy" : "exact";
}

namespace {

// within[i][j]: hypothesis j lies in the ball of radius `radius` around i.
std::vector<std::vector<bool>> Balls(const HypothesisClass& c,
                                     const DistributionOverX& d,
                                     double radius) {
  const int k = c.size();
  std::vector<std::vector<bool>> within(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i) {
    within[i][i] = true;
    for (int j = i + 1; j < k; ++j) {
      const bool close = Disagreement(c[i], c[j], d) <= radius + kCoverSlack;
      within[i][j] = within[j][i] = close;
    }
  }
  return within;
}

void CheckInputs(const HypothesisClass& c, const DistributionOverX& d,
                 double eps) {
  if (c.empty()) throw std::invalid_argument("cover of an empty class");
  if (d.size() != c.domain_size()) {
    throw std::invalid_argument("distribution and domain sizes differ");
  }
  if (!(eps >= 0.0)) throw std::invalid_argument("cover radius must be >= 0");
}

}  // namespace

bool IsCover(const HypothesisClass& c, const DistributionOverX& d,
             const EpsilonNet& net) {
  for (int h = 0; h < c.size(); ++h) {
    const bool covered = std::any_of(
        net.members.begin(), net.members.end(), [&](int f) {
          return Disagreement(c[h], c[f], d) <= net.radius + kCoverSlack;
        });
    if (!covered) return false;
  }
  return true;
}

EpsilonNet GreedyCover(const HypothesisClass& c, const DistributionOverX& d,
                       double eps) {
  CheckInputs(c, d, eps);
  const int k = c.size();
  const auto within = Balls(c, d, eps);
  std::vector<bool> covered(k, false);
  int remaining = k;
  EpsilonNet net{eps, {}};
  while (remaining > 0) {
    int best = -1;
    int best_gain = 0;
    for (int i = 0; i < k; ++i) {
      int gain = 0;
      for (int j = 0; j < k; ++j) gain += within[i][j] && !covered[j];
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    net.members.push_back(best);
    for (int j = 0; j < k; ++j) {
      if (within[best][j] && !covered[j]) {
        covered[j] = true;
        --remaining;
      }
    }
  }
  return net;
}

EpsilonNet ExactMinimalCover(const HypothesisClass& c,
                             const DistributionOverX& d, double eps) {
  CheckInputs(c, d, eps);
  const int k = c.size();
  if (k > kMaxExactCoverClassSize) {
    throw std::invalid_argument(
        "class of size " + std::to_string(k) +
        " too large for exhaustive cover search (limit " +
        std::to_string(kMaxExactCoverClassSize) + ")");
  }
  const auto within = Balls(c, d, eps);
  std::vector<std::uint32_t> ball(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (within[i][j]) ball[i] |= std::uint32_t{1} << j;
    }
  }
  const std::uint32_t all = k == 32 ? ~std::uint32_t{0}
                                    : (std::uint32_t{1} << k) - 1;
  for (int size = 1; size <= k; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::uint32_t mask = 0;
      for (int i : idx) mask |= ball[i];
      if (mask == all) return EpsilonNet{eps, idx};
      int i = size - 1;
      while (i >= 0 && idx[i] == k - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw std::logic_error("the whole class is always a cover");
}

double HausslerBound(double radius, int vc_dimension) {
  return std::pow(4.0 * std::numbers::e * std::numbers::e / radius,
                  vc_dimension);
}

NetSequence::NetSequence(double base_epsilon, std::vector<EpsilonNet> nets,
                         EpsilonNet fallback, DistributionOverX built_for,
                         CoverMode mode)
    : base_epsilon_(base_epsilon),
      nets_(std::move(nets)),
      fallback_(std::move(fallback)),
      built_for_(std::move(built_for)),
      mode_(mode) {
  if (nets_.empty()) throw std::invalid_argument("net sequence without nets");
  for (size_t j = 1; j < nets_.size(); ++j) {
    if (!(nets_[j].radius < nets_[j - 1].radius)) {
      throw std::invalid_argument("net radii must strictly decrease");
    }
  }
}

const EpsilonNet& NetSequence::stage(int j) const {
  if (j < 1 || j > num_stages()) throw std::out_of_range("net stage index");
  return j == num_stages() ? fallback_ : nets_[j - 1];
}

NetSequence BuildNetSequence(const HypothesisClass& c,
                             const DistributionOverX& d, double eps,
                             CoverMode mode) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("net sequence needs eps in (0, 1]");
  }
  CheckInputs(c, d, eps);
  double delta_min = 0.0;
  for (int i = 0; i < c.size(); ++i) {
    for (int j = i + 1; j < c.size(); ++j) {
      const double dist = Disagreement(c[i], c[j], d);
      if (dist > kCoverSlack && (delta_min == 0.0 || dist < delta_min)) {
        delta_min = dist;
      }
    }
  }
  int j_max = 1;
  if (delta_min > 0.0) {
    j_max = std::max(
        1, static_cast<int>(std::ceil(std::log2(2.0 * eps / delta_min))));
  }
  std::vector<EpsilonNet> nets;
  for (int j = 1; j <= j_max; ++j) {
    const double radius = std::ldexp(eps, -j);
    EpsilonNet net = mode == CoverMode::kExact ? ExactMinimalCover(c, d, radius)
                                               : GreedyCover(c, d, radius);
    const bool exact_zero = IsCover(c, d, EpsilonNet{0.0, net.members});
    nets.push_back(std::move(net));
    if (exact_zero) break;
  }
  EpsilonNet fallback{0.0, {}};
  for (int h = 0; h < c.size(); ++h) fallback.members.push_back(h);
  return NetSequence(eps, std::move(nets), std::move(fallback), d, mode);
}

bool WithinError(int mistakes, int m, double eps) {
  return mistakes <= std::floor(eps * m + 1e-9);
}

NetsOutput NetsLearn(const HypothesisClass& c, const NetSequence& seq,
                     const LabeledSample& sample, double eps) {
  sample.CheckDomain(c.domain_size());
  for (int j = 1; j <= seq.num_stages(); ++j) {
    for (int f : seq.stage(j).members) {
      if (WithinError(EmpiricalMistakes(c[f], sample), sample.size(), eps)) {
        return {f, j};
      }
    }
  }
  throw std::invalid_argument("sample is not realizable by the class");
}

StoppingReport MakeStoppingReport(const NetSequence& seq,
                                  const HypothesisClass& c,
                                  const SymmetricSampleDistribution& x, int h,
                                  double eps) {
  if (h < 0 || h >= c.size()) throw std::out_of_range("hypothesis index");
  const DistributionOverX marginal = Marginal(x);
  const DistributionOverX& built_for = seq.built_for();
  if (marginal.size() != built_for.size()) {
    throw std::invalid_argument("marginal and net distribution sizes differ");
  }
  for (int p = 0; p < marginal.size(); ++p) {
    if (std::abs(marginal[p] - built_for[p]) > kNormTolerance) {
      throw std::invalid_argument(
          "marginal of the sample law differs from the distribution the nets "
          "were built for");
    }
  }

  StoppingReport report;
  report.hypothesis = h;
  const int stages = seq.num_stages();
  report.stop_pmf.assign(stages, 0.0);
  for (int j = 1; j <= stages; ++j) {
    report.stage_sizes.push_back(static_cast<int>(seq.stage(j).members.size()));
  }

  // Rows of the joint are the supported multisets; the learner only looks
  // at the multiset of labeled pairs.
  const int cols = c.size();
  std::vector<double> joint;
  joint.reserve(x.mass().size() * cols);
  for (const auto& [u, p] : x.mass()) {
    const NetsOutput out = NetsLearn(c, seq, LabelBy(c[h], u), eps);
    report.stop_pmf[out.stop_index - 1] += p;
    const size_t base = joint.size();
    joint.resize(base + cols, 0.0);
    joint[base + out.hypothesis] = p;
  }
  const int rows = static_cast<int>(joint.size()) / cols;
  const JointPMF pmf(rows, cols, std::move(joint));
  report.information = MutualInformation(pmf);
  report.output_entropy = Entropy(pmf.ColMarginal());
  report.stop_entropy = Entropy(report.stop_pmf);
  for (int j = 1; j <= stages; ++j) {
    const double pj = report.stop_pmf[j - 1];
    if (pj > 0.0) report.size_term += pj * std::log2(report.stage_sizes[j - 1]);
  }

  constexpr double kSlack = 1e-12;
  report.tail_ok = true;
  double tail = 1.0;  // P(J > j - 1)
  for (int j = 1; j <= stages; ++j) {
    const double pj = report.stop_pmf[j - 1];
    if (j >= 2 && pj > std::ldexp(1.0, -(j - 1)) + kSlack) report.tail_ok = false;
    tail -= pj;
    if (j < stages && tail > std::ldexp(1.0, -j) + kSlack) report.tail_ok = false;
  }
  report.chain_ok = report.information <= report.bound() + 1e-9;
  report.identity_ok =
      std::abs(report.information - report.output_entropy) <= 1e-9;
  return report;
}

}  // namespace infogame
