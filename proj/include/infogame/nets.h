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

// The cover-cascade learner: epsilon-covers of the class under the
// disagreement metric of a marginal D at radii eps/2, eps/4, ..., followed by
// the whole class. The learner returns the first member, scanning the covers
// in order, whose empirical error is at most eps.

#ifndef INFOGAME_NETS_H_
#define INFOGAME_NETS_H_

#include <string>
#include <vector>

#include "infogame/core_model.h"
#include "infogame/prob.h"

namespace infogame {

// Distances at or below radius + kCoverSlack count as covered.
inline constexpr double kCoverSlack = 1e-12;
// Largest class accepted by the exhaustive minimal-cover search.
inline constexpr int kMaxExactCoverClassSize = 22;

struct EpsilonNet {
  double radius = 0.0;
  std::vector<int> members;  // hypothesis indices, in scan order
};

enum class CoverMode { kGreedy, kExact };

CoverMode ParseCoverMode(const std::string& name);
std::string CoverModeName(CoverMode mode);

// Whether every hypothesis lies within `net.radius` of some member under d.
bool IsCover(const HypothesisClass& c, const DistributionOverX& d,
             const EpsilonNet& net);

// Repeatedly adds the hypothesis that covers the most uncovered ones, lowest
// index first on ties.
EpsilonNet GreedyCover(const HypothesisClass& c, const DistributionOverX& d,
                       double eps);

// A minimum-cardinality cover by members of the class, found by exhaustive
// search over subsets of increasing size. Members are in index order.
EpsilonNet ExactMinimalCover(const HypothesisClass& c,
                             const DistributionOverX& d, double eps);

// Size bound (4 e^2 / radius)^d on minimal covers of a class of VC
// dimension d.
double HausslerBound(double radius, int vc_dimension);

class NetSequence {
 public:
  NetSequence(double base_epsilon, std::vector<EpsilonNet> nets,
              EpsilonNet fallback, DistributionOverX built_for, CoverMode mode);

  double base_epsilon() const { return base_epsilon_; }
  const std::vector<EpsilonNet>& nets() const { return nets_; }
  const EpsilonNet& fallback() const { return fallback_; }
  const DistributionOverX& built_for() const { return built_for_; }
  CoverMode mode() const { return mode_; }

  // Covers followed by the fallback, 1-based: stage(num_stages()) is the
  // fallback.
  int num_stages() const { return static_cast<int>(nets_.size()) + 1; }
  const EpsilonNet& stage(int j) const;

 private:
  double base_epsilon_;
  std::vector<EpsilonNet> nets_;
  EpsilonNet fallback_;
  DistributionOverX built_for_;
  CoverMode mode_;
};

// Covers at radii eps/2^j for j = 1, 2, ... until a cover certifies radius
// zero or j reaches ceil(log2(2 eps / delta_min)), delta_min being the
// smallest positive disagreement under d. Requires eps in (0, 1].
NetSequence BuildNetSequence(const HypothesisClass& c,
                             const DistributionOverX& d, double eps,
                             CoverMode mode);

struct NetsOutput {
  int hypothesis = -1;
  int stop_index = 0;  // 1-based stage; num_stages() means the fallback
  auto operator<=>(const NetsOutput&) const = default;
};

// Whether `mistakes` out of m is an empirical error of at most eps.
bool WithinError(int mistakes, int m, double eps);

// Throws std::invalid_argument when no stage, the fallback included, has an
// acceptable hypothesis (the sample is not realizable).
NetsOutput NetsLearn(const HypothesisClass& c, const NetSequence& seq,
                     const LabeledSample& sample, double eps);

struct StoppingReport {
  int hypothesis = 0;
  std::vector<double> stop_pmf;  // P(J = j) at index j - 1
  std::vector<int> stage_sizes;  // |N_j| at index j - 1
  double stop_entropy = 0.0;     // H(J)
  double size_term = 0.0;        // sum_j P(J = j) log2 |N_j|
  double information = 0.0;     // I(S; A(S))
  double output_entropy = 0.0;   // H(A(S))
  bool tail_ok = false;          // P(J = j) <= 2^-(j-1) and P(J > j) <= 2^-j
  bool chain_ok = false;         // I <= H(J) + size_term
  bool identity_ok = false;      // I = H(A(S)) for this deterministic learner

  double bound() const { return stop_entropy + size_term; }
  bool all_ok() const { return tail_ok && chain_ok && identity_ok; }
};

// Exact audit of the learner on S_h, by enumerating the multiset support of
// `x`. The marginal of `x` must be the distribution the covers were built for.
StoppingReport MakeStoppingReport(const NetSequence& seq,
                                  const HypothesisClass& c,
                                  const SymmetricSampleDistribution& x, int h,
                                  double eps);

}  // namespace infogame

#endif  // INFOGAME_NETS_H_
