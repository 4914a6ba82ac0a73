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

// Distributions over the domain, symmetric laws over X^m stored on
// multisets, priors over a class, and the induced laws of labeled samples.

#ifndef INFOGAME_PROB_H_
#define INFOGAME_PROB_H_

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "infogame/core_model.h"
#include "infogame/rng.h"

namespace infogame {

// Tolerance on the total mass of every probability vector.
inline constexpr double kNormTolerance = 1e-9;

// Throws std::invalid_argument if `p` has a negative (or non-finite) entry or
// does not sum to one within kNormTolerance. `what` names the vector.
void CheckProbabilityVector(std::span<const double> p, const char* what);

class DistributionOverX {
 public:
  explicit DistributionOverX(std::vector<double> probs);
  static DistributionOverX Uniform(int n);
  static DistributionOverX PointMass(int n, int x);

  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int x) const { return probs_[x]; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

// A distribution over the hypothesis indices of a fixed class.
class Prior {
 public:
  explicit Prior(std::vector<double> weights);
  static Prior Uniform(int k);
  static Prior PointMass(int k, int i);

  int size() const { return static_cast<int>(weights_.size()); }
  double operator[](int i) const { return weights_[i]; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

double L1Distance(const Prior& p, const Prior& q);

// A multiset of points stored as a nondecreasing tuple.
using Multiset = std::vector<int>;

// Number of distinct orderings of the multiset: m! / prod(multiplicity!).
std::uint64_t PermutationCount(std::span<const int> multiset);

// All C(n+m-1, m) multisets of size m over n points in lexicographic order.
class MultisetIndex {
 public:
  MultisetIndex(int domain_size, int m);

  int domain_size() const { return domain_size_; }
  int m() const { return m_; }
  int size() const { return static_cast<int>(multisets_.size()); }
  const Multiset& operator[](int i) const { return multisets_[i]; }
  // Rank of `u`, or -1 when `u` is not a sorted in-range multiset of size m.
  int Find(const Multiset& u) const;

 private:
  int domain_size_;
  int m_;
  std::vector<Multiset> multisets_;
  std::map<Multiset, int> rank_;
};

// A permutation-invariant law on X^m. The ordered law puts mass(u) /
// PermutationCount(u) on each ordering of u. Only positive masses are kept.
class SymmetricSampleDistribution {
 public:
  SymmetricSampleDistribution(int domain_size, int m,
                              std::map<Multiset, double> mass);
  static SymmetricSampleDistribution FromDense(const MultisetIndex& index,
                                               std::span<const double> mass);

  int domain_size() const { return domain_size_; }
  int m() const { return m_; }
  const std::map<Multiset, double>& mass() const { return mass_; }
  double MassOf(const Multiset& u) const;
  std::vector<double> Dense(const MultisetIndex& index) const;

 private:
  int domain_size_;
  int m_;
  std::map<Multiset, double> mass_;
};

SymmetricSampleDistribution IidToSymmetric(const DistributionOverX& d, int m);

SymmetricSampleDistribution Mix(
    std::span<const SymmetricSampleDistribution> components,
    std::span<const double> weights);

// Expected fraction of coordinates equal to x; every coordinate has this
// marginal by symmetry.
DistributionOverX Marginal(const SymmetricSampleDistribution& x);

// Law of the ordered labeled sample S_h when the points are drawn from `x`.
class SampleLaw {
 public:
  SampleLaw(Hypothesis h, int m,
            std::vector<std::pair<LabeledSample, double>> entries);

  const Hypothesis& hypothesis() const { return hypothesis_; }
  int m() const { return m_; }
  // Sorted by sample.
  const std::vector<std::pair<LabeledSample, double>>& entries() const {
    return entries_;
  }

 private:
  Hypothesis hypothesis_;
  int m_;
  std::vector<std::pair<LabeledSample, double>> entries_;
};

SampleLaw MakeSampleLaw(const SymmetricSampleDistribution& x,
                        const Hypothesis& h);

LabeledSample DrawSample(const SampleLaw& law, Rng& rng);
LabeledSample DrawSample(const SampleLaw& law, std::uint64_t seed);

// Inverse-CDF sampler over indices of a probability vector.
class DiscreteSampler {
 public:
  explicit DiscreteSampler(std::span<const double> probs);
  int operator()(Rng& rng) const;

 private:
  std::vector<double> cumulative_;
};

// Draws m i.i.d. points from `points` and labels them by `h`.
LabeledSample DrawIidSample(const DiscreteSampler& points, const Hypothesis& h,
                            int m, Rng& rng);

}  // namespace infogame

#endif  // INFOGAME_PROB_H_
