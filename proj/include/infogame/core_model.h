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

// Finite domains, binary hypothesis classes, labeled samples and the
// combinatorial primitives on them (shattering, VC dimension, 0-1 errors).
//
// Points of the domain are the indices 0..n-1. A hypothesis is its label
// vector; a class keeps its hypotheses in a canonical order that defines the
// hypothesis indices used by priors and learner channels.

#ifndef INFOGAME_CORE_MODEL_H_
#define INFOGAME_CORE_MODEL_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace infogame {

class DistributionOverX;

class Hypothesis {
 public:
  Hypothesis() = default;
  explicit Hypothesis(std::vector<std::uint8_t> labels);

  // Parses "0110..." where character i is the label of point i.
  static Hypothesis FromBitstring(const std::string& bits);

  int size() const { return static_cast<int>(labels_.size()); }
  int operator()(int x) const { return labels_[x]; }
  const std::vector<std::uint8_t>& labels() const { return labels_; }
  Hypothesis Complement() const;
  std::string ToBitstring() const;

  auto operator<=>(const Hypothesis&) const = default;

 private:
  std::vector<std::uint8_t> labels_;
};

class HypothesisClass {
 public:
  // Duplicate rows are dropped, keeping the first occurrence.
  HypothesisClass(int domain_size, std::vector<Hypothesis> hypotheses);

  int domain_size() const { return domain_size_; }
  int size() const { return static_cast<int>(hypotheses_.size()); }
  bool empty() const { return hypotheses_.empty(); }
  const Hypothesis& operator[](int i) const { return hypotheses_[i]; }
  const std::vector<Hypothesis>& hypotheses() const { return hypotheses_; }

  // Index of `h` in the class, or -1.
  int IndexOf(const Hypothesis& h) const;

 private:
  int domain_size_;
  std::vector<Hypothesis> hypotheses_;
};

struct LabeledPoint {
  int x = 0;
  int y = 0;
  auto operator<=>(const LabeledPoint&) const = default;
};

// An ordered sample ((x_1,y_1),...,(x_m,y_m)), m >= 1.
class LabeledSample {
 public:
  LabeledSample() = default;
  explicit LabeledSample(std::vector<LabeledPoint> pairs);

  int size() const { return static_cast<int>(pairs_.size()); }
  const LabeledPoint& operator[](int i) const { return pairs_[i]; }
  const std::vector<LabeledPoint>& pairs() const { return pairs_; }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  // The sample with its pairs sorted; identifies the labeled multiset.
  LabeledSample Canonical() const;

  // Throws unless every point index is < n.
  void CheckDomain(int n) const;

  auto operator<=>(const LabeledSample&) const = default;

 private:
  std::vector<LabeledPoint> pairs_;
};

// Labels the points of `points` (in order) by `h`.
LabeledSample LabelBy(const Hypothesis& h, std::span<const int> points);

bool Shatters(const HypothesisClass& c, std::span<const int> subset);

// Exact VC dimension by exhaustive search over subsets of increasing size.
// Exponential in the domain size; meant for n up to about 20.
int VcDimension(const HypothesisClass& c);

int EmpiricalMistakes(const Hypothesis& h, const LabeledSample& sample);
double EmpiricalError(const Hypothesis& h, const LabeledSample& sample);

// D-mass of {x : h(x) != target(x)}.
double TrueError(const Hypothesis& h, const Hypothesis& target,
                 const DistributionOverX& d);
double Disagreement(const Hypothesis& h1, const Hypothesis& h2,
                    const DistributionOverX& d);

// Indices of every hypothesis consistent with `sample`, in class order. An
// empty result means the sample is not realizable by the class.
std::vector<int> RealizingHypotheses(const HypothesisClass& c,
                                     const LabeledSample& sample);

// h_t(x) = 1 iff x >= t, for t = 0..n.
HypothesisClass MakeThresholds(int n);
// All 2^n labelings, n <= 20.
HypothesisClass MakeFullCube(int n);
// `count` distinct uniformly random rows; deterministic in `seed`.
HypothesisClass MakeRandomClass(int n, int count, std::uint64_t seed);

}  // namespace infogame

#endif  // INFOGAME_CORE_MODEL_H_
