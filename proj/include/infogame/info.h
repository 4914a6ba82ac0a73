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

// Exact entropy and mutual information over finite joints, and learners
// represented as channels from realizable samples to hypotheses.
//
// All information quantities are in bits.

#ifndef INFOGAME_INFO_H_
#define INFOGAME_INFO_H_

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "infogame/core_model.h"
#include "infogame/prob.h"

namespace infogame {

class FinitePMF {
 public:
  explicit FinitePMF(std::vector<double> mass);
  int size() const { return static_cast<int>(mass_.size()); }
  double operator[](int i) const { return mass_[i]; }
  const std::vector<double>& mass() const { return mass_; }

 private:
  std::vector<double> mass_;
};

// sum p log2(1/p) with 0 log(1/0) = 0. Throws on negative mass; does not
// require normalization.
double Entropy(std::span<const double> p);
double Entropy(const FinitePMF& p);

// Row-major joint over (row outcome, column outcome).
class JointPMF {
 public:
  JointPMF(int rows, int cols, std::vector<double> mass);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double operator()(int r, int c) const { return mass_[r * cols_ + c]; }
  const std::vector<double>& mass() const { return mass_; }
  std::vector<double> RowMarginal() const;
  std::vector<double> ColMarginal() const;

 private:
  int rows_;
  int cols_;
  std::vector<double> mass_;
};

// H(rows) + H(cols) - H(joint), clamped at zero against rounding.
double MutualInformation(const JointPMF& joint);
// sum p(r,c) log2(p(r,c) / (p(r) p(c))); the same quantity by another route.
double MutualInformationKl(const JointPMF& joint);

// How channel rows are keyed. kMultiset rows are stored on canonical (sorted)
// samples and apply to every ordering of that sample, which is how
// permutation-invariant learners are represented.
enum class SampleKeying { kOrdered, kMultiset };

struct ChannelRow {
  std::vector<double> probs;  // over hypothesis indices
  std::vector<int> allowed;   // sorted; support of probs must lie inside
};

// A (possibly randomized) learner: for each realizable sample, a distribution
// over the hypotheses of a fixed class.
class LearnerChannel {
 public:
  LearnerChannel(int num_hypotheses, int m, SampleKeying keying);

  int num_hypotheses() const { return num_hypotheses_; }
  int m() const { return m_; }
  SampleKeying keying() const { return keying_; }
  const std::map<LabeledSample, ChannelRow>& rows() const { return rows_; }

  // Validates the row and stores it under the key of `sample`.
  void SetRow(const LabeledSample& sample, ChannelRow row);
  // nullptr when the sample has no row.
  const ChannelRow* Find(const LabeledSample& sample) const;
  // Throws std::out_of_range when the sample has no row.
  const ChannelRow& Row(const LabeledSample& sample) const;
  // Throws unless every sample realizable by `c` at size m has a row.
  void CheckComplete(const HypothesisClass& c) const;

  LabeledSample Key(const LabeledSample& sample) const;

 private:
  int num_hypotheses_;
  int m_;
  SampleKeying keying_;
  std::map<LabeledSample, ChannelRow> rows_;
};

// Every sample of size m realizable by `c`; canonical samples only under
// kMultiset keying. Ordered enumeration visits n^m point tuples.
std::vector<LabeledSample> RealizableSamples(const HypothesisClass& c, int m,
                                             SampleKeying keying);

// Joint of (S_h, A(S_h)) for S_h drawn from `x` and labeled by hypothesis
// `h`. Rows follow the channel keying: ordered samples, or labeled multisets.
JointPMF LearnerJoint(const HypothesisClass& c,
                      const SymmetricSampleDistribution& x, int h,
                      const LearnerChannel& a);

// I(S_h; A(S_h)).
double LearnerInformation(const HypothesisClass& c,
                          const SymmetricSampleDistribution& x, int h,
                          const LearnerChannel& a);

// H(A(S_h)).
double OutputEntropy(const HypothesisClass& c,
                     const SymmetricSampleDistribution& x, int h,
                     const LearnerChannel& a);

// I(S_h; A(S_h)) for every h in class order.
std::vector<double> PerHypothesisInformation(
    const HypothesisClass& c, const SymmetricSampleDistribution& x,
    const LearnerChannel& a);

// E_{h ~ prior} I(S_h; A(S_h)); hypotheses with zero weight are skipped.
double AverageInformation(const HypothesisClass& c, const Prior& prior,
                          const SymmetricSampleDistribution& x,
                          const LearnerChannel& a);

using DeterministicLearner = std::function<int(const LabeledSample&)>;

// Point-mass rows from `learner` on every realizable sample of size m. Under
// kMultiset keying the learner sees canonical samples.
LearnerChannel DeterministicChannel(const HypothesisClass& c,
                                    const DeterministicLearner& learner, int m,
                                    SampleKeying keying = SampleKeying::kOrdered);

}  // namespace infogame

#endif  // INFOGAME_INFO_H_
