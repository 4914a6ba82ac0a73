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

#include "infogame/info.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace infogame {

FinitePMF::FinitePMF(std::vector<double> mass) : mass_(std::move(mass)) {
  CheckProbabilityVector(mass_, "pmf");
}

double Entropy(std::span<const double> p) {
  double h = 0.0;
  for (double v : p) {
    if (v < 0.0 || !std::isfinite(v)) {
      throw std::invalid_argument("entropy of a negative or non-finite mass");
    }
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

double Entropy(const FinitePMF& p) { return Entropy(p.mass()); }

JointPMF::JointPMF(int rows, int cols, std::vector<double> mass)
    : rows_(rows), cols_(cols), mass_(std::move(mass)) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("empty joint");
  if (static_cast<long long>(mass_.size()) !=
      static_cast<long long>(rows) * cols) {
    throw std::invalid_argument("joint mass has wrong size");
  }
  CheckProbabilityVector(mass_, "joint");
}

std::vector<double> JointPMF::RowMarginal() const {
  std::vector<double> out(rows_, 0.0);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out[r] += mass_[r * cols_ + c];
  }
  return out;
}

std::vector<double> JointPMF::ColMarginal() const {
  std::vector<double> out(cols_, 0.0);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out[c] += mass_[r * cols_ + c];
  }
  return out;
}

double MutualInformation(const JointPMF& joint) {
  const double mi = Entropy(joint.RowMarginal()) +
                    Entropy(joint.ColMarginal()) - Entropy(joint.mass());
  return std::max(mi, 0.0);
}

double MutualInformationKl(const JointPMF& joint) {
  const std::vector<double> pr = joint.RowMarginal();
  const std::vector<double> pc = joint.ColMarginal();
  double mi = 0.0;
  for (int r = 0; r < joint.rows(); ++r) {
    for (int c = 0; c < joint.cols(); ++c) {
      const double p = joint(r, c);
      if (p > 0.0) mi += p * std::log2(p / (pr[r] * pc[c]));
    }
  }
  return std::max(mi, 0.0);
}

LearnerChannel::LearnerChannel(int num_hypotheses, int m, SampleKeying keying)
    : num_hypotheses_(num_hypotheses), m_(m), keying_(keying) {
  if (num_hypotheses < 1) throw std::invalid_argument("channel over no hypotheses");
  if (m < 1) throw std::invalid_argument("sample size m must be >= 1");
}

LabeledSample LearnerChannel::Key(const LabeledSample& sample) const {
  return keying_ == SampleKeying::kMultiset ? sample.Canonical() : sample;
}

void LearnerChannel::SetRow(const LabeledSample& sample, ChannelRow row) {
  if (sample.size() != m_) throw std::invalid_argument("row sample has wrong size");
  if (static_cast<int>(row.probs.size()) != num_hypotheses_) {
    throw std::invalid_argument("row probability vector has wrong length");
  }
  CheckProbabilityVector(row.probs, "channel row");
  std::sort(row.allowed.begin(), row.allowed.end());
  row.allowed.erase(std::unique(row.allowed.begin(), row.allowed.end()),
                    row.allowed.end());
  for (int h : row.allowed) {
    if (h < 0 || h >= num_hypotheses_) {
      throw std::out_of_range("allowed hypothesis index out of range");
    }
  }
  for (int h = 0; h < num_hypotheses_; ++h) {
    if (row.probs[h] > 0.0 &&
        !std::binary_search(row.allowed.begin(), row.allowed.end(), h)) {
      throw std::invalid_argument("channel row puts mass outside its allowed support");
    }
  }
  rows_[Key(sample)] = std::move(row);
}

const ChannelRow* LearnerChannel::Find(const LabeledSample& sample) const {
  auto it = rows_.find(Key(sample));
  return it == rows_.end() ? nullptr : &it->second;
}

const ChannelRow& LearnerChannel::Row(const LabeledSample& sample) const {
  const ChannelRow* row = Find(sample);
  if (row == nullptr) {
    throw std::out_of_range("missing channel row for a supported sample");
  }
  return *row;
}

void LearnerChannel::CheckComplete(const HypothesisClass& c) const {
  if (c.size() != num_hypotheses_) {
    throw std::invalid_argument("channel and class sizes differ");
  }
  for (const LabeledSample& s : RealizableSamples(c, m_, keying_)) {
    if (Find(s) == nullptr) {
      throw std::out_of_range("channel has no row for a realizable sample");
    }
  }
}

namespace {

// Distinct restrictions of the class to `points`, as labeled samples.
std::vector<LabeledSample> PatternsOn(const HypothesisClass& c,
                                      std::span<const int> points) {
  std::set<LabeledSample> patterns;
  for (const Hypothesis& h : c.hypotheses()) patterns.insert(LabelBy(h, points));
  return {patterns.begin(), patterns.end()};
}

}  // namespace

std::vector<LabeledSample> RealizableSamples(const HypothesisClass& c, int m,
                                             SampleKeying keying) {
  if (m < 1) throw std::invalid_argument("sample size m must be >= 1");
  std::vector<LabeledSample> out;
  const int n = c.domain_size();
  if (keying == SampleKeying::kMultiset) {
    MultisetIndex index(n, m);
    for (int i = 0; i < index.size(); ++i) {
      for (LabeledSample& s : PatternsOn(c, index[i])) out.push_back(std::move(s));
    }
    return out;
  }
  std::vector<int> tuple(m, 0);
  while (true) {
    for (LabeledSample& s : PatternsOn(c, tuple)) out.push_back(std::move(s));
    int i = m - 1;
    while (i >= 0 && tuple[i] == n - 1) tuple[i--] = 0;
    if (i < 0) break;
    ++tuple[i];
  }
  return out;
}

JointPMF LearnerJoint(const HypothesisClass& c,
                      const SymmetricSampleDistribution& x, int h,
                      const LearnerChannel& a) {
  if (h < 0 || h >= c.size()) throw std::out_of_range("hypothesis index");
  if (a.num_hypotheses() != c.size()) {
    throw std::invalid_argument("channel and class sizes differ");
  }
  if (a.m() != x.m()) throw std::invalid_argument("channel and law disagree on m");
  const int cols = c.size();
  std::vector<double> mass;
  auto add_row = [&](const LabeledSample& s, double p) {
    const ChannelRow& row = a.Row(s);
    for (int y = 0; y < cols; ++y) mass.push_back(p * row.probs[y]);
  };
  if (a.keying() == SampleKeying::kMultiset) {
    for (const auto& [u, p] : x.mass()) add_row(LabelBy(c[h], u), p);
  } else {
    const SampleLaw law = MakeSampleLaw(x, c[h]);
    for (const auto& [s, p] : law.entries()) add_row(s, p);
  }
  const int rows = static_cast<int>(mass.size()) / cols;
  return JointPMF(rows, cols, std::move(mass));
}

double LearnerInformation(const HypothesisClass& c,
                          const SymmetricSampleDistribution& x, int h,
                          const LearnerChannel& a) {
  return MutualInformation(LearnerJoint(c, x, h, a));
}

double OutputEntropy(const HypothesisClass& c,
                     const SymmetricSampleDistribution& x, int h,
                     const LearnerChannel& a) {
  return Entropy(LearnerJoint(c, x, h, a).ColMarginal());
}

std::vector<double> PerHypothesisInformation(
    const HypothesisClass& c, const SymmetricSampleDistribution& x,
    const LearnerChannel& a) {
  std::vector<double> out(c.size());
  for (int h = 0; h < c.size(); ++h) out[h] = LearnerInformation(c, x, h, a);
  return out;
}

double AverageInformation(const HypothesisClass& c, const Prior& prior,
                          const SymmetricSampleDistribution& x,
                          const LearnerChannel& a) {
  if (prior.size() != c.size()) {
    throw std::invalid_argument("prior and class sizes differ");
  }
  double total = 0.0;
  for (int h = 0; h < c.size(); ++h) {
    if (prior[h] > 0.0) total += prior[h] * LearnerInformation(c, x, h, a);
  }
  return total;
}

LearnerChannel DeterministicChannel(const HypothesisClass& c,
                                    const DeterministicLearner& learner, int m,
                                    SampleKeying keying) {
  LearnerChannel channel(c.size(), m, keying);
  for (const LabeledSample& s : RealizableSamples(c, m, keying)) {
    const int out = learner(s);
    if (out < 0 || out >= c.size()) {
      throw std::out_of_range("learner output " + std::to_string(out) +
                              " is not a hypothesis of the class");
    }
    ChannelRow row;
    row.probs.assign(c.size(), 0.0);
    row.probs[out] = 1.0;
    row.allowed = {out};
    channel.SetRow(s, std::move(row));
  }
  return channel;
}

}  // namespace infogame
