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

// Dense, index-based form of the information games on a fixed class and
// sample size. Samples are grouped into "units" (one per labeled multiset, or
// one per ordering of it) and every (hypothesis, unit) pair maps to a channel
// row. Quantities here are in nats; the public minimax API converts to bits.

#ifndef INFOGAME_GAME_H_
#define INFOGAME_GAME_H_

#include <functional>
#include <span>
#include <vector>

#include "infogame/core_model.h"
#include "infogame/info.h"
#include "infogame/prob.h"

namespace infogame {

// Loss of predicting `predicted` at `point` when the label is `label`;
// expected in [0, 1] and zero when predicted == label.
using LossFn = std::function<double(int point, int predicted, int label)>;

double ZeroOneLoss(int point, int predicted, int label);

// Hypotheses whose empirical loss on `sample` is at most eps, in class order.
// Empty when nothing qualifies; callers decide whether that is an error.
std::vector<int> AllowedOutputs(const HypothesisClass& c,
                                const LabeledSample& sample, double eps,
                                const LossFn& loss = ZeroOneLoss);

class GameKernel {
 public:
  struct Unit {
    int multiset = 0;
    double share = 1.0;  // fraction of the multiset's mass on this unit
    std::vector<int> points;
  };
  struct Row {
    int unit = 0;
    LabeledSample sample;
    std::vector<int> allowed;  // hypothesis indices, sorted
  };
  // Per row, probabilities over row.allowed.
  using Channel = std::vector<std::vector<double>>;

  // A weighted I(S_h; A(S_h)) summand whose points follow `mass` (dense over
  // multisets).
  struct Term {
    int hypothesis = 0;
    double weight = 0.0;
    std::span<const double> mass;
  };

  // Throws std::invalid_argument if some realizable sample has no allowed
  // output.
  GameKernel(const HypothesisClass& c, int m, double eps,
             SampleKeying keying = SampleKeying::kMultiset,
             const LossFn& loss = ZeroOneLoss);

  int num_hypotheses() const { return num_hypotheses_; }
  int m() const { return multisets_.m(); }
  double eps() const { return eps_; }
  SampleKeying keying() const { return keying_; }
  const MultisetIndex& multisets() const { return multisets_; }
  int num_units() const { return static_cast<int>(units_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const Unit& unit(int i) const { return units_[i]; }
  const Row& row(int r) const { return rows_[r]; }
  int RowOf(int h, int unit) const { return row_of_[h * num_units() + unit]; }

  Channel UniformChannel() const;
  // Throws if a row is missing or puts mass outside the kernel's allowed set.
  Channel FromLearnerChannel(const LearnerChannel& a) const;
  LearnerChannel ToLearnerChannel(const Channel& w) const;

  // q_h(y) = sum over units of mass(u) share W(y | row(h, u)).
  void OutputLaw(const Channel& w, int h, std::span<const double> mass,
                 std::span<double> q) const;

  // I(S_h; A(S_h)) for points following `mass`.
  double Information(const Channel& w, int h,
                     std::span<const double> mass) const;

  // Returns sum_t weight_t I_t. When given, adds the channel gradient into
  // `grad_w`, sets grad_mass[t][u] to weight_t * KL(W_row || q_t) summed over
  // the units of u (the mass gradient up to an additive constant), and sets
  // term_values[t] to the unweighted I_t.
  double Evaluate(const Channel& w, std::span<const Term> terms,
                  Channel* grad_w,
                  std::vector<std::vector<double>>* grad_mass,
                  std::vector<double>* term_values = nullptr) const;

 private:
  int num_hypotheses_;
  double eps_;
  SampleKeying keying_;
  MultisetIndex multisets_;
  std::vector<Unit> units_;
  std::vector<Row> rows_;
  std::vector<int> row_of_;
};

}  // namespace infogame

#endif  // INFOGAME_GAME_H_
