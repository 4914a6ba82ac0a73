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

#include "infogame/game.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace infogame {

double ZeroOneLoss(int /*point*/, int predicted, int label) {
  return predicted == label ? 0.0 : 1.0;
}

std::vector<int> AllowedOutputs(const HypothesisClass& c,
                                const LabeledSample& sample, double eps,
                                const LossFn& loss) {
  sample.CheckDomain(c.domain_size());
  std::vector<int> out;
  const double budget = eps * sample.size() + 1e-9;
  for (int h = 0; h < c.size(); ++h) {
    double total = 0.0;
    for (const LabeledPoint& p : sample) total += loss(p.x, c[h](p.x), p.y);
    if (total <= budget) out.push_back(h);
  }
  return out;
}

GameKernel::GameKernel(const HypothesisClass& c, int m, double eps,
                       SampleKeying keying, const LossFn& loss)
    : num_hypotheses_(c.size()),
      eps_(eps),
      keying_(keying),
      multisets_(c.domain_size(), m) {
  if (c.empty()) throw std::invalid_argument("game over an empty class");
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be >= 0");
  for (int i = 0; i < multisets_.size(); ++i) {
    const Multiset& u = multisets_[i];
    if (keying == SampleKeying::kMultiset) {
      units_.push_back({i, 1.0, u});
      continue;
    }
    const double share = 1.0 / static_cast<double>(PermutationCount(u));
    Multiset order = u;
    do {
      units_.push_back({i, share, order});
    } while (std::next_permutation(order.begin(), order.end()));
  }
  const int num_units = static_cast<int>(units_.size());
  row_of_.assign(static_cast<size_t>(num_hypotheses_) * num_units, -1);
  for (int j = 0; j < num_units; ++j) {
    std::map<LabeledSample, int> local;
    for (int h = 0; h < num_hypotheses_; ++h) {
      LabeledSample sample = LabelBy(c[h], units_[j].points);
      auto [it, inserted] = local.emplace(sample, num_rows());
      if (inserted) {
        std::vector<int> allowed = AllowedOutputs(c, sample, eps, loss);
        if (allowed.empty()) {
          throw std::invalid_argument(
              "a realizable sample has no hypothesis within the allowed "
              "empirical error");
        }
        rows_.push_back({j, std::move(sample), std::move(allowed)});
      }
      row_of_[static_cast<size_t>(h) * num_units + j] = it->second;
    }
  }
}

GameKernel::Channel GameKernel::UniformChannel() const {
  Channel w(rows_.size());
  for (size_t r = 0; r < rows_.size(); ++r) {
    const size_t k = rows_[r].allowed.size();
    w[r].assign(k, 1.0 / static_cast<double>(k));
  }
  return w;
}

GameKernel::Channel GameKernel::FromLearnerChannel(
    const LearnerChannel& a) const {
  if (a.num_hypotheses() != num_hypotheses_ || a.m() != m()) {
    throw std::invalid_argument("channel does not match the game's class or m");
  }
  if (a.keying() == SampleKeying::kOrdered &&
      keying_ == SampleKeying::kMultiset) {
    throw std::invalid_argument(
        "an ordered channel cannot be evaluated on multiset units");
  }
  Channel w(rows_.size());
  for (size_t r = 0; r < rows_.size(); ++r) {
    const ChannelRow& src = a.Row(rows_[r].sample);
    const std::vector<int>& allowed = rows_[r].allowed;
    double inside = 0.0;
    w[r].resize(allowed.size());
    for (size_t k = 0; k < allowed.size(); ++k) {
      w[r][k] = src.probs[allowed[k]];
      inside += w[r][k];
    }
    if (std::abs(inside - 1.0) > kNormTolerance) {
      throw std::invalid_argument(
          "channel puts mass on outputs above the allowed empirical error");
    }
  }
  return w;
}

LearnerChannel GameKernel::ToLearnerChannel(const Channel& w) const {
  LearnerChannel a(num_hypotheses_, m(), keying_);
  for (size_t r = 0; r < rows_.size(); ++r) {
    ChannelRow row;
    row.probs.assign(num_hypotheses_, 0.0);
    double total = 0.0;
    for (double v : w[r]) total += v;
    for (size_t k = 0; k < rows_[r].allowed.size(); ++k) {
      row.probs[rows_[r].allowed[k]] = w[r][k] / total;
    }
    row.allowed = rows_[r].allowed;
    a.SetRow(rows_[r].sample, std::move(row));
  }
  return a;
}

void GameKernel::OutputLaw(const Channel& w, int h,
                           std::span<const double> mass,
                           std::span<double> q) const {
  std::fill(q.begin(), q.end(), 0.0);
  const int num_units = this->num_units();
  const int* rows = &row_of_[static_cast<size_t>(h) * num_units];
  for (int j = 0; j < num_units; ++j) {
    const double p = mass[units_[j].multiset];
    if (p <= 0.0) continue;
    const double a = p * units_[j].share;
    const int r = rows[j];
    const std::vector<int>& allowed = rows_[r].allowed;
    const std::vector<double>& wr = w[r];
    for (size_t k = 0; k < allowed.size(); ++k) q[allowed[k]] += a * wr[k];
  }
}

double GameKernel::Information(const Channel& w, int h,
                               std::span<const double> mass) const {
  const Term term{h, 1.0, mass};
  return Evaluate(w, std::span<const Term>(&term, 1), nullptr, nullptr);
}

namespace {

// Stand-in for KL(W_row || q) when q misses part of the row's support; only
// reachable for units the mass currently gives zero weight.
constexpr double kUnboundedKl = 1e6;

}  // namespace

double GameKernel::Evaluate(const Channel& w, std::span<const Term> terms,
                            Channel* grad_w,
                            std::vector<std::vector<double>>* grad_mass,
                            std::vector<double>* term_values) const {
  const int num_units = this->num_units();
  // Logs are taken once per channel entry and once per output law entry.
  Channel log_w(w.size());
  for (size_t r = 0; r < w.size(); ++r) {
    log_w[r].resize(w[r].size());
    for (size_t k = 0; k < w[r].size(); ++k) {
      log_w[r][k] = w[r][k] > 0.0 ? std::log(w[r][k]) : 0.0;
    }
  }
  std::vector<double> q(num_hypotheses_);
  std::vector<double> log_q(num_hypotheses_);
  double total = 0.0;
  if (grad_mass != nullptr) {
    grad_mass->assign(terms.size(), std::vector<double>(multisets_.size(), 0.0));
  }
  if (term_values != nullptr) term_values->assign(terms.size(), 0.0);
  for (size_t t = 0; t < terms.size(); ++t) {
    const Term& term = terms[t];
    OutputLaw(w, term.hypothesis, term.mass, q);
    for (int y = 0; y < num_hypotheses_; ++y) {
      log_q[y] = q[y] > 0.0 ? std::log(q[y]) : 0.0;
    }
    const int* rows = &row_of_[static_cast<size_t>(term.hypothesis) * num_units];
    double info = 0.0;
    for (int j = 0; j < num_units; ++j) {
      const double p = term.mass[units_[j].multiset];
      if (p <= 0.0 && grad_mass == nullptr) continue;
      const double a = p * units_[j].share;
      const int r = rows[j];
      const std::vector<int>& allowed = rows_[r].allowed;
      const std::vector<double>& wr = w[r];
      const std::vector<double>& log_wr = log_w[r];
      double kl = 0.0;
      for (size_t k = 0; k < allowed.size(); ++k) {
        const double v = wr[k];
        if (v <= 0.0) continue;
        if (q[allowed[k]] <= 0.0) {
          kl = kUnboundedKl;
          break;
        }
        const double log_ratio = log_wr[k] - log_q[allowed[k]];
        kl += v * log_ratio;
        if (grad_w != nullptr && a > 0.0) {
          (*grad_w)[r][k] += term.weight * a * log_ratio;
        }
      }
      info += a * kl;
      if (grad_mass != nullptr) {
        (*grad_mass)[t][units_[j].multiset] += term.weight * units_[j].share * kl;
      }
    }
    info = std::max(info, 0.0);
    if (term_values != nullptr) (*term_values)[t] = info;
    total += term.weight * info;
  }
  return total;
}

}  // namespace infogame
