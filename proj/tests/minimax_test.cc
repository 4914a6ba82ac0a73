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

#include "infogame/minimax.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include <gtest/gtest.h>

#include "infogame/analysis.h"
#include "infogame/game.h"
#include "infogame/info.h"
#include "infogame/nets.h"
#include "test_support.h"

namespace infogame {
namespace {

using Blocks = std::vector<std::vector<double>>;

// Minimizes f over a product of simplices by moving mass between pairs of
// coordinates of one block, with the step shrinking whenever no move helps.
// Adequate for the small smooth convex problems below.
Blocks PairwiseDescent(Blocks x, const std::function<double(const Blocks&)>& f,
                       double min_step = 1e-6) {
  double best = f(x);
  for (double step = 0.1; step >= min_step; step /= 2) {
    for (bool improved = true; improved;) {
      improved = false;
      for (auto& block : x) {
        for (size_t i = 0; i < block.size(); ++i) {
          for (size_t j = 0; j < block.size(); ++j) {
            if (i == j) continue;
            const double delta = std::min(step, block[i]);
            if (delta <= 0.0) continue;
            block[i] -= delta;
            block[j] += delta;
            const double v = f(x);
            if (v < best - 1e-13) {
              best = v;
              improved = true;
            } else {
              block[i] += delta;
              block[j] -= delta;
            }
          }
        }
      }
    }
  }
  return x;
}

struct OracleLearner {
  LearnerChannel channel;
  double value;
};

// Direct minimization of the average information over channels whose rows
// are supported on hypotheses within empirical error eps of the sample.
OracleLearner LearnerOracle(const HypothesisClass& c, const Prior& prior,
                            const SymmetricSampleDistribution& x, double eps) {
  const int m = x.m();
  const auto samples = RealizableSamples(c, m, SampleKeying::kMultiset);
  std::vector<std::vector<int>> allowed;
  Blocks start;
  for (const LabeledSample& s : samples) {
    std::vector<int> ok;
    for (int h = 0; h < c.size(); ++h) {
      if (EmpiricalMistakes(c[h], s) <= std::floor(eps * m + 1e-9)) ok.push_back(h);
    }
    allowed.push_back(ok);
    start.push_back(std::vector<double>(ok.size(), 1.0 / ok.size()));
  }
  auto build = [&](const Blocks& b) {
    LearnerChannel a(c.size(), m, SampleKeying::kMultiset);
    for (size_t r = 0; r < samples.size(); ++r) {
      std::vector<double> probs(c.size(), 0.0);
      for (size_t k = 0; k < allowed[r].size(); ++k) probs[allowed[r][k]] = b[r][k];
      a.SetRow(samples[r], {probs, allowed[r]});
    }
    return a;
  };
  const Blocks best = PairwiseDescent(start, [&](const Blocks& b) {
    return AverageInformation(c, prior, x, build(b));
  });
  LearnerChannel a = build(best);
  const double value = AverageInformation(c, prior, x, a);
  return {std::move(a), value};
}

// Direct maximization over all symmetric laws on X^m.
double NatureOracle(const HypothesisClass& c, const Prior& prior,
                    const LearnerChannel& a) {
  const MultisetIndex index(c.domain_size(), a.m());
  auto law = [&](const Blocks& b) {
    return SymmetricSampleDistribution::FromDense(index, b[0]);
  };
  double best = 0.0;
  for (int start = 0; start <= index.size(); ++start) {
    Blocks b = {std::vector<double>(index.size(), 1.0 / index.size())};
    if (start < index.size()) {
      std::fill(b[0].begin(), b[0].end(), 0.0);
      b[0][start] = 1.0;
    }
    b = PairwiseDescent(b, [&](const Blocks& v) {
      return -AverageInformation(c, prior, law(v), a);
    });
    best = std::max(best, AverageInformation(c, prior, law(b), a));
  }
  return best;
}

TEST(AllowedOutputsTest, Examples) {
  const HypothesisClass c = MakeThresholds(4);
  const LabeledSample s({{1, 1}, {2, 1}});
  EXPECT_EQ(AllowedOutputs(c, s, 0.0), (std::vector<int>{0, 1}));
  EXPECT_EQ(AllowedOutputs(c, s, 0.5), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(AllowedOutputs(c, s, 1.0), (std::vector<int>{0, 1, 2, 3, 4}));
  const LabeledSample mixed({{3, 0}, {0, 1}});
  EXPECT_TRUE(AllowedOutputs(c, mixed, 0.0).empty());

  const LabeledSample two({{1, 1}, {3, 0}});
  std::vector<int> scan;
  for (int t = 0; t <= 4; ++t) {
    const int mistakes = (1 >= t ? 0 : 1) + (3 >= t ? 1 : 0);
    if (mistakes <= 1) scan.push_back(t);
  }
  EXPECT_EQ(scan, (std::vector<int>{0, 1, 4}));
  EXPECT_EQ(AllowedOutputs(c, two, 0.5), scan);
}

TEST(BestResponseLearnerTest, MatchesDirectMinimization) {
  const HypothesisClass c = MakeThresholds(3);
  Rng rng(11);
  for (int trial = 0; trial < 3; ++trial) {
    const Prior prior = trial == 0 ? Prior::Uniform(4) : Prior(RandomSimplexPoint(rng, 4));
    const auto x = IidToSymmetric(DistributionOverX(RandomSimplexPoint(rng, 3)), 1);
    for (double eps : {0.0, 1.0}) {
      const LearnerBestResponse br = BestResponseLearner(c, prior, x, eps, 1e-5);
      const OracleLearner oracle = LearnerOracle(c, prior, x, eps);
      EXPECT_NEAR(br.value, AverageInformation(c, prior, x, br.channel), 1e-9);
      EXPECT_LE(br.lower_bound, oracle.value + 1e-9);
      EXPECT_LE(br.lower_bound, br.value + 1e-12);
      EXPECT_NEAR(br.value, oracle.value, 1e-4);
    }
  }
}

TEST(BestResponseLearnerTest, TwoPointSamplesMatchDirectMinimization) {
  const HypothesisClass c = MakeThresholds(3);
  const Prior prior = Prior::Uniform(4);
  const auto x = IidToSymmetric(DistributionOverX({0.5, 0.2, 0.3}), 2);
  const LearnerBestResponse br = BestResponseLearner(c, prior, x, 0.0, 1e-5);
  EXPECT_NEAR(br.value, LearnerOracle(c, prior, x, 0.0).value, 1e-4);
}

TEST(BestResponseLearnerTest, NonincreasingInEps) {
  const HypothesisClass c = MakeThresholds(4);
  const Prior prior = Prior::Uniform(5);
  const auto x = IidToSymmetric(DistributionOverX::Uniform(4), 2);
  double previous_lower = 1e9;
  for (double eps : {0.0, 0.5, 1.0}) {
    const LearnerBestResponse br = BestResponseLearner(c, prior, x, eps, 1e-4);
    EXPECT_LE(br.value, previous_lower + 1e-4);
    previous_lower = br.lower_bound;
  }
  EXPECT_NEAR(BestResponseLearner(c, prior, x, 1.0, 1e-4).value, 0.0, 1e-4);
}

TEST(BestResponseLearnerTest, MoreIterationsNeverHurt) {
  const HypothesisClass c = MakeThresholds(5);
  const Prior prior = Prior::Uniform(6);
  const auto x = IidToSymmetric(DistributionOverX({0.1, 0.3, 0.2, 0.15, 0.25}), 3);
  double previous = 1e9;
  for (int iters : {1, 2, 3, 5, 8, 13, 21, 34}) {
    const double v = BestResponseLearner(c, prior, x, 0.0, 1e-12, iters).value;
    EXPECT_LE(v, previous + 1e-12) << iters;
    previous = v;
  }
}

TEST(BestResponseLearnerTest, DominatedByTheNetsLearnerAcrossTheSet) {
  const HypothesisClass c = MakeThresholds(3);
  const Prior prior = Prior::Uniform(4);
  std::vector<SymmetricSampleDistribution> laws = SymmetricVertices(3, 2);
  Rng rng(21);
  for (int k = 0; k < 10; ++k) laws.push_back(testing::RandomSymmetric(3, 2, rng));
  for (const auto& x : laws) {
    const NetSequence seq = BuildNetSequence(c, Marginal(x), 1.0, CoverMode::kExact);
    double nets = 0.0;
    for (int h = 0; h < c.size(); ++h) {
      nets += prior[h] * MakeStoppingReport(seq, c, x, h, 0.0).information;
    }
    const LearnerBestResponse br = BestResponseLearner(c, prior, x, 0.0, 1e-6);
    EXPECT_LE(br.lower_bound, nets + 1e-6);
    EXPECT_LE(br.value, nets + 1e-6);
  }
}

TEST(BestResponseLearnerTest, NoWorseThanTheNetsLearner) {
  const HypothesisClass c = MakeThresholds(5);
  const DistributionOverX d({0.1, 0.3, 0.2, 0.15, 0.25});
  const auto x = IidToSymmetric(d, 2);
  const Prior prior = Prior::Uniform(6);
  const NetSequence seq = BuildNetSequence(c, d, 0.5, CoverMode::kExact);
  const LearnerChannel nets = DeterministicChannel(
      c, [&](const LabeledSample& s) { return NetsLearn(c, seq, s, 0.5).hypothesis; },
      2, SampleKeying::kMultiset);
  const LearnerBestResponse br = BestResponseLearner(c, prior, x, 0.5, 1e-4);
  EXPECT_LE(br.lower_bound, AverageInformation(c, prior, x, nets) + 1e-9);
  EXPECT_LE(br.value, AverageInformation(c, prior, x, nets) + 1e-4);
}

TEST(BestResponseNatureTest, MatchesDirectMaximization) {
  const HypothesisClass c = MakeThresholds(3);
  Rng rng(12);
  for (int trial = 0; trial < 3; ++trial) {
    const Prior prior = Prior(RandomSimplexPoint(rng, 4));
    const LearnerChannel a = testing::RandomChannel(c, 2, SampleKeying::kMultiset, rng);
    const NatureBestResponse br =
        BestResponseNature(c, prior, a, NatureStrategySet::FullSymmetric(2), 1e-5);
    const double oracle = NatureOracle(c, prior, a);
    EXPECT_NEAR(br.value, AverageInformation(c, prior, br.nature, a), 1e-9);
    EXPECT_GE(br.upper_bound, oracle - 1e-9);
    EXPECT_NEAR(br.value, oracle, 1e-4);
  }
}

TEST(BestResponseNatureTest, FirstConsistentSinglePointSamples) {
  const HypothesisClass c = MakeThresholds(3);
  const Prior prior = Prior::Uniform(4);
  const LearnerChannel a = testing::FirstConsistent(c, 1, SampleKeying::kMultiset);
  double oracle = 0.0;
  for (int i = 0; i <= 200; ++i) {
    for (int j = 0; i + j <= 200; ++j) {
      const DistributionOverX d({i / 200.0, j / 200.0, (200 - i - j) / 200.0});
      oracle = std::max(oracle, AverageInformation(c, prior, IidToSymmetric(d, 1), a));
    }
  }
  const NatureBestResponse br =
      BestResponseNature(c, prior, a, NatureStrategySet::FullSymmetric(1), 1e-7);
  EXPECT_GE(br.value, oracle - 1e-7);
  EXPECT_LE(br.value, oracle + 1e-4);

  const LearnerChannel constant =
      DeterministicChannel(c, [](const LabeledSample&) { return 0; }, 1, SampleKeying::kMultiset);
  EXPECT_NEAR(BestResponseNature(c, prior, constant, NatureStrategySet::FullSymmetric(1), 1e-6)
                  .value,
              0.0, 1e-12);
}

TEST(BestResponseNatureTest, IidHullStaysInTheHull) {
  const HypothesisClass c = MakeThresholds(3);
  Rng rng(13);
  const LearnerChannel a = testing::RandomChannel(c, 2, SampleKeying::kMultiset, rng);
  const std::vector<DistributionOverX> gens = {DistributionOverX({0.8, 0.1, 0.1}),
                                               DistributionOverX({0.1, 0.1, 0.8}),
                                               DistributionOverX::Uniform(3)};
  const Prior prior = Prior::Uniform(4);
  const NatureBestResponse br =
      BestResponseNature(c, prior, a, NatureStrategySet::IidHull(gens, 2), 1e-6);
  ASSERT_EQ(br.weights.size(), 3u);
  std::vector<SymmetricSampleDistribution> vertices;
  for (const auto& g : gens) vertices.push_back(IidToSymmetric(g, 2));
  const auto mix = Mix(vertices, br.weights);
  for (const auto& [u, p] : mix.mass()) EXPECT_NEAR(br.nature.MassOf(u), p, 1e-12);
  // Weight grid oracle.
  double oracle = 0.0;
  for (int i = 0; i <= 100; ++i) {
    for (int j = 0; i + j <= 100; ++j) {
      const std::vector<double> w = {i / 100.0, j / 100.0, (100 - i - j) / 100.0};
      oracle = std::max(oracle, AverageInformation(c, prior, Mix(vertices, w), a));
    }
  }
  EXPECT_GE(br.value, oracle - 1e-6);
  EXPECT_GE(br.upper_bound, br.value);
}

TEST(SaddleTest, SinglePointSamplesAgreeWithDirectOracles) {
  const HypothesisClass c = MakeThresholds(3);
  const Prior prior = Prior::Uniform(4);
  SaddleOptions options;
  options.tol = 1e-3;
  const SaddleResult r = SolveSaddle(c, prior, 0.0, NatureStrategySet::FullSymmetric(1), options);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.gap, 1e-3);
  // The averaged learner cannot be exploited beyond the value, and the
  // averaged nature cannot be answered much below it.
  EXPECT_LE(NatureOracle(c, prior, r.learner), r.value + 2e-3);
  EXPECT_GE(LearnerOracle(c, prior, r.nature, 0.0).value, r.value - 2e-3);
  EXPECT_LE(std::abs(r.max_min - r.min_max), r.gap + 1e-9);
}

TEST(SaddleTest, TwoPointSamplesAgreeWithDirectOracles) {
  const HypothesisClass c = MakeThresholds(3);
  const Prior prior = Prior::Uniform(4);
  const SaddleResult r =
      SolveSaddle(c, prior, 0.0, NatureStrategySet::FullSymmetric(2));
  EXPECT_TRUE(r.converged);
  EXPECT_LE(NatureOracle(c, prior, r.learner), r.value + 2e-3);
  EXPECT_GE(LearnerOracle(c, prior, r.nature, 0.0).value, r.value - 2e-3);
}

TEST(SaddleTest, TrivialGames) {
  const HypothesisClass one(3, {Hypothesis::FromBitstring("010")});
  const SaddleResult single =
      SolveSaddle(one, Prior::Uniform(1), 0.0, NatureStrategySet::FullSymmetric(2));
  EXPECT_TRUE(single.converged);
  EXPECT_NEAR(single.value, 0.0, 1e-9);

  const HypothesisClass c = MakeThresholds(3);
  const SaddleResult loose =
      SolveSaddle(c, Prior::Uniform(4), 1.0, NatureStrategySet::FullSymmetric(2));
  EXPECT_TRUE(loose.converged);
  EXPECT_NEAR(loose.value, 0.0, 1e-3);
}

TEST(DualityGapTest, NonnegativeForArbitraryPairs) {
  const HypothesisClass c = MakeThresholds(3);
  const Prior prior = Prior::Uniform(4);
  Rng rng(14);
  for (int trial = 0; trial < 5; ++trial) {
    const LearnerChannel a = testing::RandomChannel(c, 2, SampleKeying::kMultiset, rng);
    const auto x = testing::RandomSymmetric(3, 2, rng);
    const GapReport g =
        DualityGap(c, prior, a, x, 0.0, NatureStrategySet::FullSymmetric(2), 1e-4);
    EXPECT_GT(g.gap, 0.0);
    EXPECT_GE(g.certified_gap, g.gap - 1e-12);
    EXPECT_LE(g.learner_value, AverageInformation(c, prior, x, a) + 1e-9);
    EXPECT_GE(g.nature_value, AverageInformation(c, prior, x, a) - 1e-9);
  }
}

TEST(WorstCaseTest, SingleHypothesisGivesZero) {
  const HypothesisClass one(3, {Hypothesis::FromBitstring("110")});
  const WorstCaseResult r =
      WorstCaseValue(one, 0.0, 2, {DistributionOverX::Uniform(3)});
  EXPECT_NEAR(r.value, 0.0, 1e-12);
}

TEST(WorstCaseTest, PointMassGridGivesZero) {
  const HypothesisClass c = MakeThresholds(4);
  std::vector<DistributionOverX> grid;
  for (int x = 0; x < 4; ++x) grid.push_back(DistributionOverX::PointMass(4, x));
  const WorstCaseResult r = WorstCaseValue(c, 0.0, 2, grid);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 0.0, 1e-3);
  EXPECT_LE(r.lower_bound, r.value + 1e-12);
}

TEST(WorstCaseTest, AtLeastTheAverageGameOnTheSameGrid) {
  const HypothesisClass c = MakeThresholds(5);
  const std::vector<DistributionOverX> grid = {DistributionOverX::Uniform(5),
                                               DistributionOverX({0.4, 0.3, 0.1, 0.1, 0.1})};
  SaddleOptions options;
  options.tol = 1e-2;
  options.learner_step = 10.0;
  options.nature_step = 10.0;
  const WorstCaseResult worst = WorstCaseValue(c, 0.0, 2, grid, options);
  const SaddleResult avg = SolveSaddle(c, Prior::Uniform(6), 0.0,
                                       NatureStrategySet::IidHull(grid, 2));
  EXPECT_TRUE(worst.converged);
  EXPECT_TRUE(avg.converged);
  EXPECT_GE(worst.lower_bound, avg.max_min - 1e-9);
  EXPECT_GE(worst.value + 1e-9, worst.lower_bound);
  // The worst-case learner's worst cell really attains the reported value.
  const auto x = IidToSymmetric(grid[worst.worst_grid_index], 2);
  EXPECT_NEAR(LearnerInformation(c, x, worst.worst_hypothesis, worst.learner),
              worst.value, 1e-9);
}

}  // namespace
}  // namespace infogame
