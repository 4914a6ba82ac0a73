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
#include <bit>
#include <cmath>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "infogame/exact.h"
#include "infogame/info.h"
#include "test_support.h"

namespace infogame {
namespace {

double DistanceOracle(const Hypothesis& a, const Hypothesis& b,
                      const std::vector<double>& d) {
  double total = 0.0;
  for (size_t x = 0; x < d.size(); ++x) {
    if (a.labels()[x] != b.labels()[x]) total += d[x];
  }
  return total;
}

// Smallest subset, by exhaustive bitmask enumeration, whose radius balls
// cover the class.
int MinimalCoverSizeOracle(const HypothesisClass& c, const std::vector<double>& d,
                           double radius) {
  const int k = c.size();
  int best = k;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    const int size = std::popcount(mask);
    if (size >= best) continue;
    bool covers = true;
    for (int h = 0; h < k && covers; ++h) {
      bool hit = false;
      for (int f = 0; f < k && !hit; ++f) {
        hit = (mask >> f & 1u) && DistanceOracle(c[h], c[f], d) <= radius + 1e-12;
      }
      covers = hit;
    }
    if (covers) best = size;
  }
  return best;
}

// Scan of the stages in order, first member within error wins.
std::pair<int, int> NetsOracle(const HypothesisClass& c, const NetSequence& seq,
                               const LabeledSample& s, double eps) {
  const int allowed = static_cast<int>(std::floor(eps * s.size() + 1e-9));
  std::vector<std::vector<int>> stages;
  for (const EpsilonNet& net : seq.nets()) stages.push_back(net.members);
  std::vector<int> all(c.size());
  std::iota(all.begin(), all.end(), 0);
  stages.push_back(all);
  for (size_t j = 0; j < stages.size(); ++j) {
    for (int f : stages[j]) {
      int mistakes = 0;
      for (const LabeledPoint& p : s.pairs()) mistakes += c[f].labels()[p.x] != p.y;
      if (mistakes <= allowed) return {f, static_cast<int>(j) + 1};
    }
  }
  return {-1, -1};
}

TEST(CoverTest, ThresholdsAtQuarterRadius) {
  const HypothesisClass c = MakeThresholds(8);
  const DistributionOverX d = DistributionOverX::Uniform(8);
  const EpsilonNet greedy = GreedyCover(c, d, 0.25);
  const EpsilonNet exact = ExactMinimalCover(c, d, 0.25);
  EXPECT_LE(greedy.members.size(), 3u);
  EXPECT_EQ(exact.members.size(), 2u);
  EXPECT_EQ(MinimalCoverSizeOracle(c, d.probs(), 0.25), 2);
  EXPECT_TRUE(IsCover(c, d, greedy));
  EXPECT_TRUE(IsCover(c, d, exact));
  EXPECT_FALSE(IsCover(c, d, EpsilonNet{0.25, {exact.members[0]}}));
}

TEST(CoverTest, FullCubeAtRadiusZeroNeedsEveryPoint) {
  const HypothesisClass c = MakeFullCube(3);
  const DistributionOverX d = DistributionOverX::Uniform(3);
  EXPECT_EQ(ExactMinimalCover(c, d, 0.0).members.size(), 8u);
  EXPECT_EQ(GreedyCover(c, d, 0.0).members.size(), 8u);
}

TEST(CoverTest, ExactMatchesOracleAndGreedyIsAtLeastAsLarge) {
  Rng rng(3);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const int n = 3 + static_cast<int>(seed % 5);
    const HypothesisClass c =
        MakeRandomClass(n, std::min(1 << n, 3 + static_cast<int>(seed % 10)), seed);
    const std::vector<double> p = RandomSimplexPoint(rng, n);
    const DistributionOverX d(p);
    for (double radius : {0.05, 0.2, 0.4}) {
      const EpsilonNet exact = ExactMinimalCover(c, d, radius);
      const EpsilonNet greedy = GreedyCover(c, d, radius);
      EXPECT_TRUE(IsCover(c, d, exact));
      EXPECT_TRUE(IsCover(c, d, greedy));
      EXPECT_EQ(static_cast<int>(exact.members.size()),
                MinimalCoverSizeOracle(c, p, radius));
      EXPECT_GE(greedy.members.size(), exact.members.size());
    }
  }
}

TEST(CoverTest, MinimalCoverWithinHausslerBound) {
  for (int n : {4, 6, 8}) {
    const HypothesisClass c = MakeThresholds(n);
    const DistributionOverX d = DistributionOverX::Uniform(n);
    for (double radius : {0.5, 0.25, 0.125}) {
      EXPECT_LE(ExactMinimalCover(c, d, radius).members.size(),
                HausslerBound(radius, VcDimension(c)));
    }
  }
}

TEST(HausslerBoundTest, Examples) {
  const double e2 = std::exp(2.0);
  EXPECT_DOUBLE_EQ(HausslerBound(0.5, 0), 1.0);
  EXPECT_NEAR(HausslerBound(0.5, 1), 8 * e2, 1e-9);
  EXPECT_NEAR(HausslerBound(0.25, 2), 256 * e2 * e2, 1e-6);
}

TEST(NetSequenceTest, RadiiHalveAndFallbackIsTheClass) {
  const HypothesisClass c = MakeThresholds(8);
  const DistributionOverX d = DistributionOverX::Uniform(8);
  const NetSequence seq = BuildNetSequence(c, d, 0.25, CoverMode::kExact);
  ASSERT_GE(seq.nets().size(), 1u);
  for (size_t j = 0; j < seq.nets().size(); ++j) {
    EXPECT_DOUBLE_EQ(seq.nets()[j].radius, 0.25 / std::pow(2.0, j + 1));
    EXPECT_TRUE(IsCover(c, d, seq.nets()[j]));
  }
  // The smallest positive distance is 1/8, so radius 1/16 already certifies
  // zero and the sequence stops after two covers.
  EXPECT_EQ(seq.nets().size(), 2u);
  EXPECT_EQ(seq.fallback().members.size(), static_cast<size_t>(c.size()));
  EXPECT_EQ(seq.num_stages(), 3);
  EXPECT_THROW(BuildNetSequence(c, d, 0.0, CoverMode::kExact), std::invalid_argument);
  EXPECT_THROW(BuildNetSequence(c, d, 1.5, CoverMode::kExact), std::invalid_argument);
}

TEST(NetSequenceTest, SizesGrowWithinHausslerBound) {
  const HypothesisClass c = MakeThresholds(8);
  const NetSequence seq =
      BuildNetSequence(c, DistributionOverX::Uniform(8), 0.5, CoverMode::kExact);
  size_t previous = 0;
  for (const EpsilonNet& net : seq.nets()) {
    EXPECT_GE(net.members.size(), previous);
    EXPECT_LE(net.members.size(), HausslerBound(net.radius, 1));
    previous = net.members.size();
  }
}

TEST(NetSequenceTest, TrivialCases) {
  const HypothesisClass one(3, {Hypothesis::FromBitstring("101")});
  const NetSequence single =
      BuildNetSequence(one, DistributionOverX::Uniform(3), 0.5, CoverMode::kGreedy);
  EXPECT_EQ(single.num_stages(), 2);
  EXPECT_EQ(single.nets()[0].members, std::vector<int>{0});
  const NetSequence loose = BuildNetSequence(MakeThresholds(4), DistributionOverX::Uniform(4),
                                             1.0, CoverMode::kExact);
  EXPECT_DOUBLE_EQ(loose.nets()[0].radius, 0.5);
}

TEST(NetsLearnTest, ReplaysTheOracleOnEveryMultisetForOneTarget) {
  const HypothesisClass c = MakeThresholds(8);
  const NetSequence seq =
      BuildNetSequence(c, DistributionOverX::Uniform(8), 0.25, CoverMode::kExact);
  const MultisetIndex index(8, 6);
  for (int u = 0; u < index.size(); ++u) {
    const LabeledSample s = LabelBy(c[5], index[u]);
    const NetsOutput out = NetsLearn(c, seq, s, 0.25);
    const auto [f, j] = NetsOracle(c, seq, s, 0.25);
    EXPECT_EQ(out.hypothesis, f);
    EXPECT_EQ(out.stop_index, j);
  }
}

TEST(StoppingReportTest, TrivialCases) {
  const HypothesisClass one(3, {Hypothesis::FromBitstring("101")});
  const DistributionOverX u = DistributionOverX::Uniform(3);
  const NetSequence single = BuildNetSequence(one, u, 0.5, CoverMode::kExact);
  const StoppingReport r = MakeStoppingReport(single, one, IidToSymmetric(u, 2), 0, 0.5);
  EXPECT_DOUBLE_EQ(r.stop_pmf[0], 1.0);
  EXPECT_EQ(r.stop_entropy, 0.0);
  EXPECT_EQ(r.information, 0.0);

  const HypothesisClass c = MakeThresholds(4);
  const DistributionOverX d = DistributionOverX::Uniform(4);
  const NetSequence loose = BuildNetSequence(c, d, 1.0, CoverMode::kExact);
  for (int h = 0; h < c.size(); ++h) {
    const StoppingReport s = MakeStoppingReport(loose, c, IidToSymmetric(d, 3), h, 1.0);
    EXPECT_DOUBLE_EQ(s.stop_pmf[0], 1.0);
    EXPECT_NEAR(s.information, 0.0, 1e-12);
  }
}

TEST(NetsLearnTest, MatchesStraightLineOracle) {
  Rng rng(5);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    const HypothesisClass c =
        MakeRandomClass(n, std::min(1 << n, 4 + static_cast<int>(seed % 9)), seed);
    const DistributionOverX d(RandomSimplexPoint(rng, n));
    for (double eps : {0.5, 0.25}) {
      for (CoverMode mode : {CoverMode::kExact, CoverMode::kGreedy}) {
        const NetSequence seq = BuildNetSequence(c, d, eps, mode);
        for (const LabeledSample& s : RealizableSamples(c, 3, SampleKeying::kOrdered)) {
          const NetsOutput out = NetsLearn(c, seq, s, eps);
          const auto [f, j] = NetsOracle(c, seq, s, eps);
          EXPECT_EQ(out.hypothesis, f);
          EXPECT_EQ(out.stop_index, j);
        }
      }
    }
  }
}

TEST(NetsLearnTest, ZeroToleranceReturnsAConsistentHypothesis) {
  const HypothesisClass c = MakeRandomClass(5, 12, 9);
  const NetSequence seq =
      BuildNetSequence(c, DistributionOverX::Uniform(5), 1.0, CoverMode::kGreedy);
  for (const LabeledSample& s : RealizableSamples(c, 3, SampleKeying::kOrdered)) {
    EXPECT_EQ(EmpiricalMistakes(c[NetsLearn(c, seq, s, 0.0).hypothesis], s), 0);
  }
  const HypothesisClass one(2, {Hypothesis::FromBitstring("01")});
  const NetSequence single =
      BuildNetSequence(one, DistributionOverX::Uniform(2), 0.5, CoverMode::kExact);
  EXPECT_THROW(NetsLearn(one, single, LabeledSample({{0, 1}}), 0.0),
               std::invalid_argument);
}

TEST(NetsLearnTest, InvariantUnderReordering) {
  const HypothesisClass c = MakeThresholds(6);
  const NetSequence seq =
      BuildNetSequence(c, DistributionOverX::Uniform(6), 0.25, CoverMode::kExact);
  for (const LabeledSample& s : RealizableSamples(c, 3, SampleKeying::kOrdered)) {
    std::vector<LabeledPoint> pairs = s.pairs();
    std::reverse(pairs.begin(), pairs.end());
    EXPECT_EQ(NetsLearn(c, seq, s, 0.25), NetsLearn(c, seq, LabeledSample(pairs), 0.25));
    EXPECT_EQ(NetsLearn(c, seq, s, 0.25), NetsLearn(c, seq, s.Canonical(), 0.25));
  }
}

TEST(StoppingReportTest, TailAndChainHoldWithExactStopLaw) {
  Rng rng(7);
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int n = 3 + static_cast<int>(seed % 3);
    const HypothesisClass c = seed % 2 == 0
                                  ? MakeThresholds(n)
                                  : MakeRandomClass(n, std::min(1 << n, 6), seed);
    const DistributionOverX d(RandomSimplexPoint(rng, n));
    const int m = 2 + static_cast<int>(seed % 2);
    const double eps = seed % 3 == 0 ? 0.5 : 0.25;
    const NetSequence seq = BuildNetSequence(c, d, eps, CoverMode::kExact);
    const SymmetricSampleDistribution x = IidToSymmetric(d, m);
    const LearnerChannel a = DeterministicChannel(
        c, [&](const LabeledSample& s) { return NetsLearn(c, seq, s, eps).hypothesis; },
        m);
    for (int h = 0; h < c.size(); ++h) {
      const StoppingReport r = MakeStoppingReport(seq, c, x, h, eps);
      EXPECT_TRUE(r.tail_ok) << "seed " << seed << " h " << h;
      EXPECT_TRUE(r.chain_ok);
      EXPECT_TRUE(r.identity_ok);
      EXPECT_NEAR(r.information, exact::LearnerInformationBits(c, d, m, h, a), 1e-9);

      // Stop law by enumerating ordered tuples.
      std::vector<double> stop(seq.num_stages(), 0.0);
      std::vector<int> tuple(m, 0);
      while (true) {
        double p = 1.0;
        std::vector<LabeledPoint> pairs;
        for (int xi : tuple) {
          p *= d.probs()[xi];
          pairs.push_back({xi, c[h].labels()[xi]});
        }
        stop[NetsOracle(c, seq, LabeledSample(pairs), eps).second - 1] += p;
        int i = m - 1;
        while (i >= 0 && tuple[i] == n - 1) tuple[i--] = 0;
        if (i < 0) break;
        ++tuple[i];
      }
      ASSERT_EQ(r.stop_pmf.size(), stop.size());
      for (size_t j = 0; j < stop.size(); ++j) EXPECT_NEAR(r.stop_pmf[j], stop[j], 1e-12);
      EXPECT_LE(r.information, r.bound() + 1e-9);
    }
  }
}

}  // namespace
}  // namespace infogame
