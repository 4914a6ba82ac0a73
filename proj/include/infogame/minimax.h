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

// The average information game between learner channels and symmetric input
// laws: best-response oracles for both players, a saddle-point solver with an
// a-posteriori duality-gap certificate, and the worst-case game probe.
//
// The learner's strategies are channels whose rows only use hypotheses with
// empirical error at most eps. The solvers work with permutation-invariant
// channels keyed by labeled multisets; against symmetric input laws this
// loses nothing, since averaging a channel over coordinate permutations does
// not raise its information (convexity) under any symmetric law.

#ifndef INFOGAME_MINIMAX_H_
#define INFOGAME_MINIMAX_H_

#include <optional>
#include <string>
#include <vector>

#include "infogame/core_model.h"
#include "infogame/game.h"
#include "infogame/info.h"
#include "infogame/prob.h"

namespace infogame {

// Nature's convex strategy set over X^m.
struct NatureStrategySet {
  enum class Kind { kFullSymmetric, kIidHull };

  Kind kind = Kind::kFullSymmetric;
  int m = 1;
  std::vector<DistributionOverX> generators;  // kIidHull only

  static NatureStrategySet FullSymmetric(int m);
  static NatureStrategySet IidHull(std::vector<DistributionOverX> generators,
                                   int m);
};

struct LearnerBestResponse {
  LearnerChannel channel;
  double value = 0.0;        // achieved average information, bits
  double lower_bound = 0.0;  // certified lower bound on the optimum, bits
  int iterations = 0;
};

// Minimizes the prior-weighted information over eps-feasible channels for a
// fixed input law by alternating minimization over (rows, per-hypothesis
// reference output laws). Stops once value - lower_bound <= tol (bits) or
// after max_iter rounds.
LearnerBestResponse BestResponseLearner(const HypothesisClass& c,
                                        const Prior& prior,
                                        const SymmetricSampleDistribution& x,
                                        double eps, double tol,
                                        int max_iter = 200000,
                                        const LossFn& loss = ZeroOneLoss);

struct NatureBestResponse {
  SymmetricSampleDistribution nature;
  std::vector<double> weights;  // over the strategy set's vertices
  double value = 0.0;           // achieved average information, bits
  double upper_bound = 0.0;     // certified upper bound on the optimum, bits
  int iterations = 0;
};

// Maximizes the prior-weighted information of a fixed channel over the
// strategy set with pairwise conditional-gradient steps. Stops once the
// Frank-Wolfe gap is at most tol (bits) or after max_iter steps.
NatureBestResponse BestResponseNature(const HypothesisClass& c,
                                      const Prior& prior,
                                      const LearnerChannel& a,
                                      const NatureStrategySet& set, double tol,
                                      int max_iter = 200000);

struct SaddleOptions {
  double tol = 1e-3;          // target certified duality gap, bits
  int max_iter = 100000;      // mirror-prox iterations
  int check_every = 250;      // iterations between gap certifications
  double learner_step = 2.0;  // mirror step sizes (nats^-1)
  double nature_step = 2.0;
  LossFn loss = ZeroOneLoss;
};

struct SaddleResult {
  LearnerChannel learner;                // averaged learner strategy
  SymmetricSampleDistribution nature;    // averaged nature strategy
  std::vector<double> nature_weights;    // over the strategy set's vertices
  double value = 0.0;      // payoff at the averaged pair, bits
  double max_min = 0.0;    // learner best-response value at `nature`
  double min_max = 0.0;    // nature best-response value at `learner`
  double gap = 0.0;        // certified: nature upper bound - learner lower bound
  int iterations = 0;
  bool converged = false;  // gap <= tol
};

// Entropic mirror-prox on both players with iterate averaging; the gap of the
// averaged pair is certified with the two best-response oracles.
SaddleResult SolveSaddle(const HypothesisClass& c, const Prior& prior,
                         double eps, const NatureStrategySet& set,
                         const SaddleOptions& options = {});

struct GapReport {
  double nature_value = 0.0;   // best-response nature value against A
  double learner_value = 0.0;  // best-response learner value against X
  double gap = 0.0;            // nature_value - learner_value
  double certified_gap = 0.0;  // nature upper bound - learner lower bound
};

GapReport DualityGap(const HypothesisClass& c, const Prior& prior,
                     const LearnerChannel& a,
                     const SymmetricSampleDistribution& x, double eps,
                     const NatureStrategySet& set, double tol);

struct WorstCaseResult {
  LearnerChannel learner;
  double value = 0.0;        // max over (h, grid) of I for `learner`, bits
  double lower_bound = 0.0;  // certified lower bound on the min-max, bits
  int worst_hypothesis = 0;
  int worst_grid_index = 0;
  int iterations = 0;
  bool converged = false;
};

// min over eps-feasible channels of max over (h, X in grid) of
// I(S_h; A(S_h)) with X i.i.d. from the grid entry. The finite max is solved
// as a convex-linear saddle over weights on the (h, X) pairs. The value
// depends on the grid.
WorstCaseResult WorstCaseValue(const HypothesisClass& c, double eps, int m,
                               const std::vector<DistributionOverX>& grid,
                               const SaddleOptions& options = {});

// Grows a nature grid for WorstCaseValue by best response. Starts from
// pool[0]; each round solves the worst-case game on the current grid and adds
// the pool members on which the resulting learner leaks most (over h),
// doubling the grid until it holds `size` members.
std::vector<DistributionOverX> RefineNatureGrid(
    const HypothesisClass& c, double eps, int m,
    const std::vector<DistributionOverX>& pool, int size,
    const SaddleOptions& options = {});

}  // namespace infogame

#endif  // INFOGAME_MINIMAX_H_
