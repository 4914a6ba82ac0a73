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
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace infogame {

namespace {

using Channel = GameKernel::Channel;
using Term = GameKernel::Term;

constexpr double kLn2 = std::numbers::ln2;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Nature's strategies as weights over the vertices of its strategy set:
// point masses on multisets, or i.i.d. generators.
class NatureSpace {
 public:
  NatureSpace(const GameKernel& kernel, const NatureStrategySet& set)
      : num_multisets_(kernel.multisets().size()),
        full_(set.kind == NatureStrategySet::Kind::kFullSymmetric) {
    if (set.m != kernel.m()) {
      throw std::invalid_argument("strategy set and game disagree on m");
    }
    if (full_) return;
    if (set.generators.empty()) {
      throw std::invalid_argument("i.i.d. hull needs at least one generator");
    }
    for (const DistributionOverX& d : set.generators) {
      if (d.size() != kernel.multisets().domain_size()) {
        throw std::invalid_argument("generator has the wrong domain size");
      }
      vertices_.push_back(IidToSymmetric(d, set.m).Dense(kernel.multisets()));
    }
  }

  int dim() const {
    return full_ ? num_multisets_ : static_cast<int>(vertices_.size());
  }

  std::vector<double> ToMass(std::span<const double> lambda) const {
    if (full_) return {lambda.begin(), lambda.end()};
    std::vector<double> mass(num_multisets_, 0.0);
    for (size_t k = 0; k < vertices_.size(); ++k) {
      if (lambda[k] == 0.0) continue;
      for (int u = 0; u < num_multisets_; ++u) {
        mass[u] += lambda[k] * vertices_[k][u];
      }
    }
    return mass;
  }

  std::vector<double> PullBack(std::span<const double> grad_mass) const {
    if (full_) return {grad_mass.begin(), grad_mass.end()};
    std::vector<double> grad(vertices_.size(), 0.0);
    for (size_t k = 0; k < vertices_.size(); ++k) {
      for (int u = 0; u < num_multisets_; ++u) {
        if (vertices_[k][u] > 0.0) grad[k] += vertices_[k][u] * grad_mass[u];
      }
    }
    return grad;
  }

 private:
  int num_multisets_;
  bool full_;
  std::vector<std::vector<double>> vertices_;
};

std::vector<Term> AverageTerms(const Prior& prior,
                               std::span<const double> mass) {
  std::vector<Term> terms;
  for (int h = 0; h < prior.size(); ++h) {
    if (prior[h] > 0.0) terms.push_back({h, prior[h], mass});
  }
  return terms;
}

struct ChannelMin {
  Channel w;
  double value = 0.0;  // nats
  double lower = 0.0;  // nats
  int iterations = 0;
};

// Alternating minimization of sum_t weight_t I_t over the channel: the
// references r_t are set to the output laws q_t, then every row becomes the
// normalized weighted geometric mean of the references over its allowed set.
// Each round also yields the lower bound
//   G*(r) - sum_t weight_t (max_y q'_t(y) / r_t(y) - 1),
// the linearization of the convex function G*(r) = min_W G(W, r).
ChannelMin MinimizeChannel(const GameKernel& kernel, std::span<const Term> terms,
                           Channel w, double tol, int max_iter) {
  const int num_units = kernel.num_units();
  const int num_rows = kernel.num_rows();
  const int num_h = kernel.num_hypotheses();
  std::vector<std::vector<double>> ref(terms.size(), std::vector<double>(num_h));
  std::vector<double> q(num_h);
  std::vector<double> row_weight(num_rows);
  Channel acc(num_rows);
  for (int r = 0; r < num_rows; ++r) acc[r].resize(kernel.row(r).allowed.size());

  ChannelMin best{w, kernel.Evaluate(w, terms, nullptr, nullptr), -kInf, 0};
  for (int iter = 1; iter <= max_iter; ++iter) {
    for (size_t t = 0; t < terms.size(); ++t) {
      kernel.OutputLaw(w, terms[t].hypothesis, terms[t].mass, ref[t]);
    }
    std::fill(row_weight.begin(), row_weight.end(), 0.0);
    for (auto& a : acc) std::fill(a.begin(), a.end(), 0.0);
    for (size_t t = 0; t < terms.size(); ++t) {
      const Term& term = terms[t];
      for (int j = 0; j < num_units; ++j) {
        const GameKernel::Unit& unit = kernel.unit(j);
        const double p = term.mass[unit.multiset];
        if (p <= 0.0) continue;
        const double a = term.weight * p * unit.share;
        const int r = kernel.RowOf(term.hypothesis, j);
        row_weight[r] += a;
        const std::vector<int>& allowed = kernel.row(r).allowed;
        for (size_t k = 0; k < allowed.size(); ++k) {
          acc[r][k] += a * std::log(ref[t][allowed[k]]);
        }
      }
    }
    double g_star = 0.0;
    for (int r = 0; r < num_rows; ++r) {
      if (row_weight[r] <= 0.0) continue;
      double top = -kInf;
      for (double& v : acc[r]) {
        v /= row_weight[r];
        top = std::max(top, v);
      }
      double z = 0.0;
      for (double v : acc[r]) z += std::exp(v - top);
      const double log_z = top + std::log(z);
      for (size_t k = 0; k < acc[r].size(); ++k) {
        w[r][k] = std::exp(acc[r][k] - log_z);
      }
      g_star -= row_weight[r] * log_z;
    }
    double penalty = 0.0;
    for (size_t t = 0; t < terms.size(); ++t) {
      kernel.OutputLaw(w, terms[t].hypothesis, terms[t].mass, q);
      double ratio = 0.0;
      double total = 0.0;
      for (int y = 0; y < num_h; ++y) {
        total += q[y];
        if (q[y] <= 0.0) continue;
        ratio = ref[t][y] > 0.0 ? std::max(ratio, q[y] / ref[t][y]) : kInf;
      }
      penalty += terms[t].weight * (ratio - total);
    }
    best.lower = std::max(best.lower, g_star - penalty);
    const double value = kernel.Evaluate(w, terms, nullptr, nullptr);
    if (value < best.value) {
      best.value = value;
      best.w = w;
    }
    best.iterations = iter;
    if (best.value - best.lower <= tol) break;
  }
  best.lower = std::min(best.lower, best.value);
  return best;
}

struct MassMax {
  std::vector<double> lambda;
  double value = 0.0;  // nats
  double upper = 0.0;  // nats
  int iterations = 0;
};

// Prior-weighted information of `w` at nature weights `lambda`, with the
// gradient in lambda when requested.
double AveragePayoff(const GameKernel& kernel, const NatureSpace& space,
                     const Prior& prior, const Channel& w,
                     std::span<const double> lambda, Channel* grad_w,
                     std::vector<double>* grad_lambda) {
  const std::vector<double> mass = space.ToMass(lambda);
  const std::vector<Term> terms = AverageTerms(prior, mass);
  if (grad_lambda == nullptr) return kernel.Evaluate(w, terms, grad_w, nullptr);
  std::vector<std::vector<double>> grad_mass;
  const double value = kernel.Evaluate(w, terms, grad_w, &grad_mass);
  std::vector<double> total(mass.size(), 0.0);
  for (const auto& g : grad_mass) {
    for (size_t u = 0; u < g.size(); ++u) total[u] += g[u];
  }
  *grad_lambda = space.PullBack(total);
  return value;
}

// Pairwise Frank-Wolfe ascent of the concave payoff over nature weights.
// The Frank-Wolfe gap bounds the distance to the optimum from above.
MassMax MaximizeAverage(const GameKernel& kernel, const NatureSpace& space,
                        const Prior& prior, const Channel& w,
                        std::vector<double> lambda, double tol, int max_iter) {
  const int dim = space.dim();
  if (lambda.empty()) lambda.assign(dim, 1.0 / dim);
  MassMax best{lambda, -kInf, kInf, 0};
  std::vector<double> grad;
  std::vector<double> trial(dim);
  for (int iter = 1; iter <= max_iter; ++iter) {
    const double value =
        AveragePayoff(kernel, space, prior, w, lambda, nullptr, &grad);
    if (value > best.value) {
      best.value = value;
      best.lambda = lambda;
    }
    int toward = 0;
    int away = -1;
    double inner = 0.0;
    for (int k = 0; k < dim; ++k) {
      inner += lambda[k] * grad[k];
      if (grad[k] > grad[toward]) toward = k;
      if (lambda[k] > 0.0 && (away < 0 || grad[k] < grad[away])) away = k;
    }
    const double fw_gap = grad[toward] - inner;
    best.upper = std::min(best.upper, value + std::max(fw_gap, 0.0));
    best.iterations = iter;
    if (best.upper - best.value <= tol || toward == away) break;

    // Golden-section search for the step moving mass from `away` to
    // `toward`; the payoff is concave along the segment.
    const double step_max = lambda[away];
    auto at = [&](double step) {
      trial = lambda;
      trial[away] -= step;
      trial[toward] += step;
      if (trial[away] < 0.0) trial[away] = 0.0;
      return AveragePayoff(kernel, space, prior, w, trial, nullptr, nullptr);
    };
    constexpr double kGolden = 0.6180339887498949;
    double lo = 0.0;
    double hi = step_max;
    double x1 = hi - kGolden * (hi - lo);
    double x2 = lo + kGolden * (hi - lo);
    double f1 = at(x1);
    double f2 = at(x2);
    for (int s = 0; s < 48 && hi - lo > 1e-14; ++s) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + kGolden * (hi - lo);
        f2 = at(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - kGolden * (hi - lo);
        f1 = at(x1);
      }
    }
    double step = 0.5 * (lo + hi);
    // The full step drops the away vertex; take it when it is as good.
    if (at(step_max) >= at(step)) step = step_max;
    lambda[away] -= step;
    lambda[toward] += step;
    if (step == step_max) lambda[away] = 0.0;
  }
  return best;
}

// One entropic mirror step on every channel row.
void StepChannel(const Channel& base, const Channel& grad, double step,
                 Channel& out) {
  for (size_t r = 0; r < base.size(); ++r) {
    const std::vector<double>& b = base[r];
    std::vector<double>& o = out[r];
    double top = -kInf;
    for (size_t k = 0; k < b.size(); ++k) {
      o[k] = b[k] > 0.0 ? std::log(b[k]) - step * grad[r][k] : -kInf;
      top = std::max(top, o[k]);
    }
    double total = 0.0;
    for (double& v : o) {
      v = std::exp(v - top);
      total += v;
    }
    for (double& v : o) v /= total;
  }
}

// One entropic mirror step (ascent) on nature weights.
void StepNature(const std::vector<double>& base,
                const std::vector<double>& grad, double step,
                std::vector<double>& out) {
  double top = -kInf;
  for (size_t k = 0; k < base.size(); ++k) {
    out[k] = base[k] > 0.0 ? std::log(base[k]) + step * grad[k] : -kInf;
    top = std::max(top, out[k]);
  }
  double total = 0.0;
  for (double& v : out) {
    v = std::exp(v - top);
    total += v;
  }
  for (double& v : out) v /= total;
}

Channel ZeroLike(const Channel& w) {
  Channel z(w.size());
  for (size_t r = 0; r < w.size(); ++r) z[r].assign(w[r].size(), 0.0);
  return z;
}

// Mirror-prox on (channel, nature weights) with uniform averaging of the
// extrapolated points. `gradients(w, lambda, grad_w, grad_lambda)` fills both
// gradients (grad_w arrives zeroed); `certify(w_avg, lambda_avg)` returns the
// certified gap of the averaged pair in nats.
template <typename Gradients, typename Certify>
int RunMirrorProx(Channel w, std::vector<double> lambda,
                  const SaddleOptions& options, Gradients gradients,
                  Certify certify, Channel& w_avg,
                  std::vector<double>& lambda_avg, bool& converged) {
  const double tol = options.tol * kLn2;
  Channel w_half = w;
  Channel grad_w = ZeroLike(w);
  Channel sum_w = ZeroLike(w);
  std::vector<double> lambda_half = lambda;
  std::vector<double> grad_lambda(lambda.size());
  std::vector<double> sum_lambda(lambda.size(), 0.0);
  converged = false;
  int iter = 0;
  auto averaged = [&](int count) {
    for (size_t r = 0; r < w.size(); ++r) {
      for (size_t k = 0; k < w[r].size(); ++k) {
        w_avg[r][k] = sum_w[r][k] / count;
      }
    }
    for (size_t k = 0; k < lambda.size(); ++k) {
      lambda_avg[k] = sum_lambda[k] / count;
    }
  };
  w_avg = ZeroLike(w);
  lambda_avg.assign(lambda.size(), 0.0);
  while (iter < options.max_iter) {
    ++iter;
    gradients(w, lambda, grad_w, grad_lambda);
    StepChannel(w, grad_w, options.learner_step, w_half);
    StepNature(lambda, grad_lambda, options.nature_step, lambda_half);
    gradients(w_half, lambda_half, grad_w, grad_lambda);
    StepChannel(w, grad_w, options.learner_step, w);
    StepNature(lambda, grad_lambda, options.nature_step, lambda);
    for (size_t r = 0; r < w.size(); ++r) {
      for (size_t k = 0; k < w[r].size(); ++k) sum_w[r][k] += w_half[r][k];
    }
    for (size_t k = 0; k < lambda.size(); ++k) sum_lambda[k] += lambda_half[k];
    if (iter % options.check_every == 0 || iter == options.max_iter) {
      averaged(iter);
      if (certify(w_avg, lambda_avg) <= tol) {
        converged = true;
        break;
      }
    }
  }
  if (!converged) averaged(iter);
  return iter;
}

void ResetGradient(Channel& g) {
  for (auto& row : g) std::fill(row.begin(), row.end(), 0.0);
}

}  // namespace

NatureStrategySet NatureStrategySet::FullSymmetric(int m) {
  if (m < 1) throw std::invalid_argument("sample size m must be >= 1");
  return {Kind::kFullSymmetric, m, {}};
}

NatureStrategySet NatureStrategySet::IidHull(
    std::vector<DistributionOverX> generators, int m) {
  if (m < 1) throw std::invalid_argument("sample size m must be >= 1");
  if (generators.empty()) {
    throw std::invalid_argument("i.i.d. hull needs at least one generator");
  }
  return {Kind::kIidHull, m, std::move(generators)};
}

LearnerBestResponse BestResponseLearner(const HypothesisClass& c,
                                        const Prior& prior,
                                        const SymmetricSampleDistribution& x,
                                        double eps, double tol, int max_iter,
                                        const LossFn& loss) {
  if (prior.size() != c.size()) {
    throw std::invalid_argument("prior and class sizes differ");
  }
  if (x.domain_size() != c.domain_size()) {
    throw std::invalid_argument("law and class domain sizes differ");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  const GameKernel kernel(c, x.m(), eps, SampleKeying::kMultiset, loss);
  const std::vector<double> mass = x.Dense(kernel.multisets());
  const std::vector<Term> terms = AverageTerms(prior, mass);
  ChannelMin best = MinimizeChannel(kernel, terms, kernel.UniformChannel(),
                                    tol * kLn2, max_iter);
  return {kernel.ToLearnerChannel(best.w), best.value / kLn2,
          best.lower / kLn2, best.iterations};
}

NatureBestResponse BestResponseNature(const HypothesisClass& c,
                                      const Prior& prior,
                                      const LearnerChannel& a,
                                      const NatureStrategySet& set, double tol,
                                      int max_iter) {
  if (prior.size() != c.size()) {
    throw std::invalid_argument("prior and class sizes differ");
  }
  if (a.m() != set.m) throw std::invalid_argument("channel and set disagree on m");
  // Every output is admissible here; the channel's own supports apply.
  const GameKernel kernel(c, set.m, 1.0, a.keying());
  const NatureSpace space(kernel, set);
  const Channel w = kernel.FromLearnerChannel(a);
  MassMax best = MaximizeAverage(kernel, space, prior, w, {}, tol * kLn2,
                                 max_iter);
  const std::vector<double> mass = space.ToMass(best.lambda);
  return {SymmetricSampleDistribution::FromDense(kernel.multisets(), mass),
          best.lambda, best.value / kLn2, best.upper / kLn2, best.iterations};
}

SaddleResult SolveSaddle(const HypothesisClass& c, const Prior& prior,
                         double eps, const NatureStrategySet& set,
                         const SaddleOptions& options) {
  if (prior.size() != c.size()) {
    throw std::invalid_argument("prior and class sizes differ");
  }
  if (!(options.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (options.max_iter < 1 || options.check_every < 1) {
    throw std::invalid_argument("iteration counts must be positive");
  }
  const GameKernel kernel(c, set.m, eps, SampleKeying::kMultiset, options.loss);
  const NatureSpace space(kernel, set);
  const double oracle_tol = 0.25 * options.tol * kLn2;

  // Warm starts carried between certifications.
  Channel learner_warm = kernel.UniformChannel();
  std::vector<double> nature_warm;
  ChannelMin learner_br;
  MassMax nature_br;

  auto gradients = [&](const Channel& w, const std::vector<double>& lambda,
                       Channel& grad_w, std::vector<double>& grad_lambda) {
    ResetGradient(grad_w);
    AveragePayoff(kernel, space, prior, w, lambda, &grad_w, &grad_lambda);
  };
  auto certify = [&](const Channel& w_avg,
                     const std::vector<double>& lambda_avg) {
    const std::vector<double> mass = space.ToMass(lambda_avg);
    const std::vector<Term> terms = AverageTerms(prior, mass);
    learner_br = MinimizeChannel(kernel, terms, learner_warm, oracle_tol,
                                 200000);
    learner_warm = learner_br.w;
    nature_br = MaximizeAverage(kernel, space, prior, w_avg, nature_warm,
                                oracle_tol, 200000);
    nature_warm = nature_br.lambda;
    return nature_br.upper - learner_br.lower;
  };

  Channel w_avg;
  std::vector<double> lambda_avg;
  bool converged = false;
  const int iterations = RunMirrorProx(
      kernel.UniformChannel(), std::vector<double>(space.dim(), 1.0 / space.dim()),
      options, gradients, certify, w_avg, lambda_avg, converged);
  if (!converged) certify(w_avg, lambda_avg);

  const std::vector<double> mass = space.ToMass(lambda_avg);
  const double value =
      AveragePayoff(kernel, space, prior, w_avg, lambda_avg, nullptr, nullptr);
  return {kernel.ToLearnerChannel(w_avg),
          SymmetricSampleDistribution::FromDense(kernel.multisets(), mass),
          lambda_avg,
          value / kLn2,
          learner_br.value / kLn2,
          nature_br.value / kLn2,
          (nature_br.upper - learner_br.lower) / kLn2,
          iterations,
          converged};
}

GapReport DualityGap(const HypothesisClass& c, const Prior& prior,
                     const LearnerChannel& a,
                     const SymmetricSampleDistribution& x, double eps,
                     const NatureStrategySet& set, double tol) {
  const NatureBestResponse nature = BestResponseNature(c, prior, a, set, tol);
  const LearnerBestResponse learner = BestResponseLearner(c, prior, x, eps, tol);
  return {nature.value, learner.value, nature.value - learner.value,
          nature.upper_bound - learner.lower_bound};
}

WorstCaseResult WorstCaseValue(const HypothesisClass& c, double eps, int m,
                               const std::vector<DistributionOverX>& grid,
                               const SaddleOptions& options) {
  if (grid.empty()) throw std::invalid_argument("empty nature grid");
  if (!(options.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  const GameKernel kernel(c, m, eps, SampleKeying::kMultiset, options.loss);
  std::vector<std::vector<double>> masses;
  for (const DistributionOverX& d : grid) {
    if (d.size() != c.domain_size()) {
      throw std::invalid_argument("grid distribution has the wrong domain size");
    }
    masses.push_back(IidToSymmetric(d, m).Dense(kernel.multisets()));
  }
  const int num_h = c.size();
  const int num_terms = num_h * static_cast<int>(grid.size());
  auto make_terms = [&](std::span<const double> weights) {
    std::vector<Term> terms(num_terms);
    for (int g = 0; g < static_cast<int>(grid.size()); ++g) {
      for (int h = 0; h < num_h; ++h) {
        const int t = g * num_h + h;
        terms[t] = {h, weights[t], masses[g]};
      }
    }
    return terms;
  };
  const double oracle_tol = 0.25 * options.tol * kLn2;
  Channel learner_warm = kernel.UniformChannel();
  ChannelMin learner_br;
  std::vector<double> values;

  auto gradients = [&](const Channel& w, const std::vector<double>& lambda,
                       Channel& grad_w, std::vector<double>& grad_lambda) {
    ResetGradient(grad_w);
    const std::vector<Term> terms = make_terms(lambda);
    kernel.Evaluate(w, terms, &grad_w, nullptr, &grad_lambda);
  };
  auto certify = [&](const Channel& w_avg,
                     const std::vector<double>& lambda_avg) {
    std::vector<Term> terms = make_terms(lambda_avg);
    std::vector<Term> active;
    for (const Term& t : terms) {
      if (t.weight > 0.0) active.push_back(t);
    }
    learner_br = MinimizeChannel(kernel, active, learner_warm, oracle_tol,
                                 200000);
    learner_warm = learner_br.w;
    kernel.Evaluate(w_avg, terms, nullptr, nullptr, &values);
    return *std::max_element(values.begin(), values.end()) - learner_br.lower;
  };

  Channel w_avg;
  std::vector<double> lambda_avg;
  bool converged = false;
  const int iterations = RunMirrorProx(
      kernel.UniformChannel(), std::vector<double>(num_terms, 1.0 / num_terms),
      options, gradients, certify, w_avg, lambda_avg, converged);
  if (!converged) certify(w_avg, lambda_avg);

  const int worst = static_cast<int>(
      std::max_element(values.begin(), values.end()) - values.begin());
  return {kernel.ToLearnerChannel(w_avg),
          values[worst] / kLn2,
          learner_br.lower / kLn2,
          worst % num_h,
          worst / num_h,
          iterations,
          converged};
}

std::vector<DistributionOverX> RefineNatureGrid(
    const HypothesisClass& c, double eps, int m,
    const std::vector<DistributionOverX>& pool, int size,
    const SaddleOptions& options) {
  if (pool.empty()) throw std::invalid_argument("empty candidate pool");
  if (size < 1 || size > static_cast<int>(pool.size())) {
    throw std::invalid_argument("grid size must be in [1, pool size]");
  }
  const GameKernel kernel(c, m, eps, SampleKeying::kMultiset, options.loss);
  std::vector<std::vector<double>> masses;
  for (const DistributionOverX& d : pool) {
    if (d.size() != c.domain_size()) {
      throw std::invalid_argument("pool distribution has the wrong domain size");
    }
    masses.push_back(IidToSymmetric(d, m).Dense(kernel.multisets()));
  }
  std::vector<int> chosen{0};
  std::vector<bool> used(pool.size(), false);
  used[0] = true;
  while (static_cast<int>(chosen.size()) < size) {
    std::vector<DistributionOverX> grid;
    for (int k : chosen) grid.push_back(pool[k]);
    const WorstCaseResult solved = WorstCaseValue(c, eps, m, grid, options);
    const Channel w = kernel.FromLearnerChannel(solved.learner);
    std::vector<std::pair<double, int>> scores;
    for (size_t k = 0; k < pool.size(); ++k) {
      if (used[k]) continue;
      double top = 0.0;
      for (int h = 0; h < c.size(); ++h) {
        top = std::max(top, kernel.Information(w, h, masses[k]));
      }
      scores.emplace_back(-top, static_cast<int>(k));
    }
    std::sort(scores.begin(), scores.end());
    const size_t add = std::min({chosen.size(), scores.size(),
                                 static_cast<size_t>(size) - chosen.size()});
    for (size_t i = 0; i < add; ++i) {
      chosen.push_back(scores[i].second);
      used[scores[i].second] = true;
    }
  }
  std::vector<DistributionOverX> grid;
  for (int k : chosen) grid.push_back(pool[k]);
  return grid;
}

}  // namespace infogame
