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

#include "infogame/prob.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace infogame {

void CheckProbabilityVector(std::span<const double> p, const char* what) {
  if (p.empty()) throw std::invalid_argument(std::string(what) + " is empty");
  double total = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument(std::string(what) +
                                  " has a negative or non-finite entry");
    }
    total += v;
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw std::invalid_argument(std::string(what) + " sums to " +
                                std::to_string(total) + ", not 1");
  }
}

DistributionOverX::DistributionOverX(std::vector<double> probs)
    : probs_(std::move(probs)) {
  CheckProbabilityVector(probs_, "distribution over X");
}

DistributionOverX DistributionOverX::Uniform(int n) {
  if (n < 1) throw std::invalid_argument("domain size must be >= 1");
  return DistributionOverX(std::vector<double>(n, 1.0 / n));
}

DistributionOverX DistributionOverX::PointMass(int n, int x) {
  if (x < 0 || x >= n) throw std::out_of_range("point mass outside domain");
  std::vector<double> p(n, 0.0);
  p[x] = 1.0;
  return DistributionOverX(std::move(p));
}

Prior::Prior(std::vector<double> weights) : weights_(std::move(weights)) {
  CheckProbabilityVector(weights_, "prior");
}

Prior Prior::Uniform(int k) {
  if (k < 1) throw std::invalid_argument("prior over an empty class");
  return Prior(std::vector<double>(k, 1.0 / k));
}

Prior Prior::PointMass(int k, int i) {
  if (i < 0 || i >= k) throw std::out_of_range("prior point mass outside class");
  std::vector<double> w(k, 0.0);
  w[i] = 1.0;
  return Prior(std::move(w));
}

double L1Distance(const Prior& p, const Prior& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("priors over classes of different sizes");
  }
  double total = 0.0;
  for (int i = 0; i < p.size(); ++i) total += std::abs(p[i] - q[i]);
  return total;
}

std::uint64_t PermutationCount(std::span<const int> multiset) {
  // Multiply in the multinomial one factor at a time; every prefix product
  // is itself a multinomial coefficient, so the divisions are exact.
  std::uint64_t count = 1;
  int placed = 0;
  size_t i = 0;
  while (i < multiset.size()) {
    size_t j = i;
    while (j < multiset.size() && multiset[j] == multiset[i]) ++j;
    for (size_t r = 1; r <= j - i; ++r) {
      ++placed;
      count = count * placed / r;
    }
    i = j;
  }
  return count;
}

MultisetIndex::MultisetIndex(int domain_size, int m)
    : domain_size_(domain_size), m_(m) {
  if (domain_size < 1) throw std::invalid_argument("domain size must be >= 1");
  if (m < 1) throw std::invalid_argument("sample size m must be >= 1");
  Multiset u(m, 0);
  while (true) {
    rank_.emplace(u, static_cast<int>(multisets_.size()));
    multisets_.push_back(u);
    int i = m - 1;
    while (i >= 0 && u[i] == domain_size - 1) --i;
    if (i < 0) break;
    ++u[i];
    for (int j = i + 1; j < m; ++j) u[j] = u[i];
  }
}

int MultisetIndex::Find(const Multiset& u) const {
  auto it = rank_.find(u);
  return it == rank_.end() ? -1 : it->second;
}

SymmetricSampleDistribution::SymmetricSampleDistribution(
    int domain_size, int m, std::map<Multiset, double> mass)
    : domain_size_(domain_size), m_(m) {
  if (domain_size < 1) throw std::invalid_argument("domain size must be >= 1");
  if (m < 1) throw std::invalid_argument("sample size m must be >= 1");
  double total = 0.0;
  for (auto& [u, p] : mass) {
    if (static_cast<int>(u.size()) != m) {
      throw std::invalid_argument("multiset size differs from m");
    }
    if (!std::is_sorted(u.begin(), u.end())) {
      throw std::invalid_argument("multiset keys must be sorted");
    }
    if (u.front() < 0 || u.back() >= domain_size) {
      throw std::out_of_range("multiset point outside domain");
    }
    if (!std::isfinite(p) || p < 0.0) {
      throw std::invalid_argument("negative or non-finite multiset mass");
    }
    total += p;
    if (p > 0.0) mass_.emplace(u, p);
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw std::invalid_argument("symmetric law sums to " +
                                std::to_string(total) + ", not 1");
  }
}

SymmetricSampleDistribution SymmetricSampleDistribution::FromDense(
    const MultisetIndex& index, std::span<const double> mass) {
  if (static_cast<int>(mass.size()) != index.size()) {
    throw std::invalid_argument("dense mass has wrong length");
  }
  std::map<Multiset, double> sparse;
  for (int i = 0; i < index.size(); ++i) {
    if (mass[i] != 0.0) sparse.emplace(index[i], mass[i]);
  }
  return SymmetricSampleDistribution(index.domain_size(), index.m(),
                                     std::move(sparse));
}

double SymmetricSampleDistribution::MassOf(const Multiset& u) const {
  auto it = mass_.find(u);
  return it == mass_.end() ? 0.0 : it->second;
}

std::vector<double> SymmetricSampleDistribution::Dense(
    const MultisetIndex& index) const {
  if (index.domain_size() != domain_size_ || index.m() != m_) {
    throw std::invalid_argument("multiset index does not match the law");
  }
  std::vector<double> dense(index.size(), 0.0);
  for (const auto& [u, p] : mass_) dense[index.Find(u)] = p;
  return dense;
}

SymmetricSampleDistribution IidToSymmetric(const DistributionOverX& d, int m) {
  if (m < 1) throw std::invalid_argument("sample size m must be >= 1");
  MultisetIndex index(d.size(), m);
  std::map<Multiset, double> mass;
  for (int i = 0; i < index.size(); ++i) {
    const Multiset& u = index[i];
    double p = static_cast<double>(PermutationCount(u));
    for (int x : u) p *= d[x];
    if (p > 0.0) mass.emplace(u, p);
  }
  // Sums to one up to rounding; renormalize so the stored law is exact-ish.
  double total = 0.0;
  for (const auto& [u, p] : mass) total += p;
  for (auto& [u, p] : mass) p /= total;
  return SymmetricSampleDistribution(d.size(), m, std::move(mass));
}

SymmetricSampleDistribution Mix(
    std::span<const SymmetricSampleDistribution> components,
    std::span<const double> weights) {
  if (components.empty()) throw std::invalid_argument("mix of nothing");
  if (components.size() != weights.size()) {
    throw std::invalid_argument("mix: one weight per component required");
  }
  CheckProbabilityVector(weights, "mixture weights");
  const int n = components.front().domain_size();
  const int m = components.front().m();
  std::map<Multiset, double> mass;
  for (size_t k = 0; k < components.size(); ++k) {
    if (components[k].m() != m || components[k].domain_size() != n) {
      throw std::invalid_argument("mix: components disagree on m or domain");
    }
    for (const auto& [u, p] : components[k].mass()) {
      mass[u] += weights[k] * p;
    }
  }
  return SymmetricSampleDistribution(n, m, std::move(mass));
}

DistributionOverX Marginal(const SymmetricSampleDistribution& x) {
  std::vector<double> d(x.domain_size(), 0.0);
  const double share = 1.0 / x.m();
  for (const auto& [u, p] : x.mass()) {
    for (int point : u) d[point] += p * share;
  }
  double total = 0.0;
  for (double v : d) total += v;
  for (double& v : d) v /= total;
  return DistributionOverX(std::move(d));
}

SampleLaw::SampleLaw(Hypothesis h, int m,
                     std::vector<std::pair<LabeledSample, double>> entries)
    : hypothesis_(std::move(h)), m_(m), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<double> p;
  p.reserve(entries_.size());
  for (const auto& [s, mass] : entries_) {
    if (s.size() != m_) throw std::invalid_argument("sample of wrong size");
    p.push_back(mass);
  }
  CheckProbabilityVector(p, "sample law");
}

SampleLaw MakeSampleLaw(const SymmetricSampleDistribution& x,
                        const Hypothesis& h) {
  if (h.size() != x.domain_size()) {
    throw std::invalid_argument("hypothesis length differs from domain size");
  }
  std::vector<std::pair<LabeledSample, double>> entries;
  for (const auto& [u, mass] : x.mass()) {
    const double each = mass / static_cast<double>(PermutationCount(u));
    Multiset order = u;
    do {
      entries.emplace_back(LabelBy(h, order), each);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return SampleLaw(h, x.m(), std::move(entries));
}

LabeledSample DrawSample(const SampleLaw& law, Rng& rng) {
  const auto& entries = law.entries();
  double u = UniformDouble(rng);
  for (const auto& [sample, p] : entries) {
    if (u < p) return sample;
    u -= p;
  }
  // Rounding left a sliver of mass past the end; return the last supported
  // sample.
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    if (it->second > 0.0) return it->first;
  }
  return entries.back().first;
}

LabeledSample DrawSample(const SampleLaw& law, std::uint64_t seed) {
  Rng rng(seed);
  return DrawSample(law, rng);
}

DiscreteSampler::DiscreteSampler(std::span<const double> probs) {
  CheckProbabilityVector(probs, "sampler weights");
  double total = 0.0;
  cumulative_.reserve(probs.size());
  for (double p : probs) {
    total += p;
    cumulative_.push_back(total);
  }
}

int DiscreteSampler::operator()(Rng& rng) const {
  const double u = UniformDouble(rng) * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  int i = static_cast<int>(it - cumulative_.begin());
  if (i == static_cast<int>(cumulative_.size())) {
    // u landed on the total; take the last entry with positive mass.
    i = static_cast<int>(cumulative_.size()) - 1;
    while (i > 0 && cumulative_[i] == cumulative_[i - 1]) --i;
  }
  return i;
}

LabeledSample DrawIidSample(const DiscreteSampler& points, const Hypothesis& h,
                            int m, Rng& rng) {
  std::vector<LabeledPoint> pairs;
  pairs.reserve(m);
  for (int i = 0; i < m; ++i) {
    const int x = points(rng);
    pairs.push_back({x, h(x)});
  }
  return LabeledSample(std::move(pairs));
}

}  // namespace infogame
