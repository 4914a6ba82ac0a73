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

#include "infogame/core_model.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "infogame/prob.h"
#include "infogame/rng.h"

namespace infogame {

Hypothesis::Hypothesis(std::vector<std::uint8_t> labels)
    : labels_(std::move(labels)) {
  for (std::uint8_t v : labels_) {
    if (v > 1) throw std::invalid_argument("hypothesis labels must be 0 or 1");
  }
}

Hypothesis Hypothesis::FromBitstring(const std::string& bits) {
  std::vector<std::uint8_t> labels;
  labels.reserve(bits.size());
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("bitstring may only contain '0' and '1': " +
                                  bits);
    }
    labels.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return Hypothesis(std::move(labels));
}

Hypothesis Hypothesis::Complement() const {
  std::vector<std::uint8_t> flipped(labels_.size());
  for (size_t i = 0; i < labels_.size(); ++i) flipped[i] = 1 - labels_[i];
  return Hypothesis(std::move(flipped));
}

std::string Hypothesis::ToBitstring() const {
  std::string out;
  out.reserve(labels_.size());
  for (std::uint8_t v : labels_) out.push_back(static_cast<char>('0' + v));
  return out;
}

HypothesisClass::HypothesisClass(int domain_size,
                                 std::vector<Hypothesis> hypotheses)
    : domain_size_(domain_size) {
  if (domain_size < 1) throw std::invalid_argument("domain size must be >= 1");
  std::vector<Hypothesis> seen;
  for (Hypothesis& h : hypotheses) {
    if (h.size() != domain_size) {
      throw std::invalid_argument("hypothesis length " +
                                  std::to_string(h.size()) +
                                  " != domain size " +
                                  std::to_string(domain_size));
    }
    auto pos = std::lower_bound(seen.begin(), seen.end(), h);
    if (pos != seen.end() && *pos == h) continue;
    seen.insert(pos, h);
    hypotheses_.push_back(std::move(h));
  }
}

int HypothesisClass::IndexOf(const Hypothesis& h) const {
  auto it = std::find(hypotheses_.begin(), hypotheses_.end(), h);
  return it == hypotheses_.end() ? -1
                                 : static_cast<int>(it - hypotheses_.begin());
}

LabeledSample::LabeledSample(std::vector<LabeledPoint> pairs)
    : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw std::invalid_argument("sample size must be >= 1");
  for (const LabeledPoint& p : pairs_) {
    if (p.x < 0) throw std::out_of_range("negative point index in sample");
    if (p.y != 0 && p.y != 1) {
      throw std::invalid_argument("sample labels must be 0 or 1");
    }
  }
}

LabeledSample LabeledSample::Canonical() const {
  LabeledSample sorted = *this;
  std::sort(sorted.pairs_.begin(), sorted.pairs_.end());
  return sorted;
}

void LabeledSample::CheckDomain(int n) const {
  for (const LabeledPoint& p : pairs_) {
    if (p.x >= n) {
      throw std::out_of_range("point index " + std::to_string(p.x) +
                              " outside domain of size " + std::to_string(n));
    }
  }
}

LabeledSample LabelBy(const Hypothesis& h, std::span<const int> points) {
  std::vector<LabeledPoint> pairs;
  pairs.reserve(points.size());
  for (int x : points) pairs.push_back({x, h(x)});
  return LabeledSample(std::move(pairs));
}

bool Shatters(const HypothesisClass& c, std::span<const int> subset) {
  for (int x : subset) {
    if (x < 0 || x >= c.domain_size()) {
      throw std::out_of_range("subset point " + std::to_string(x) +
                              " outside domain");
    }
  }
  const size_t k = subset.size();
  if (k == 0) return true;
  if (k >= 30) return false;  // would need more than 2^30 hypotheses
  const std::uint64_t patterns = std::uint64_t{1} << k;
  if (static_cast<std::uint64_t>(c.size()) < patterns) return false;
  std::vector<bool> seen(patterns, false);
  std::uint64_t distinct = 0;
  for (const Hypothesis& h : c.hypotheses()) {
    std::uint64_t code = 0;
    for (size_t i = 0; i < k; ++i) {
      code |= static_cast<std::uint64_t>(h(subset[i])) << i;
    }
    if (!seen[code]) {
      seen[code] = true;
      if (++distinct == patterns) return true;
    }
  }
  return false;
}

namespace {

// Calls visit(subset) for each k-subset of {0..n-1} in lexicographic order
// until visit returns true. Returns whether some call returned true.
template <typename Visit>
bool AnySubset(int n, int k, Visit visit) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(std::span<const int>(idx))) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

int VcDimension(const HypothesisClass& c) {
  if (c.empty()) throw std::invalid_argument("VC dimension of an empty class");
  // Shattering is hereditary, so the first size with no shattered subset
  // ends the search. A class of size s cannot shatter more than log2(s)
  // points.
  const int cap = std::min(c.domain_size(),
                           static_cast<int>(std::floor(std::log2(c.size()))));
  int d = 0;
  for (int k = 1; k <= cap; ++k) {
    const bool found = AnySubset(c.domain_size(), k, [&](std::span<const int> s) {
      return Shatters(c, s);
    });
    if (!found) break;
    d = k;
  }
  return d;
}

int EmpiricalMistakes(const Hypothesis& h, const LabeledSample& sample) {
  int mistakes = 0;
  for (const LabeledPoint& p : sample) mistakes += h(p.x) != p.y;
  return mistakes;
}

double EmpiricalError(const Hypothesis& h, const LabeledSample& sample) {
  return static_cast<double>(EmpiricalMistakes(h, sample)) / sample.size();
}

double Disagreement(const Hypothesis& h1, const Hypothesis& h2,
                    const DistributionOverX& d) {
  if (h1.size() != d.size() || h2.size() != d.size()) {
    throw std::invalid_argument("hypothesis and distribution sizes differ");
  }
  double mass = 0.0;
  for (int x = 0; x < d.size(); ++x) {
    if (h1(x) != h2(x)) mass += d[x];
  }
  return std::min(mass, 1.0);
}

double TrueError(const Hypothesis& h, const Hypothesis& target,
                 const DistributionOverX& d) {
  return Disagreement(h, target, d);
}

std::vector<int> RealizingHypotheses(const HypothesisClass& c,
                                     const LabeledSample& sample) {
  sample.CheckDomain(c.domain_size());
  std::vector<int> out;
  for (int i = 0; i < c.size(); ++i) {
    if (EmpiricalMistakes(c[i], sample) == 0) out.push_back(i);
  }
  return out;
}

HypothesisClass MakeThresholds(int n) {
  if (n < 1) throw std::invalid_argument("thresholds need n >= 1");
  std::vector<Hypothesis> rows;
  for (int t = 0; t <= n; ++t) {
    std::vector<std::uint8_t> labels(n);
    for (int x = 0; x < n; ++x) labels[x] = x >= t ? 1 : 0;
    rows.emplace_back(std::move(labels));
  }
  return HypothesisClass(n, std::move(rows));
}

HypothesisClass MakeFullCube(int n) {
  if (n < 1) throw std::invalid_argument("full cube needs n >= 1");
  if (n > 20) throw std::invalid_argument("full cube limited to n <= 20");
  std::vector<Hypothesis> rows;
  for (std::uint32_t code = 0; code < (1u << n); ++code) {
    std::vector<std::uint8_t> labels(n);
    for (int x = 0; x < n; ++x) labels[x] = (code >> x) & 1u;
    rows.emplace_back(std::move(labels));
  }
  return HypothesisClass(n, std::move(rows));
}

HypothesisClass MakeRandomClass(int n, int count, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random class needs n >= 1");
  if (count < 1) throw std::invalid_argument("random class needs count >= 1");
  if (n < 62 && static_cast<std::uint64_t>(count) > (std::uint64_t{1} << n)) {
    throw std::invalid_argument("cannot draw " + std::to_string(count) +
                                " distinct rows over " + std::to_string(n) +
                                " points");
  }
  Rng rng(seed);
  std::vector<Hypothesis> rows;
  std::vector<Hypothesis> sorted;
  while (static_cast<int>(rows.size()) < count) {
    std::vector<std::uint8_t> labels(n);
    for (int x = 0; x < n; ++x) labels[x] = static_cast<std::uint8_t>(rng() >> 63);
    Hypothesis h(std::move(labels));
    auto pos = std::lower_bound(sorted.begin(), sorted.end(), h);
    if (pos != sorted.end() && *pos == h) continue;
    sorted.insert(pos, h);
    rows.push_back(std::move(h));
  }
  return HypothesisClass(n, std::move(rows));
}

}  // namespace infogame
