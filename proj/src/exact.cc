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

#include "infogame/exact.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace infogame::exact {

Rational ToRational(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite probability");
  return Rational(v);
}

namespace {

long double ToLongDouble(const Rational& r) {
  return static_cast<long double>(r);
}

Rational Factorial(int k) {
  Rational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

double EntropyBits(const std::vector<Rational>& p) {
  long double h = 0.0L;
  for (const Rational& v : p) {
    if (v < 0) throw std::invalid_argument("negative mass");
    if (v > 0) h -= ToLongDouble(v) * std::log2(ToLongDouble(v));
  }
  return static_cast<double>(h);
}

double MutualInformationBits(const RationalJoint& joint) {
  if (joint.empty()) throw std::invalid_argument("empty joint");
  const size_t cols = joint.front().size();
  std::vector<Rational> row_marginal(joint.size(), 0);
  std::vector<Rational> col_marginal(cols, 0);
  for (size_t r = 0; r < joint.size(); ++r) {
    for (size_t c = 0; c < cols; ++c) {
      row_marginal[r] += joint[r][c];
      col_marginal[c] += joint[r][c];
    }
  }
  long double mi = 0.0L;
  for (size_t r = 0; r < joint.size(); ++r) {
    for (size_t c = 0; c < cols; ++c) {
      if (joint[r][c] == 0) continue;
      const Rational ratio =
          joint[r][c] / (row_marginal[r] * col_marginal[c]);
      mi += ToLongDouble(joint[r][c]) * std::log2(ToLongDouble(ratio));
    }
  }
  return static_cast<double>(mi);
}

namespace {

// Calls visit(tuple) for every tuple in {0..n-1}^m.
template <typename Visit>
void ForEachTuple(int n, int m, Visit visit) {
  std::vector<int> tuple(m, 0);
  while (true) {
    visit(tuple);
    int i = m - 1;
    while (i >= 0 && tuple[i] == n - 1) tuple[i--] = 0;
    if (i < 0) return;
    ++tuple[i];
  }
}

void AppendRow(const HypothesisClass& c, const LearnerChannel& a,
               const Hypothesis& target, const std::vector<int>& tuple,
               const Rational& p, RationalJoint& joint) {
  const ChannelRow& row = a.Row(LabelBy(target, tuple));
  std::vector<Rational> out(c.size());
  for (int y = 0; y < c.size(); ++y) out[y] = p * ToRational(row.probs[y]);
  joint.push_back(std::move(out));
}

}  // namespace

RationalJoint LearnerJoint(const HypothesisClass& c,
                           const SymmetricSampleDistribution& x, int h,
                           const LearnerChannel& a) {
  const int m = x.m();
  RationalJoint joint;
  ForEachTuple(c.domain_size(), m, [&](const std::vector<int>& tuple) {
    std::vector<int> sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    const double mass = x.MassOf(sorted);
    if (mass <= 0.0) return;
    // Orderings of the multiset: m! / prod(multiplicity!).
    Rational orderings = Factorial(m);
    for (size_t i = 0; i < sorted.size();) {
      size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      orderings /= Factorial(static_cast<int>(j - i));
      i = j;
    }
    AppendRow(c, a, c[h], tuple, ToRational(mass) / orderings, joint);
  });
  return joint;
}

RationalJoint LearnerJoint(const HypothesisClass& c, const DistributionOverX& d,
                           int m, int h, const LearnerChannel& a) {
  if (d.size() != c.domain_size()) {
    throw std::invalid_argument("distribution and domain sizes differ");
  }
  RationalJoint joint;
  ForEachTuple(c.domain_size(), m, [&](const std::vector<int>& tuple) {
    Rational p = 1;
    for (int x : tuple) p *= ToRational(d[x]);
    if (p == 0) return;
    AppendRow(c, a, c[h], tuple, p, joint);
  });
  return joint;
}

double LearnerInformationBits(const HypothesisClass& c,
                              const SymmetricSampleDistribution& x, int h,
                              const LearnerChannel& a) {
  return MutualInformationBits(exact::LearnerJoint(c, x, h, a));
}

double LearnerInformationBits(const HypothesisClass& c,
                              const DistributionOverX& d, int m, int h,
                              const LearnerChannel& a) {
  return MutualInformationBits(exact::LearnerJoint(c, d, m, h, a));
}

}  // namespace infogame::exact
