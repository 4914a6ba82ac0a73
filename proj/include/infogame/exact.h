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

// Exact-rational reference computations for small instances. Probabilities
// are carried as rationals (doubles convert exactly); only the final
// logarithms are taken in extended precision.
//
// The joints here are built by brute-force enumeration of all n^m ordered
// point tuples and are independent of the multiset machinery in prob.h.

#ifndef INFOGAME_EXACT_H_
#define INFOGAME_EXACT_H_

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "infogame/core_model.h"
#include "infogame/info.h"
#include "infogame/prob.h"

namespace infogame::exact {

using Rational = boost::multiprecision::cpp_rational;

Rational ToRational(double v);

// Rows are outcomes of the first variable, columns of the second.
using RationalJoint = std::vector<std::vector<Rational>>;

double EntropyBits(const std::vector<Rational>& p);
// KL form, with each ratio p(r,c) / (p(r) p(c)) formed exactly.
double MutualInformationBits(const RationalJoint& joint);

// Joint of (ordered S_h, A(S_h)) where the points follow `x` and are labeled
// by hypothesis `h`. Enumerates every point tuple, so n^m must be small.
RationalJoint LearnerJoint(const HypothesisClass& c,
                           const SymmetricSampleDistribution& x, int h,
                           const LearnerChannel& a);

// Same for the i.i.d. law d^m, with tuple probabilities prod d(x_i) formed
// exactly.
RationalJoint LearnerJoint(const HypothesisClass& c, const DistributionOverX& d,
                           int m, int h, const LearnerChannel& a);

double LearnerInformationBits(const HypothesisClass& c,
                              const SymmetricSampleDistribution& x, int h,
                              const LearnerChannel& a);
double LearnerInformationBits(const HypothesisClass& c,
                              const DistributionOverX& d, int m, int h,
                              const LearnerChannel& a);

}  // namespace infogame::exact

#endif  // INFOGAME_EXACT_H_
