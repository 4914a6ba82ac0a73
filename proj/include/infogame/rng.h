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

#ifndef INFOGAME_RNG_H_
#define INFOGAME_RNG_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace infogame {

// The engine's output sequence is fixed by the standard, so everything drawn
// through the helpers below is reproducible across platforms. The std
// distributions are not, which is why they are avoided.
using Rng = std::mt19937_64;

inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for an independent stream `stream` under a base seed.
inline std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  return SplitMix64(SplitMix64(seed) ^ SplitMix64(stream + 0x632be59bd9b4e019ULL));
}

// Uniform on [0, 1).
inline double UniformDouble(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform on {0, ..., bound - 1}; bound > 0.
inline std::uint64_t UniformIndex(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

// Uniform point of the probability simplex of dimension `k`.
inline std::vector<double> RandomSimplexPoint(Rng& rng, int k) {
  std::vector<double> w(k);
  double total = 0.0;
  for (double& v : w) {
    v = -std::log1p(-UniformDouble(rng));
    total += v;
  }
  for (double& v : w) v /= total;
  return w;
}

}  // namespace infogame

#endif  // INFOGAME_RNG_H_
