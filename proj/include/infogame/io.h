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

#ifndef INFOGAME_IO_H_
#define INFOGAME_IO_H_

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "infogame/core_model.h"
#include "infogame/info.h"
#include "infogame/minimax.h"
#include "infogame/prob.h"

namespace infogame {

using Json = nlohmann::json;

// A bad input value; `field` names the offending config or file entry.
class InputError : public std::runtime_error {
 public:
  InputError(std::string field, const std::string& message)
      : std::runtime_error(message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

Json ReadJsonFile(const std::filesystem::path& path, const std::string& field);

// Relative paths in `spec` resolve against `base`.
//   {"generator": "thresholds" | "cube", "n": N}
//   {"generator": "random", "n": N, "count": K, "seed": S}
//   {"domain_size": N, "hypotheses": ["0110", ...]}
//   {"file": "class.json"}
HypothesisClass ClassFromJson(const Json& spec, const std::filesystem::path& base,
                              const std::string& field = "class");

// "uniform" | {"weights": [...]} | {"point": i} | {"file": ...}
Prior PriorFromJson(const Json& spec, int size, const std::filesystem::path& base,
                    const std::string& field = "prior");

// "uniform" | {"probs": [...]} | {"point": x} | {"file": ...}
DistributionOverX DistributionFromJson(const Json& spec, int n,
                                       const std::filesystem::path& base,
                                       const std::string& field);

// "symmetric" | {"hull": [distribution, ...]} | {"hull_file": ...}
NatureStrategySet NatureFromJson(const Json& spec, int n, int m,
                                 const std::filesystem::path& base,
                                 const std::string& field = "nature");

Json ToJson(const LearnerChannel& a);
Json ToJson(const SymmetricSampleDistribution& x);

// x rounded to 12 significant digits.
double Round12(double x);
// Deep copy with every floating-point number rounded by Round12.
Json Rounded(const Json& j);

}  // namespace infogame

#endif  // INFOGAME_IO_H_
