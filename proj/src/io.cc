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

#include "infogame/io.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <utility>
#include <vector>

namespace infogame {

namespace fs = std::filesystem;

namespace {

fs::path Resolve(const fs::path& base, const std::string& name) {
  const fs::path p(name);
  return p.is_absolute() ? p : base / p;
}

template <typename T>
T Get(const Json& spec, const char* key, const std::string& field) {
  if (!spec.contains(key)) {
    throw InputError(field + "." + key, "missing required field");
  }
  try {
    return spec.at(key).get<T>();
  } catch (const Json::exception&) {
    throw InputError(field + "." + key, "field has the wrong type");
  }
}

std::vector<double> Probabilities(const Json& spec, const std::string& field) {
  try {
    return spec.get<std::vector<double>>();
  } catch (const Json::exception&) {
    throw InputError(field, "expected an array of numbers");
  }
}

// Runs `make`, rewrapping invalid-argument failures as input errors.
template <typename F>
auto Checked(const std::string& field, F make) {
  try {
    return make();
  } catch (const std::invalid_argument& e) {
    throw InputError(field, e.what());
  }
}

}  // namespace

Json ReadJsonFile(const fs::path& path, const std::string& field) {
  std::ifstream in(path);
  if (!in) throw InputError(field, "cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(field, "invalid JSON in '" + path.string() + "': " + e.what());
  }
}

HypothesisClass ClassFromJson(const Json& spec, const fs::path& base,
                              const std::string& field) {
  if (!spec.is_object()) throw InputError(field, "expected an object");
  if (spec.contains("file")) {
    const fs::path path = Resolve(base, Get<std::string>(spec, "file", field));
    return ClassFromJson(ReadJsonFile(path, field + ".file"),
                         path.parent_path(), field);
  }
  if (spec.contains("generator")) {
    const auto name = Get<std::string>(spec, "generator", field);
    const int n = Get<int>(spec, "n", field);
    return Checked(field, [&] {
      if (name == "thresholds") return MakeThresholds(n);
      if (name == "cube") return MakeFullCube(n);
      if (name == "random") {
        return MakeRandomClass(n, Get<int>(spec, "count", field),
                               Get<std::uint64_t>(spec, "seed", field));
      }
      throw InputError(field + ".generator", "unknown generator '" + name + "'");
    });
  }
  const int n = Get<int>(spec, "domain_size", field);
  const auto rows = Get<std::vector<std::string>>(spec, "hypotheses", field);
  return Checked(field, [&] {
    std::vector<Hypothesis> hs;
    for (const std::string& bits : rows) hs.push_back(Hypothesis::FromBitstring(bits));
    return HypothesisClass(n, std::move(hs));
  });
}

Prior PriorFromJson(const Json& spec, int size, const fs::path& base,
                    const std::string& field) {
  if (spec.is_string()) {
    if (spec.get<std::string>() != "uniform") {
      throw InputError(field, "expected \"uniform\" or an object");
    }
    return Prior::Uniform(size);
  }
  if (!spec.is_object()) throw InputError(field, "expected a string or object");
  if (spec.contains("file")) {
    const fs::path path = Resolve(base, Get<std::string>(spec, "file", field));
    return PriorFromJson(ReadJsonFile(path, field + ".file"), size,
                         path.parent_path(), field);
  }
  if (spec.contains("point")) {
    const int i = Get<int>(spec, "point", field);
    return Checked(field, [&] { return Prior::PointMass(size, i); });
  }
  if (!spec.contains("weights")) throw InputError(field, "missing weights");
  std::vector<double> w = Probabilities(spec.at("weights"), field + ".weights");
  if (static_cast<int>(w.size()) != size) {
    throw InputError(field + ".weights", "length differs from the class size");
  }
  return Checked(field + ".weights", [&] { return Prior(std::move(w)); });
}

DistributionOverX DistributionFromJson(const Json& spec, int n,
                                       const fs::path& base,
                                       const std::string& field) {
  if (spec.is_string()) {
    if (spec.get<std::string>() != "uniform") {
      throw InputError(field, "expected \"uniform\" or an object");
    }
    return DistributionOverX::Uniform(n);
  }
  if (spec.is_array()) {
    std::vector<double> p = Probabilities(spec, field);
    if (static_cast<int>(p.size()) != n) {
      throw InputError(field, "length differs from the domain size");
    }
    return Checked(field, [&] { return DistributionOverX(std::move(p)); });
  }
  if (!spec.is_object()) throw InputError(field, "expected a distribution");
  if (spec.contains("file")) {
    const fs::path path = Resolve(base, Get<std::string>(spec, "file", field));
    return DistributionFromJson(ReadJsonFile(path, field + ".file"), n,
                                path.parent_path(), field);
  }
  if (spec.contains("point")) {
    const int x = Get<int>(spec, "point", field);
    return Checked(field, [&] { return DistributionOverX::PointMass(n, x); });
  }
  if (!spec.contains("probs")) throw InputError(field, "missing probs");
  return DistributionFromJson(spec.at("probs"), n, base, field + ".probs");
}

NatureStrategySet NatureFromJson(const Json& spec, int n, int m,
                                 const fs::path& base, const std::string& field) {
  if (spec.is_string()) {
    if (spec.get<std::string>() != "symmetric") {
      throw InputError(field, "expected \"symmetric\" or an object");
    }
    return Checked(field, [&] { return NatureStrategySet::FullSymmetric(m); });
  }
  if (!spec.is_object()) throw InputError(field, "expected a string or object");
  Json list;
  fs::path list_base = base;
  if (spec.contains("hull_file")) {
    const fs::path path = Resolve(base, Get<std::string>(spec, "hull_file", field));
    const Json file = ReadJsonFile(path, field + ".hull_file");
    list = file.is_object() && file.contains("hull") ? file.at("hull") : file;
    list_base = path.parent_path();
  } else if (spec.contains("hull")) {
    list = spec.at("hull");
  } else {
    throw InputError(field, "expected hull or hull_file");
  }
  if (!list.is_array() || list.empty()) {
    throw InputError(field + ".hull", "expected a nonempty list of distributions");
  }
  std::vector<DistributionOverX> gens;
  for (size_t k = 0; k < list.size(); ++k) {
    gens.push_back(DistributionFromJson(list[k], n, list_base,
                                        field + ".hull[" + std::to_string(k) + "]"));
  }
  return Checked(field, [&] { return NatureStrategySet::IidHull(std::move(gens), m); });
}

Json ToJson(const LearnerChannel& a) {
  Json rows = Json::array();
  for (const auto& [sample, row] : a.rows()) {
    Json points = Json::array();
    for (const LabeledPoint& p : sample.pairs()) points.push_back({p.x, p.y});
    Json outputs = Json::array();
    for (int y : row.allowed) {
      if (row.probs[y] > 0.0) outputs.push_back({y, row.probs[y]});
    }
    rows.push_back({{"sample", points}, {"outputs", outputs}});
  }
  return rows;
}

Json ToJson(const SymmetricSampleDistribution& x) {
  Json out = Json::array();
  for (const auto& [u, p] : x.mass()) {
    out.push_back({{"points", u}, {"mass", p}});
  }
  return out;
}

double Round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json Rounded(const Json& j) {
  if (j.is_number_float()) return Round12(j.get<double>());
  if (j.is_array() || j.is_object()) {
    Json out = j;
    for (auto& v : out) v = Rounded(v);
    return out;
  }
  return j;
}

}  // namespace infogame
