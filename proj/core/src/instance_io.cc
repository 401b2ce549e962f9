// Copyright 2026 The dpscp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpscp/instance_io.h"

#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace dpscp {
namespace {

using nlohmann::json;

const char* KindName(FactorKind kind) {
  switch (kind) {
    case FactorKind::kRealVector:
      return "real";
    case FactorKind::kSymMatrix:
      return "sym";
    case FactorKind::kSpin:
      return "spin";
  }
  return "?";
}

FactorKind KindFromName(std::string_view name) {
  if (name == "real") return FactorKind::kRealVector;
  if (name == "sym") return FactorKind::kSymMatrix;
  if (name == "spin") return FactorKind::kSpin;
  throw std::invalid_argument("instance: unknown factor kind '" +
                              std::string(name) + "'");
}

json BlocksToJson(const Element& x) {
  json blocks = json::array();
  const Algebra& alg = x.algebra();
  for (std::size_t f = 0; f < alg.num_factors(); ++f) {
    std::span<const double> blk = x.block(f);
    json arr = json::array();
    if (alg.factor(f).kind == FactorKind::kSymMatrix) {
      const int r = alg.factor(f).size;
      for (int i = 0; i < r; ++i) {
        for (int j = i; j < r; ++j) arr.push_back(blk[i * r + j]);
      }
    } else {
      for (double v : blk) arr.push_back(v);
    }
    blocks.push_back(std::move(arr));
  }
  return blocks;
}

Element BlocksFromJson(const AlgebraPtr& alg, const json& j,
                       const char* what) {
  if (!j.is_array() || j.size() != alg->num_factors()) {
    throw std::invalid_argument(std::string("instance: ") + what +
                                " must hold one block per factor");
  }
  std::vector<std::vector<double>> blocks;
  for (std::size_t f = 0; f < alg->num_factors(); ++f) {
    const Factor& factor = alg->factor(f);
    const std::size_t want =
        factor.kind == FactorKind::kSymMatrix
            ? static_cast<std::size_t>(factor.size * (factor.size + 1) / 2)
            : static_cast<std::size_t>(factor.dim());
    if (!j[f].is_array() || j[f].size() != want) {
      throw std::invalid_argument(std::string("instance: ") + what +
                                  " block " + std::to_string(f) +
                                  " has the wrong length");
    }
    blocks.push_back(j[f].get<std::vector<double>>());
  }
  return FromBlocks(alg, blocks);
}

}  // namespace

std::string SerializeInstance(const ScpInstance& instance) {
  instance.Validate();
  json doc;
  doc["schema_version"] = kInstanceSchemaVersion;
  json factors = json::array();
  for (const Factor& f : instance.algebra->factors()) {
    factors.push_back({{"kind", KindName(f.kind)}, {"size", f.size}});
  }
  doc["algebra"] = std::move(factors);
  json constraints = json::array();
  for (const Element& a : instance.constraints) {
    constraints.push_back(BlocksToJson(a));
  }
  doc["constraints"] = std::move(constraints);
  doc["b"] = instance.b;
  json sense = json::array();
  for (Sense s : instance.sense) sense.push_back(s == Sense::kLE ? "<=" : ">=");
  doc["sense"] = std::move(sense);
  doc["c"] = BlocksToJson(instance.objective);
  json meta;
  meta["generator"] = instance.metadata.generator;
  meta["seed"] = instance.metadata.seed;
  meta["seed_derivation"] = kSeedDerivation;
  if (instance.metadata.planted_opt) {
    meta["planted_opt"] = *instance.metadata.planted_opt;
  }
  if (instance.metadata.planted_solution) {
    meta["planted_solution"] = BlocksToJson(*instance.metadata.planted_solution);
  }
  doc["metadata"] = std::move(meta);
  return doc.dump(1) + "\n";
}

ScpInstance ParseInstance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("instance: ") + e.what());
  }
  try {
    const int version = doc.at("schema_version").get<int>();
    if (version != kInstanceSchemaVersion) {
      throw std::invalid_argument("instance: unsupported schema_version " +
                                  std::to_string(version));
    }
    std::vector<Factor> factors;
    for (const json& f : doc.at("algebra")) {
      factors.push_back({KindFromName(f.at("kind").get<std::string>()),
                         f.at("size").get<int>()});
    }
    ScpInstance inst{MakeAlgebra(std::move(factors)), {}, {}, Element(), {},
                     {}};
    for (const json& a : doc.at("constraints")) {
      inst.constraints.push_back(BlocksFromJson(inst.algebra, a, "constraint"));
    }
    inst.b = doc.at("b").get<std::vector<double>>();
    for (const json& s : doc.at("sense")) {
      const std::string v = s.get<std::string>();
      if (v == "<=") {
        inst.sense.push_back(Sense::kLE);
      } else if (v == ">=") {
        inst.sense.push_back(Sense::kGE);
      } else {
        throw std::invalid_argument("instance: sense must be <= or >=");
      }
    }
    inst.objective = doc.contains("c")
                         ? BlocksFromJson(inst.algebra, doc["c"], "c")
                         : Element(inst.algebra);
    if (doc.contains("metadata")) {
      const json& meta = doc["metadata"];
      inst.metadata.generator = meta.value("generator", "");
      inst.metadata.seed = meta.value("seed", std::uint64_t{0});
      if (meta.contains("planted_opt")) {
        inst.metadata.planted_opt = meta["planted_opt"].get<double>();
      }
      if (meta.contains("planted_solution")) {
        inst.metadata.planted_solution = BlocksFromJson(
            inst.algebra, meta["planted_solution"], "planted_solution");
      }
    }
    inst.Validate();
    return inst;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("instance: ") + e.what());
  }
}

void WriteInstanceFile(const std::string& path, const ScpInstance& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << SerializeInstance(instance);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

ScpInstance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseInstance(buf.str());
}

AlgebraPtr ParseAlgebraSpec(std::string_view spec) {
  std::vector<Factor> factors;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find('+', start);
    if (end == std::string_view::npos) end = spec.size();
    const std::string_view part = spec.substr(start, end - start);
    const std::size_t colon = part.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("algebra spec: expected kind:size, got '" +
                                  std::string(part) + "'");
    }
    int size = 0;
    try {
      std::size_t used = 0;
      const std::string digits(part.substr(colon + 1));
      size = std::stoi(digits, &used);
      if (used != digits.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw std::invalid_argument("algebra spec: bad size in '" +
                                  std::string(part) + "'");
    }
    factors.push_back({KindFromName(part.substr(0, colon)), size});
    start = end + 1;
  }
  return MakeAlgebra(std::move(factors));
}

std::string AlgebraSpec(const Algebra& algebra) {
  std::string out;
  for (const Factor& f : algebra.factors()) {
    if (!out.empty()) out += '+';
    out += KindName(f.kind);
    out += ':';
    out += std::to_string(f.size);
  }
  return out;
}

}  // namespace dpscp
