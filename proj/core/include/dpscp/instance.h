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

#ifndef DPSCP_INSTANCE_H_
#define DPSCP_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpscp/algebra.h"

namespace dpscp {

enum class Sense { kLE, kGE };

// Generator provenance stored alongside an instance.
struct InstanceMetadata {
  std::string generator;
  std::uint64_t seed = 0;
  std::optional<double> planted_opt;
  // A known feasible point for the instance, when the generator planted one.
  std::optional<Element> planted_solution;
};

// A symmetric cone program: constraints <a_i, x> (<= or >=) b_i over the
// cone of squares, with objective element c.
struct ScpInstance {
  AlgebraPtr algebra;
  std::vector<Element> constraints;
  std::vector<double> b;
  Element objective;
  std::vector<Sense> sense;
  InstanceMetadata metadata;

  std::size_t num_constraints() const { return constraints.size(); }

  // Throws std::invalid_argument if shapes or algebras disagree.
  void Validate() const;
};

// An instance with all constraints in the given sense, objective zero.
ScpInstance MakeInstance(AlgebraPtr algebra, std::vector<Element> constraints,
                         std::vector<double> b, Sense sense);

// Rewrites every >= constraint as <-a_i, x> <= -b_i.
ScpInstance CanonicalizeToLE(const ScpInstance& instance);

}  // namespace dpscp

#endif  // DPSCP_INSTANCE_H_
