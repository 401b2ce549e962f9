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

#include "dpscp/instance.h"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dpscp/eja.h"

namespace dpscp {

void ScpInstance::Validate() const {
  if (!algebra) throw std::invalid_argument("instance has no algebra");
  const std::size_t m = constraints.size();
  if (m == 0) throw std::invalid_argument("instance needs m >= 1 constraints");
  if (b.size() != m || sense.size() != m) {
    throw std::invalid_argument("instance: b/sense length must equal m = " +
                                std::to_string(m));
  }
  for (const Element& a : constraints) {
    if (!SameAlgebra(a.algebra(), *algebra)) {
      throw std::invalid_argument("instance: constraint algebra mismatch");
    }
  }
  if (!SameAlgebra(objective.algebra(), *algebra)) {
    throw std::invalid_argument("instance: objective algebra mismatch");
  }
}

ScpInstance MakeInstance(AlgebraPtr algebra, std::vector<Element> constraints,
                         std::vector<double> b, Sense sense) {
  const std::size_t m = constraints.size();
  ScpInstance instance{algebra, std::move(constraints), std::move(b),
                       Zero(algebra), std::vector<Sense>(m, sense), {}};
  instance.Validate();
  return instance;
}

ScpInstance CanonicalizeToLE(const ScpInstance& instance) {
  ScpInstance out = instance;
  for (std::size_t i = 0; i < out.num_constraints(); ++i) {
    if (out.sense[i] == Sense::kGE) {
      out.constraints[i] *= -1.0;
      out.b[i] = -out.b[i];
      out.sense[i] = Sense::kLE;
    }
  }
  return out;
}

}  // namespace dpscp
