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

// Self-describing JSON instance files.
//
// Layout (schema_version 1):
//   {
//     "schema_version": 1,
//     "algebra": [{"kind": "sym", "size": 3}, {"kind": "spin", "size": 4}],
//     "constraints": [[<block>, <block>], ...],   // one block per factor
//     "b": [...],
//     "sense": ["<=", ">=", ...],
//     "c": [<block>, <block>],
//     "metadata": {"generator": "...", "seed": 7, "seed_derivation": "...",
//                  "planted_opt": 3.0, "planted_solution": [<block>, ...]}
//   }
//
// Symmetric-matrix blocks hold the r(r+1)/2 upper triangle in row-major
// order; other blocks hold their coordinates verbatim. Doubles are written
// in shortest round-trip form, so write-then-read is exact.

#ifndef DPSCP_INSTANCE_IO_H_
#define DPSCP_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include "dpscp/algebra.h"
#include "dpscp/instance.h"

namespace dpscp {

inline constexpr int kInstanceSchemaVersion = 1;

// Documents how per-seed streams derive from the master seed.
inline constexpr const char* kSeedDerivation =
    "stream i uses mt19937_64 seeded with "
    "splitmix64(seed ^ splitmix64(i))";

std::string SerializeInstance(const ScpInstance& instance);
// Throws std::invalid_argument on malformed or inconsistent input.
ScpInstance ParseInstance(std::string_view text);

// Throws std::runtime_error on I/O failure.
void WriteInstanceFile(const std::string& path, const ScpInstance& instance);
ScpInstance ReadInstanceFile(const std::string& path);

// Parses "sym:3", "spin:4", "real:2" joined by '+', e.g. "sym:2+spin:3".
AlgebraPtr ParseAlgebraSpec(std::string_view spec);
std::string AlgebraSpec(const Algebra& algebra);

}  // namespace dpscp

#endif  // DPSCP_INSTANCE_IO_H_
