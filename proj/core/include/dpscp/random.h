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

#ifndef DPSCP_RANDOM_H_
#define DPSCP_RANDOM_H_

#include <cstdint>
#include <random>
#include <vector>

namespace dpscp {

// Seeded, bit-reproducible source of uniform and standard-normal draws.
//
// Uniforms are built from the top 53 bits of a 64-bit Mersenne Twister
// word, and normals from the Box-Muller transform of those uniforms, so the
// stream does not depend on the standard library's distribution classes.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed);

  // Independent stream `index` derived from `master_seed` via splitmix64.
  static RandomSource ForStream(std::uint64_t master_seed,
                                std::uint64_t index);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t NextU64() { return engine_(); }
  // Uniform on (0, 1); never returns 0 or 1.
  double Uniform();
  // Uniform on [lo, hi).
  double Uniform(double lo, double hi);
  double Normal();
  std::vector<double> NormalVector(int n);
  // Uniform integer in [0, n).
  std::uint64_t UniformInt(std::uint64_t n);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t SplitMix64(std::uint64_t x);

}  // namespace dpscp

#endif  // DPSCP_RANDOM_H_
