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

// Random and planted instance generators.

#ifndef DPSCP_GENERATORS_H_
#define DPSCP_GENERATORS_H_

#include <cstdint>

#include "dpscp/algebra.h"
#include "dpscp/instance.h"
#include "dpscp/random.h"

namespace dpscp {

// Covering SDP over Sym(r): PSD constraints of unit spectral norm, b = 1, >=
// sense. With `planted` and m >= r, the first r constraints are q_j q_j^T
// for a random orthonormal basis, so X = I is optimal and OPT = r is
// recorded; the rest are random Gram matrices B B^T / ||B B^T||. Requires
// 1 <= r <= 10 and m >= 1.
ScpInstance GenerateCoveringSdp(int r, int m, std::uint64_t seed,
                                bool planted = true);

// m copies of e / rank(alg) with b = 1, >= sense: OPT = rank exactly.
ScpInstance GenerateUniformCovering(const AlgebraPtr& algebra, int m);

// Plants a random trace-one cone point x* and m <= constraints with
// spectra in [-1, 1] (the largest |eigenvalue| is 1) and
// b_i = <a_i, x*> + margin. The objective is random with unit spectral
// norm. Requires margin >= 0.
ScpInstance GenerateFeasibleScp(const AlgebraPtr& algebra, int m,
                                double margin, std::uint64_t seed);

// A random cone point of trace one: y o y / Tr(y o y).
Element RandomDistribution(const AlgebraPtr& algebra, RandomSource& rng);

}  // namespace dpscp

#endif  // DPSCP_GENERATORS_H_
