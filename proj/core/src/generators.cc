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

#include "dpscp/generators.h"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dpscp/eja.h"
#include "dpscp/random.h"

namespace dpscp {
namespace {

// Rows of a random orthonormal basis of R^r (Gram-Schmidt on Gaussians).
std::vector<std::vector<double>> RandomOrthonormalBasis(int r,
                                                        RandomSource& rng) {
  std::vector<std::vector<double>> q;
  while (static_cast<int>(q.size()) < r) {
    std::vector<double> v = rng.NormalVector(r);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : q) {
        double d = 0.0;
        for (int i = 0; i < r; ++i) d += u[i] * v[i];
        for (int i = 0; i < r; ++i) v[i] -= d * u[i];
      }
    }
    double n = 0.0;
    for (double x : v) n += x * x;
    n = std::sqrt(n);
    if (n < 1e-8) continue;
    for (double& x : v) x /= n;
    q.push_back(std::move(v));
  }
  return q;
}

Element Outer(const AlgebraPtr& alg, const std::vector<double>& u) {
  const std::size_t r = u.size();
  std::vector<double> data(r * r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) data[i * r + j] = u[i] * u[j];
  }
  return Element(alg, std::move(data));
}

}  // namespace

Element RandomDistribution(const AlgebraPtr& algebra, RandomSource& rng) {
  const Element y = FromCoords(algebra, rng.NormalVector(algebra->dim()));
  Element sq = JordanProduct(y, y);
  sq *= 1.0 / Trace(sq);
  return sq;
}

ScpInstance GenerateCoveringSdp(int r, int m, std::uint64_t seed,
                                bool planted) {
  if (r < 1 || r > 10) {
    throw std::invalid_argument("generate_covering_sdp: r must be in [1, 10]");
  }
  if (m < 1) throw std::invalid_argument("generate_covering_sdp: m < 1");
  const AlgebraPtr alg = MakeAlgebra(Factor::SymMatrix(r));
  RandomSource rng(seed);
  std::vector<Element> constraints;
  const bool exact_opt = planted && m >= r;
  if (exact_opt) {
    for (const auto& q : RandomOrthonormalBasis(r, rng)) {
      constraints.push_back(Outer(alg, q));
    }
  }
  while (static_cast<int>(constraints.size()) < m) {
    const int cols = 1 + static_cast<int>(rng.UniformInt(r));
    Element gram(alg);
    for (int c = 0; c < cols; ++c) gram += Outer(alg, rng.NormalVector(r));
    gram *= 1.0 / MaxEigenvalue(gram);
    constraints.push_back(std::move(gram));
  }
  ScpInstance inst = MakeInstance(alg, std::move(constraints),
                                  std::vector<double>(m, 1.0), Sense::kGE);
  inst.metadata.generator = "covering_sdp";
  inst.metadata.seed = seed;
  if (exact_opt) {
    inst.metadata.planted_opt = static_cast<double>(r);
    inst.metadata.planted_solution = Identity(alg);
  }
  return inst;
}

ScpInstance GenerateUniformCovering(const AlgebraPtr& algebra, int m) {
  if (m < 1) throw std::invalid_argument("generate_uniform_covering: m < 1");
  const double r = algebra->rank();
  Element a = Identity(algebra);
  a *= 1.0 / r;
  ScpInstance inst =
      MakeInstance(algebra, std::vector<Element>(m, a),
                   std::vector<double>(m, 1.0), Sense::kGE);
  inst.metadata.generator = "uniform_covering";
  inst.metadata.planted_opt = r;
  inst.metadata.planted_solution = Identity(algebra);
  return inst;
}

ScpInstance GenerateFeasibleScp(const AlgebraPtr& algebra, int m,
                                double margin, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("generate_feasible_scp: m < 1");
  if (!(margin >= 0.0)) {
    throw std::invalid_argument("generate_feasible_scp: margin must be >= 0");
  }
  RandomSource rng(seed);
  const Element x_star = RandomDistribution(algebra, rng);
  auto unit_spectrum = [&]() {
    Element z = FromCoords(algebra, rng.NormalVector(algebra->dim()));
    z *= 1.0 / Norm(z, NormKind::kLinf);
    return z;
  };
  std::vector<Element> constraints;
  std::vector<double> b;
  for (int i = 0; i < m; ++i) {
    constraints.push_back(unit_spectrum());
    b.push_back(Inner(constraints.back(), x_star) + margin);
  }
  ScpInstance inst =
      MakeInstance(algebra, std::move(constraints), std::move(b), Sense::kLE);
  inst.objective = unit_spectrum();
  inst.metadata.generator = "feasible_scp";
  inst.metadata.seed = seed;
  inst.metadata.planted_solution = x_star;
  return inst;
}

}  // namespace dpscp
