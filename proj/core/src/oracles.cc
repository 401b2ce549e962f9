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

#include "dpscp/oracles.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "dpscp/dp_mech.h"
#include "dpscp/eja.h"

namespace dpscp {
namespace {

std::size_t ArgMax(const std::vector<double>& v) {
  return static_cast<std::size_t>(
      std::max_element(v.begin(), v.end()) - v.begin());
}

}  // namespace

Element WeightedConstraintSum(std::span<const double> y,
                              const ScpInstance& instance) {
  if (y.size() != instance.num_constraints()) {
    throw std::invalid_argument("oracle: weight vector length must equal m");
  }
  Element sum(instance.algebra);
  std::span<double> dst = sum.mutable_data();
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 0.0) continue;
    std::span<const double> a = instance.constraints[i].data();
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += y[i] * a[k];
  }
  return sum;
}

std::vector<double> NetScores(const Element& weighted, const GammaNet& net) {
  std::vector<double> scores;
  scores.reserve(net.points.size());
  for (const Element& p : net.points) scores.push_back(Inner(weighted, p));
  return scores;
}

std::size_t CoveringOracleExactIndex(std::span<const double> y,
                                     const ScpInstance& instance,
                                     const GammaNet& net) {
  if (net.points.empty()) throw std::invalid_argument("oracle: empty net");
  const std::vector<double> scores =
      NetScores(WeightedConstraintSum(y, instance), net);
  return static_cast<std::size_t>(
      std::min_element(scores.begin(), scores.end()) - scores.begin());
}

Element CoveringOracleExact(std::span<const double> y,
                            const ScpInstance& instance, const GammaNet& net) {
  return net.points[CoveringOracleExactIndex(y, instance, net)];
}

double CoveringOracleSensitivity(double opt, int s) {
  if (s < 1) throw std::invalid_argument("covering oracle: s must be >= 1");
  return 3.0 * opt / s;
}

std::size_t CoveringOraclePrivateIndex(std::span<const double> y,
                                       const ScpInstance& instance,
                                       const GammaNet& net, int s,
                                       double epsilon, RandomSource& rng) {
  if (net.points.empty()) throw std::invalid_argument("oracle: empty net");
  std::vector<double> scores =
      NetScores(WeightedConstraintSum(y, instance), net);
  for (double& v : scores) v = -v;
  return ExponentialMechanism(scores, CoveringOracleSensitivity(net.opt, s),
                              epsilon, rng);
}

Element CoveringOraclePrivate(std::span<const double> y,
                              const ScpInstance& instance, const GammaNet& net,
                              int s, double epsilon, RandomSource& rng) {
  return net.points[CoveringOraclePrivateIndex(y, instance, net, s, epsilon,
                                               rng)];
}

std::vector<double> ConstraintViolations(const ScpInstance& instance,
                                         const Element& x) {
  std::vector<double> v(instance.num_constraints());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double lhs = Inner(instance.constraints[i], x);
    v[i] = instance.sense[i] == Sense::kLE ? lhs - instance.b[i]
                                           : instance.b[i] - lhs;
  }
  return v;
}

std::size_t DualOracleExact(const ScpInstance& instance, const Element& x) {
  return ArgMax(ConstraintViolations(instance, x));
}

std::size_t DualOraclePrivate(const ScpInstance& instance, const Element& x,
                              double epsilon, double delta_inf,
                              RandomSource& rng) {
  const std::vector<double> scores = ConstraintViolations(instance, x);
  if (delta_inf == 0.0) return ArgMax(scores);
  return ExponentialMechanism(scores, delta_inf, epsilon, rng);
}

double DualOracleAlpha(double delta_inf, double epsilon, std::size_t m,
                       double gamma) {
  return ExpMechanismErrorBound(m, delta_inf, epsilon, gamma);
}

double WidthRho(const ScpInstance& instance) {
  double rho = 0.0;
  for (const Element& a : instance.constraints) {
    rho = std::max(rho, Norm(a, NormKind::kLinf));
  }
  return rho;
}

}  // namespace dpscp
