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

#include "dpscp/dp_mech.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpscp/eja.h"

namespace dpscp {

PrivacyBudget PrivacyBudget::Make(double epsilon, double delta) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("privacy budget: epsilon must be positive");
  }
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw std::invalid_argument("privacy budget: delta must lie in [0, 1)");
  }
  return PrivacyBudget{epsilon, delta};
}

Sensitivity Sensitivity::Make(double v, SensitivityNorm norm) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument("sensitivity must be finite and >= 0");
  }
  return Sensitivity{v, norm};
}

double GaussianSigma(const Sensitivity& l2, const PrivacyBudget& budget) {
  if (l2.norm != SensitivityNorm::kL2) {
    throw std::invalid_argument("GaussianSigma needs an l2 sensitivity");
  }
  if (!(budget.delta > 0.0)) {
    throw std::invalid_argument(
        "Gaussian mechanism requires delta > 0 (got delta = 0)");
  }
  return l2.value * std::sqrt(2.0 * std::log(1.25 / budget.delta)) /
         budget.epsilon;
}

Element GaussianNoiseElement(const AlgebraPtr& algebra, double sigma,
                             RandomSource& rng) {
  if (!(sigma >= 0.0)) {
    throw std::invalid_argument("Gaussian noise scale must be >= 0");
  }
  if (sigma == 0.0) return Zero(algebra);
  std::vector<double> nu = rng.NormalVector(algebra->dim());
  for (double& v : nu) v *= sigma;
  return FromCoords(algebra, nu);
}

Element GaussianMechanism(const Element& x, double sigma, RandomSource& rng) {
  if (sigma == 0.0) return x;
  return x + GaussianNoiseElement(x.algebra_ptr(), sigma, rng);
}

Element L1SensitivityMechanism(const Element& x, const Sensitivity& l1,
                               const PrivacyBudget& budget, RandomSource& rng) {
  if (l1.norm != SensitivityNorm::kL1) {
    throw std::invalid_argument("L1SensitivityMechanism needs an l1 bound");
  }
  const double sigma = GaussianSigma(Sensitivity::L2(l1.value), budget);
  return GaussianMechanism(x, sigma, rng);
}

Element LinfSensitivityMechanism(const Element& x, const Sensitivity& linf,
                                 int rank, const PrivacyBudget& budget,
                                 RandomSource& rng) {
  if (linf.norm != SensitivityNorm::kLinf) {
    throw std::invalid_argument("LinfSensitivityMechanism needs an linf bound");
  }
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  const double sigma = GaussianSigma(
      Sensitivity::L2(std::sqrt(static_cast<double>(rank)) * linf.value),
      budget);
  return GaussianMechanism(x, sigma, rng);
}

Element LinfSensitivityMechanism(const Element& x, const Sensitivity& linf,
                                 const PrivacyBudget& budget,
                                 RandomSource& rng) {
  return LinfSensitivityMechanism(x, linf, x.algebra().rank(), budget, rng);
}

std::vector<double> ExponentialMechanismProbabilities(
    std::span<const double> scores, double sensitivity, double epsilon) {
  if (scores.empty()) {
    throw std::invalid_argument("exponential mechanism: empty score vector");
  }
  if (!(sensitivity > 0.0)) {
    throw std::invalid_argument("exponential mechanism: sensitivity must be > 0");
  }
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("exponential mechanism: epsilon must be > 0");
  }
  const double max_score = *std::max_element(scores.begin(), scores.end());
  const double scale = epsilon / (2.0 * sensitivity);
  std::vector<double> w(scores.size());
  double total = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i])) {
      throw std::invalid_argument("exponential mechanism: non-finite score");
    }
    w[i] = std::exp(scale * (scores[i] - max_score));
    total += w[i];
  }
  for (double& v : w) v /= total;
  return w;
}

std::size_t ExponentialMechanism(std::span<const double> scores,
                                 double sensitivity, double epsilon,
                                 RandomSource& rng) {
  const std::vector<double> p =
      ExponentialMechanismProbabilities(scores, sensitivity, epsilon);
  const double u = rng.Uniform();
  double cumulative = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    cumulative += p[i];
    if (u < cumulative) return i;
  }
  // Rounding can leave the cumulative sum a hair below 1; fall back to the
  // last index with positive mass.
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] > 0.0) return i;
  }
  return p.size() - 1;
}

double ExpMechanismErrorBound(std::size_t range_size, double sensitivity,
                              double epsilon, double beta) {
  if (range_size == 0 || !(sensitivity >= 0.0) || !(epsilon > 0.0) ||
      !(beta > 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("ExpMechanismErrorBound: invalid arguments");
  }
  return 2.0 * sensitivity / epsilon *
         std::log(static_cast<double>(range_size) / beta);
}

double AdvancedComposition(const PrivacyBudget& budget, long num_mechanisms) {
  if (num_mechanisms < 1) {
    throw std::invalid_argument("AdvancedComposition: need >= 1 mechanism");
  }
  if (!(budget.delta > 0.0 && budget.delta < 1.0)) {
    throw std::invalid_argument("AdvancedComposition: delta must lie in (0, 1)");
  }
  return budget.epsilon /
         std::sqrt(8.0 * static_cast<double>(num_mechanisms) *
                   std::log(1.0 / budget.delta));
}

ChiSquareThresholds ChiSquareTailThresholds(int k, double sigma, double t) {
  if (k < 1 || !(t > 0.0) || !(sigma >= 0.0)) {
    throw std::invalid_argument("ChiSquareTailThresholds: invalid arguments");
  }
  const double s2 = sigma * sigma;
  const double kt = std::sqrt(static_cast<double>(k) * t);
  return ChiSquareThresholds{k * s2 + (2.0 * kt + 2.0 * t) * s2,
                             k * s2 - 2.0 * kt * s2};
}

double GaussianPrivacyProfile(double sigma, double shift, double epsilon) {
  if (!(sigma > 0.0) || !(shift >= 0.0)) {
    throw std::invalid_argument("GaussianPrivacyProfile: invalid arguments");
  }
  if (shift == 0.0) return 0.0;
  // Privacy loss ~ N(mu, 2 mu) with mu = shift^2 / (2 sigma^2); the tight
  // delta is Phi(-eps/a + a/2) - e^eps Phi(-eps/a - a/2) with a =
  // shift / sigma.
  const double a = shift / sigma;
  auto phi = [](double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); };
  const double d =
      phi(-epsilon / a + a / 2.0) - std::exp(epsilon) * phi(-epsilon / a - a / 2.0);
  return std::max(0.0, d);
}

}  // namespace dpscp
