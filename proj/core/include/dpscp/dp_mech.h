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

// Differential-privacy primitives: the Gaussian mechanism over Jordan
// algebras (via the coordinate isometry), the exponential mechanism,
// advanced composition, and chi-square tail accounting.

#ifndef DPSCP_DP_MECH_H_
#define DPSCP_DP_MECH_H_

#include <cstddef>
#include <span>
#include <vector>

#include "dpscp/algebra.h"
#include "dpscp/random.h"

namespace dpscp {

struct PrivacyBudget {
  double epsilon;
  double delta;

  // Throws std::invalid_argument unless epsilon > 0 and 0 <= delta < 1.
  static PrivacyBudget Make(double epsilon, double delta);
};

enum class SensitivityNorm { kL1, kL2, kLinf };

struct Sensitivity {
  double value;
  SensitivityNorm norm;

  static Sensitivity L1(double v) { return Make(v, SensitivityNorm::kL1); }
  static Sensitivity L2(double v) { return Make(v, SensitivityNorm::kL2); }
  static Sensitivity Linf(double v) { return Make(v, SensitivityNorm::kLinf); }
  static Sensitivity Make(double v, SensitivityNorm norm);
};

// sigma = Delta_2 * sqrt(2 ln(1.25 / delta)) / epsilon. Requires an l2
// sensitivity and delta > 0.
double GaussianSigma(const Sensitivity& l2, const PrivacyBudget& budget);

// z = phi^{-1}(nu) with nu ~ N(0, sigma^2 I_dim). Draws nothing when
// sigma == 0.
Element GaussianNoiseElement(const AlgebraPtr& algebra, double sigma,
                             RandomSource& rng);

// x + GaussianNoiseElement(x.algebra, sigma). Returns x unchanged for
// sigma == 0.
Element GaussianMechanism(const Element& x, double sigma, RandomSource& rng);

// Calibrates with Delta_1 in place of Delta_2 (||.||_2 <= ||.||_1).
Element L1SensitivityMechanism(const Element& x, const Sensitivity& l1,
                               const PrivacyBudget& budget, RandomSource& rng);

// Calibrates with sqrt(rank) * Delta_inf (||.||_2 <= sqrt(r) ||.||_inf).
Element LinfSensitivityMechanism(const Element& x, const Sensitivity& linf,
                                 int rank, const PrivacyBudget& budget,
                                 RandomSource& rng);
Element LinfSensitivityMechanism(const Element& x, const Sensitivity& linf,
                                 const PrivacyBudget& budget,
                                 RandomSource& rng);

// Selection probabilities proportional to exp(epsilon * score / (2 Delta)),
// computed from max-shifted log-weights.
std::vector<double> ExponentialMechanismProbabilities(
    std::span<const double> scores, double sensitivity, double epsilon);

// Samples an index with the probabilities above. Higher scores are
// preferred; minimizing callers negate their scores.
std::size_t ExponentialMechanism(std::span<const double> scores,
                                 double sensitivity, double epsilon,
                                 RandomSource& rng);

// 2 Delta / epsilon * ln(range_size / beta): with probability >= 1 - beta
// the selected score is within this of the maximum.
double ExpMechanismErrorBound(std::size_t range_size, double sensitivity,
                              double epsilon, double beta);

// Per-mechanism epsilon' = epsilon / sqrt(8 k ln(1/delta)) so that k
// adaptively chosen epsilon'-DP mechanisms compose to (epsilon, delta).
double AdvancedComposition(const PrivacyBudget& budget, long num_mechanisms);

struct ChiSquareThresholds {
  double upper;
  double lower;
};

// For Z = ||nu||_2^2 with nu ~ N(0, sigma^2 I_k):
//   P[Z >= upper] <= exp(-t),  upper = k s2 + (2 sqrt(k t) + 2 t) s2,
//   P[Z <= lower] <= exp(-t),  lower = k s2 - 2 sqrt(k t) s2.
ChiSquareThresholds ChiSquareTailThresholds(int k, double sigma, double t);

// Exact privacy profile of the scalar Gaussian mechanism with noise sigma
// and l2 sensitivity `shift`: the smallest delta for which it is
// (epsilon, delta)-DP. Used to audit GaussianSigma analytically.
double GaussianPrivacyProfile(double sigma, double shift, double epsilon);

}  // namespace dpscp

#endif  // DPSCP_DP_MECH_H_
