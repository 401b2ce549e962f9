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

// Empirical privacy audits on fixed neighbouring inputs.
//
// Discrete mechanisms are sampled `trials` times on each side of the pair;
// for every outcome seen at least kMinAuditCount times on both sides the
// log-ratio of the empirical frequencies is compared with epsilon, allowing
// three delta-method standard errors. The Gaussian mechanism is checked
// analytically through its exact privacy profile.

#ifndef DPSCP_AUDIT_H_
#define DPSCP_AUDIT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dpscp {

inline constexpr long kMinAuditCount = 50;

enum class AuditMechanism {
  // Exponential mechanism over 4 outcomes, sensitivity 1.
  kExponential,
  // Private dual oracle on neighbouring constraint sets (Delta_inf shift).
  kDualOracle,
  // Negative control: the exponential mechanism calibrated to half the true
  // sensitivity. The audit must fail.
  kExponentialMiscalibrated,
  // Gaussian mechanism at GaussianSigma, checked analytically.
  kGaussian,
  // Negative control: half the calibrated Gaussian sigma.
  kGaussianMiscalibrated,
};

enum class NeighborSpec { kAdjacent, kIdentical };

// "exp", "dual-oracle", "exp-miscalibrated", "gaussian",
// "gaussian-miscalibrated".
AuditMechanism ParseAuditMechanism(std::string_view name);
std::string AuditMechanismName(AuditMechanism mechanism);
// "adjacent", "identical".
NeighborSpec ParseNeighborSpec(std::string_view name);

struct AuditConfig {
  AuditMechanism mechanism = AuditMechanism::kExponential;
  NeighborSpec neighbor = NeighborSpec::kAdjacent;
  double epsilon = 1.0;
  // Only used by the Gaussian audits.
  double delta = 1e-5;
  long trials = 100000;
  std::uint64_t seed = 0;
};

struct AuditReport {
  std::string mechanism;
  double epsilon = 0.0;
  double delta = 0.0;
  long trials = 0;
  // Largest |log-ratio| over audited outcomes (discrete), or the smallest
  // epsilon the exact profile certifies at `delta` (Gaussian).
  double epsilon_hat = 0.0;
  // Three standard errors at the maximizing outcome; 0 for Gaussian.
  double ci_half_width = 0.0;
  // Gaussian only: the exact delta at `epsilon`.
  double delta_at_epsilon = 0.0;
  long outcomes_audited = 0;
  bool passed = false;
};

// Empirical privacy-loss estimate from outcome counts on both sides.
AuditReport EstimateLogRatio(const std::vector<long>& counts_d,
                             const std::vector<long>& counts_d_prime,
                             long trials, double epsilon);

// Throws std::invalid_argument for epsilon <= 0 or trials < 1.
AuditReport PrivacyAudit(const AuditConfig& config);

}  // namespace dpscp

#endif  // DPSCP_AUDIT_H_
