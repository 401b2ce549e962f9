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

#include "dpscp/audit.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dpscp/algebra.h"
#include "dpscp/dp_mech.h"
#include "dpscp/eja.h"
#include "dpscp/instance.h"
#include "dpscp/oracles.h"
#include "dpscp/random.h"

namespace dpscp {
namespace {

// Scores of the audited exponential mechanism and a sensitivity-1
// neighbour that moves outcome 0 up and the rest down.
const std::vector<double> kScores = {0.0, 1.0, 1.0, 1.0};
const std::vector<double> kNeighborScores = {1.0, 0.0, 0.0, 0.0};

template <typename Sample>
std::vector<long> Tally(std::size_t outcomes, long trials, Sample sample) {
  std::vector<long> counts(outcomes, 0);
  for (long t = 0; t < trials; ++t) ++counts[sample()];
  return counts;
}

AuditReport AuditExponential(const AuditConfig& config, double declared) {
  const std::vector<double>& neighbor =
      config.neighbor == NeighborSpec::kIdentical ? kScores : kNeighborScores;
  RandomSource rng_d = RandomSource::ForStream(config.seed, 0);
  RandomSource rng_dp = RandomSource::ForStream(config.seed, 1);
  // Sample by inverse CDF from the exact probabilities, as the mechanism
  // itself does, without recomputing them every trial.
  auto sampler = [&](const std::vector<double>& scores, RandomSource& rng) {
    const std::vector<double> p =
        ExponentialMechanismProbabilities(scores, declared, config.epsilon);
    std::vector<double> cdf(p.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) cdf[i] = (acc += p[i]);
    return [cdf, &rng]() {
      const double u = rng.Uniform() * cdf.back();
      return static_cast<std::size_t>(
          std::lower_bound(cdf.begin(), cdf.end() - 1, u) - cdf.begin());
    };
  };
  const std::vector<long> a =
      Tally(kScores.size(), config.trials, sampler(kScores, rng_d));
  const std::vector<long> b =
      Tally(kScores.size(), config.trials, sampler(neighbor, rng_dp));
  return EstimateLogRatio(a, b, config.trials, config.epsilon);
}

AuditReport AuditDualOracle(const AuditConfig& config) {
  // Four constraints over Sym(2) probed at x = e / 2. Shifting every a_i by
  // +-delta_inf * e moves each score by exactly delta_inf.
  constexpr double kDeltaInf = 0.5;
  const AlgebraPtr alg = MakeAlgebra(Factor::SymMatrix(2));
  std::vector<Element> a = {
      FromBlocks(alg, {{0.2, 0.1, -0.3}}), FromBlocks(alg, {{0.5, 0.0, 0.4}}),
      FromBlocks(alg, {{-0.1, 0.3, 0.6}}), FromBlocks(alg, {{0.4, -0.2, 0.1}})};
  const std::vector<double> b = {0.0, 0.2, 0.1, 0.3};
  const ScpInstance d = MakeInstance(alg, a, b, Sense::kLE);
  if (config.neighbor == NeighborSpec::kAdjacent) {
    const Element e = Identity(alg);
    a[0] += kDeltaInf * e;
    for (std::size_t i = 1; i < a.size(); ++i) a[i] -= kDeltaInf * e;
  }
  const ScpInstance dp = MakeInstance(alg, a, b, Sense::kLE);
  Element x = Identity(alg);
  x *= 0.5;

  RandomSource rng_d = RandomSource::ForStream(config.seed, 0);
  RandomSource rng_dp = RandomSource::ForStream(config.seed, 1);
  const std::vector<long> ca = Tally(a.size(), config.trials, [&]() {
    return DualOraclePrivate(d, x, config.epsilon, kDeltaInf, rng_d);
  });
  const std::vector<long> cb = Tally(a.size(), config.trials, [&]() {
    return DualOraclePrivate(dp, x, config.epsilon, kDeltaInf, rng_dp);
  });
  return EstimateLogRatio(ca, cb, config.trials, config.epsilon);
}

AuditReport AuditGaussian(const AuditConfig& config, double sigma_scale) {
  const PrivacyBudget budget = PrivacyBudget::Make(config.epsilon,
                                                   config.delta);
  constexpr double kShift = 1.0;
  const double sigma =
      sigma_scale * GaussianSigma(Sensitivity::L2(kShift), budget);
  const double shift = config.neighbor == NeighborSpec::kIdentical ? 0.0
                                                                   : kShift;
  AuditReport report;
  report.epsilon = config.epsilon;
  report.delta = config.delta;
  report.trials = 0;
  if (shift == 0.0) {
    report.passed = true;
    return report;
  }
  report.delta_at_epsilon = GaussianPrivacyProfile(sigma, shift,
                                                   config.epsilon);
  // The profile is decreasing in epsilon; bisect for delta(eps) = delta.
  double lo = 0.0;
  double hi = config.epsilon;
  while (GaussianPrivacyProfile(sigma, shift, hi) > config.delta) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (GaussianPrivacyProfile(sigma, shift, mid) > config.delta ? lo : hi) = mid;
  }
  report.epsilon_hat = hi;
  report.passed = report.delta_at_epsilon <= config.delta;
  return report;
}

}  // namespace

AuditMechanism ParseAuditMechanism(std::string_view name) {
  if (name == "exp") return AuditMechanism::kExponential;
  if (name == "dual-oracle") return AuditMechanism::kDualOracle;
  if (name == "exp-miscalibrated") {
    return AuditMechanism::kExponentialMiscalibrated;
  }
  if (name == "gaussian") return AuditMechanism::kGaussian;
  if (name == "gaussian-miscalibrated") {
    return AuditMechanism::kGaussianMiscalibrated;
  }
  throw std::invalid_argument("unknown mechanism '" + std::string(name) +
                              "'");
}

std::string AuditMechanismName(AuditMechanism mechanism) {
  switch (mechanism) {
    case AuditMechanism::kExponential:
      return "exp";
    case AuditMechanism::kDualOracle:
      return "dual-oracle";
    case AuditMechanism::kExponentialMiscalibrated:
      return "exp-miscalibrated";
    case AuditMechanism::kGaussian:
      return "gaussian";
    case AuditMechanism::kGaussianMiscalibrated:
      return "gaussian-miscalibrated";
  }
  return "?";
}

NeighborSpec ParseNeighborSpec(std::string_view name) {
  if (name == "adjacent") return NeighborSpec::kAdjacent;
  if (name == "identical") return NeighborSpec::kIdentical;
  throw std::invalid_argument("unknown neighbour spec '" + std::string(name) +
                              "'");
}

AuditReport EstimateLogRatio(const std::vector<long>& counts_d,
                             const std::vector<long>& counts_d_prime,
                             long trials, double epsilon) {
  if (counts_d.size() != counts_d_prime.size()) {
    throw std::invalid_argument("audit: outcome count mismatch");
  }
  AuditReport report;
  report.epsilon = epsilon;
  report.trials = trials;
  report.passed = true;
  const double n = static_cast<double>(trials);
  for (std::size_t i = 0; i < counts_d.size(); ++i) {
    const long ka = counts_d[i];
    const long kb = counts_d_prime[i];
    if (ka < kMinAuditCount || kb < kMinAuditCount) continue;
    ++report.outcomes_audited;
    const double pa = ka / n;
    const double pb = kb / n;
    const double ratio = std::abs(std::log(pa) - std::log(pb));
    const double se =
        std::sqrt((1.0 - pa) / (n * pa) + (1.0 - pb) / (n * pb));
    if (ratio > report.epsilon_hat) {
      report.epsilon_hat = ratio;
      report.ci_half_width = 3.0 * se;
    }
    if (ratio - 3.0 * se > epsilon) report.passed = false;
  }
  return report;
}

AuditReport PrivacyAudit(const AuditConfig& config) {
  if (!(config.epsilon > 0.0)) {
    throw std::invalid_argument("audit: epsilon must be > 0");
  }
  if (config.trials < 1) throw std::invalid_argument("audit: trials < 1");
  AuditReport report;
  switch (config.mechanism) {
    case AuditMechanism::kExponential:
      report = AuditExponential(config, 1.0);
      break;
    case AuditMechanism::kExponentialMiscalibrated:
      report = AuditExponential(config, 0.5);
      break;
    case AuditMechanism::kDualOracle:
      report = AuditDualOracle(config);
      break;
    case AuditMechanism::kGaussian:
      report = AuditGaussian(config, 1.0);
      break;
    case AuditMechanism::kGaussianMiscalibrated:
      report = AuditGaussian(config, 0.5);
      break;
  }
  report.mechanism = AuditMechanismName(config.mechanism);
  report.delta = config.delta;
  return report;
}

}  // namespace dpscp
