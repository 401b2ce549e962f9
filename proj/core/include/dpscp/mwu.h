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

// Multiplicative-weights engines: the symmetric-cone update over
// distributional elements, and dense MWU over constraint measures with
// Bregman projection onto 1/s-dense distributions.

#ifndef DPSCP_MWU_H_
#define DPSCP_MWU_H_

#include <cstddef>
#include <span>
#include <vector>

#include "dpscp/algebra.h"

namespace dpscp {

struct ScmwuState {
  double eta;
  // Sum of all losses seen so far.
  Element cumulative_loss;
  // exp(-eta * cumulative_loss) / Tr(exp(-eta * cumulative_loss)).
  Element iterate;
  long steps = 0;
};

// Starts at e / r with zero cumulative loss. Requires eta > 0.
ScmwuState ScmwuInit(const AlgebraPtr& algebra, double eta);

// Adds `loss` to the cumulative loss and recomputes the normalized
// exponential. The spectrum is shifted by its maximum before
// exponentiating. Throws std::domain_error on non-finite values.
ScmwuState ScmwuStep(const ScmwuState& state, const Element& loss);

struct RegretCertificate {
  double lhs;
  double rhs_bound;
  bool holds() const { return lhs <= rhs_bound; }
};

// lhs = sum_t <l_t, x_t>; rhs = lambda_min(sum_t l_t) + eta T + ln(r)/eta.
// The comparator is the primitive idempotent on the minimum eigendirection
// of the cumulative loss, the best trace-one cone point for a linear loss.
RegretCertificate ScmwuRegretCertificate(std::span<const Element> losses,
                                         std::span<const Element> iterates,
                                         double eta);

// A measure F over m actions with values in [0, 1].
struct DenseMeasure {
  std::vector<double> weights;
  // Number of weights clamped back to 1 by DenseMwuStep.
  long clamp_events = 0;

  static DenseMeasure Uniform(std::size_t m);
};

// A distribution over m actions with every mass <= 1/s.
struct DenseDistribution {
  std::vector<double> probabilities;
  int density = 1;
  // The scale c with sum_f min(1, c F_f) = s.
  double scale = 0.0;
};

// Gamma_s F: (1/s) min(1, c F_f) with c solving sum_f min(1, c F_f) = s.
// c is found by sorting and scanning the piecewise-linear breakpoints,
// with a bisection fallback. Throws InfeasibleProjectionError when fewer
// than s weights are positive.
DenseDistribution BregmanProject(const DenseMeasure& measure, int s);
DenseDistribution BregmanProject(std::span<const double> weights, int s);

// F_f <- exp(-eta l_f) F_f, clamping to 1.
DenseMeasure DenseMwuStep(const DenseMeasure& measure,
                          std::span<const double> loss, double eta);

// lhs = (1/T) sum_t <l_t, B_t>; rhs = best uniform-on-s-subset comparator
// + eta + ln(m) / (eta T). The best comparator puts 1/s on the s smallest
// cumulative losses.
RegretCertificate DenseRegretCertificate(
    std::span<const std::vector<double>> losses,
    std::span<const std::vector<double>> projected, int s, double eta);

}  // namespace dpscp

#endif  // DPSCP_MWU_H_
