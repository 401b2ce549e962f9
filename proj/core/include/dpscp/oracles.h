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

// Minimization oracles for covering programs (over a gamma-net) and
// most-violated-constraint dual oracles, each in an exact and an
// exponential-mechanism form.

#ifndef DPSCP_ORACLES_H_
#define DPSCP_ORACLES_H_

#include <cstddef>
#include <span>
#include <vector>

#include "dpscp/algebra.h"
#include "dpscp/instance.h"
#include "dpscp/nets.h"
#include "dpscp/random.h"

namespace dpscp {

// sum_i y_i a_i.
Element WeightedConstraintSum(std::span<const double> y,
                              const ScpInstance& instance);

// <M, p> for every net point p.
std::vector<double> NetScores(const Element& weighted, const GammaNet& net);

// Index of the net point minimizing <sum_i y_i a_i, p>; lowest index wins
// ties.
std::size_t CoveringOracleExactIndex(std::span<const double> y,
                                     const ScpInstance& instance,
                                     const GammaNet& net);
Element CoveringOracleExact(std::span<const double> y,
                            const ScpInstance& instance, const GammaNet& net);

// Score sensitivity 3 * OPT / s for 1/s-dense inputs.
double CoveringOracleSensitivity(double opt, int s);

// Exponential mechanism over the net with negated scores and sensitivity
// CoveringOracleSensitivity(net.opt, s).
std::size_t CoveringOraclePrivateIndex(std::span<const double> y,
                                       const ScpInstance& instance,
                                       const GammaNet& net, int s,
                                       double epsilon, RandomSource& rng);
Element CoveringOraclePrivate(std::span<const double> y,
                              const ScpInstance& instance, const GammaNet& net,
                              int s, double epsilon, RandomSource& rng);

// Per-constraint violation: <a_i, x> - b_i for <=, b_i - <a_i, x> for >=.
std::vector<double> ConstraintViolations(const ScpInstance& instance,
                                         const Element& x);

// argmax_i of the violation, lowest index on ties. The maximum may be
// negative; callers decide what a non-positive maximum means.
std::size_t DualOracleExact(const ScpInstance& instance, const Element& x);

// Exponential mechanism over violations with sensitivity delta_inf. A zero
// sensitivity degenerates to DualOracleExact and draws nothing.
std::size_t DualOraclePrivate(const ScpInstance& instance, const Element& x,
                              double epsilon, double delta_inf,
                              RandomSource& rng);

// alpha = 2 delta_inf / epsilon * ln(m / gamma).
double DualOracleAlpha(double delta_inf, double epsilon, std::size_t m,
                       double gamma);

// max_i ||a_i||_inf.
double WidthRho(const ScpInstance& instance);

}  // namespace dpscp

#endif  // DPSCP_ORACLES_H_
