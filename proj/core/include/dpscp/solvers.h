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

// Private and non-private solvers for symmetric cone programs.
//
// Every solver averages the iterates of a multiplicative-weights engine:
// the primal solvers run matrix MWU over the cone against a (possibly
// private) most-violated-constraint oracle, and the covering solver runs
// dense MWU over constraints against a (possibly private) net oracle.

#ifndef DPSCP_SOLVERS_H_
#define DPSCP_SOLVERS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpscp/algebra.h"
#include "dpscp/dp_mech.h"
#include "dpscp/instance.h"
#include "dpscp/nets.h"
#include "dpscp/random.h"

namespace dpscp {

struct SolverConfig {
  double alpha = 0.1;
  double beta = 0.05;
  PrivacyBudget budget{1.0, 1e-6};
  // Density parameter of the covering solver.
  int s = 1;
  double delta_inf = 0.0;
  // Public width bound used by the constraint-private solver.
  double rho_bar = 1.0;
  std::uint64_t seed = 0;
  bool record_trace = false;
  // Candidate count of the objective-private downstream search.
  int objective_candidates = 4000;

  // Throws std::invalid_argument unless alpha > 0, beta in (0, 1), s >= 1,
  // delta_inf >= 0 and rho_bar > 0.
  void Validate() const;
};

struct Violation {
  std::size_t index;
  // Amount by which the constraint misses b_i (+ alpha); positive.
  double margin;
};

struct TraceEntry {
  long t;
  // Constraint index for primal solvers, net index for the covering solver.
  std::size_t oracle_index;
  // Largest constraint violation at the round-t iterate.
  double violation;
};

struct SolveReport {
  Element solution;
  long iterations = 0;
  double eta = 0.0;
  double rho = 0.0;
  std::vector<Violation> violated;
  // max_i violation of `solution`; negative when every constraint is slack.
  double max_violation = 0.0;
  // Violation level the run is guaranteed to meet (w.p. >= 1 - beta).
  double alpha_bound = 0.0;
  double epsilon_prime = 0.0;
  double sigma = 0.0;
  long oracle_calls = 0;
  long gaussian_calls = 0;
  // Noisy losses with spectral norm above 1 (constraint-private).
  long loss_overflows = 0;
  // Oracle answers outside the declared width (covering).
  long width_overflows = 0;
  long clamp_events = 0;
  bool guarantee_void = false;
  std::string void_reason;
  std::vector<TraceEntry> trace;
};

// {i : violation_i(x) > alpha}, with margin violation_i(x) - alpha, in index
// order. Violations are sense-aware: <a_i, x> - b_i for <=, mirrored for >=.
std::vector<Violation> CheckViolations(const Element& x,
                                       const ScpInstance& instance,
                                       double alpha);

// b <- b / L; a trace-L feasible point becomes a trace-1 one.
ScpInstance ScaleToDistribution(const ScpInstance& instance, double scale);
// x <- L x; violations scale by L.
Element UnscaleSolution(const Element& x, double scale);

// Iteration count, step size and loss divisor of the primal MWU loop.
struct PrimalSchedule {
  long iterations;
  double eta;
  double loss_divisor;
};

// T = 16 rho^2 ln r / alpha^2, eta = alpha / (4 rho), loss a_p / rho.
PrimalSchedule NonprivateSchedule(double alpha, double rho, int rank);
// T = 144 ln r / alpha^2, eta = alpha / (12 rho_bar), loss (a_p + z) / 2.
PrimalSchedule ConstraintPrivateSchedule(double alpha, double rho_bar,
                                         int rank);

using DualOracle =
    std::function<std::size_t(const ScpInstance&, const Element&,
                              RandomSource&)>;

// Exact-oracle baseline. With a custom oracle it must be an
// (alpha/2, gamma) dual oracle. Rounds where the oracle's pick is not
// violated leave the weights unchanged.
SolveReport SolveFeasibilityNonprivate(const ScpInstance& instance,
                                       double alpha, RandomSource& rng,
                                       const DualOracle& oracle = nullptr,
                                       bool record_trace = false);

// Low-sensitivity scalar privacy: the non-private loop with the private
// dual oracle at epsilon' = AdvancedComposition(budget, T) and gamma = beta
// / T. `schedule` overrides the default constants.
SolveReport SolveScalarPrivate(
    const ScpInstance& instance, const SolverConfig& config,
    RandomSource& rng,
    const std::optional<PrimalSchedule>& schedule = std::nullopt);

// Low-sensitivity constraint privacy: private dual oracle plus a Gaussian
// loss perturbation each round, 2T mechanisms at
// epsilon' = epsilon / (4 sqrt(T ln(1/delta))).
SolveReport SolveConstraintPrivate(const ScpInstance& instance,
                                   const SolverConfig& config,
                                   RandomSource& rng);

struct ObjectivePrivateResult {
  Element perturbed_objective;
  SolveReport report;
  // <c, x> and <c~, x> at the returned candidate.
  double objective_value = 0.0;
  double perturbed_value = 0.0;
  // Best <c, x> over the same candidates plus c_+ / ||c_+||_2.
  double reference_opt = 0.0;
  long candidates_examined = 0;
  long candidates_feasible = 0;
  bool infeasible = false;
};

// Releases c~ = c + z with sigma = delta_inf sqrt(2 r ln(1/delta)) / eps,
// then maximizes <c~, x> over unit-norm cone points satisfying the
// constraints by candidate search: the normalized positive part of c~ (the
// unconstrained maximizer) plus random normalized squares and primitive
// idempotents.
ObjectivePrivateResult SolveObjectivePrivate(const ScpInstance& instance,
                                             const SolverConfig& config,
                                             RandomSource& rng);

struct CoveringAnswer {
  std::size_t index;
  Element point;
};
using CoveringOracle = std::function<CoveringAnswer(
    std::span<const double> y, const ScpInstance& le_instance,
    RandomSource& rng)>;

// Dense MWU over the constraints of a covering instance (GE sense), with
// the given oracle answering on the LE-canonical instance a' = -a,
// b' = -b. T = 36 rho^2 ln m / alpha^2, eta = min(1/2, sqrt(ln m / T)),
// rho = max(3 opt - 1, 1). Violations are counted at `config.alpha`.
SolveReport SolveCoveringDense(const ScpInstance& instance, double opt,
                               const SolverConfig& config, RandomSource& rng,
                               const CoveringOracle& oracle);

struct CoveringOptions {
  NetMode net_mode = NetMode::kGrid;
  // 0 selects DefaultNetGamma(opt).
  double net_gamma = 0.0;
  bool exact_oracle = false;
};

// High-sensitivity constraint privacy: SolveCoveringDense with the
// exponential mechanism over an idempotent net at
// epsilon' = AdvancedComposition(budget, T). Flags the guarantee void when s
// is below CoveringDensityLowerBound.
SolveReport SolveCoveringHighSens(const ScpInstance& instance, double opt,
                                  const SolverConfig& config,
                                  RandomSource& rng,
                                  const CoveringOptions& options = {});

struct FeasibilityProbe {
  bool feasible;
  SolveReport report;
};
using FeasibilitySolver =
    std::function<FeasibilityProbe(double opt, const PrivacyBudget& budget)>;

struct BinarySearchResult {
  double opt_estimate;
  long calls;
  PrivacyBudget per_call_budget;
  // Report of the last feasible probe, if any.
  std::optional<SolveReport> report;
};

// Bisection on the trace budget over [lo, hi] with
// ceil(log2((hi - lo) / tol)) probes, each given budget / probes. Returns
// the upper end of the final bracket. lo == hi returns lo with no probes.
BinarySearchResult BinarySearchOpt(double lo, double hi, double tol,
                                   const PrivacyBudget& budget,
                                   const FeasibilitySolver& solver);

// ceil((r / eps) sqrt(ln(1/delta)) ln(1/beta) ln m), at least 1.
int CoveringDensityLowerBound(int r, const PrivacyBudget& budget,
                              double beta, std::size_t m);

// alpha/2 + 2 delta_inf / eps' * ln(m T / beta).
double ScalarPrivateAlphaBound(double alpha, double delta_inf,
                               double epsilon_prime, std::size_t m,
                               long iterations, double beta);

// 12 delta_inf^(1/2) r^(1/4) (ln r)^(1/4) k^(1/4) / eps^(1/2)
//   * ln(288 ln r / beta)^(1/4) * ln(288 ln r / delta)^(1/2).
double ConstraintPrivateAlphaBound(double delta_inf, int r, int k,
                                   const PrivacyBudget& budget, double beta);

// 4 delta_inf sqrt(r ln(1/delta)) (sqrt(k) + sqrt(ln(1/beta))) / eps.
double ObjectivePrivateAlpha(double delta_inf, int r, int k,
                             const PrivacyBudget& budget, double beta);

}  // namespace dpscp

#endif  // DPSCP_SOLVERS_H_
