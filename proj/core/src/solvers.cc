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

#include "dpscp/solvers.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dpscp/dp_mech.h"
#include "dpscp/eja.h"
#include "dpscp/errors.h"
#include "dpscp/mwu.h"
#include "dpscp/nets.h"
#include "dpscp/oracles.h"

namespace dpscp {
namespace {

constexpr long kMaxIterations = 10'000'000;
constexpr double kFeasibilityTol = 1e-12;
// Relative slack on width comparisons so rounding in normalized inputs does
// not register as an overflow.
constexpr double kWidthTol = 1e-9;

long IterationCount(double value) {
  if (!std::isfinite(value) || value > static_cast<double>(kMaxIterations)) {
    throw BudgetError("solver: iteration count exceeds the desk-scale limit",
                      value);
  }
  return std::max(1L, static_cast<long>(std::ceil(value)));
}

double MaxOf(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

void MarkVoid(SolveReport& report, const std::string& reason) {
  report.guarantee_void = true;
  if (!report.void_reason.empty()) report.void_reason += "; ";
  report.void_reason += reason;
}

void Finish(const ScpInstance& instance, double alpha, SolveReport& report) {
  report.max_violation =
      MaxOf(ConstraintViolations(instance, report.solution));
  report.violated = CheckViolations(report.solution, instance, alpha);
}

// Shared primal MWU loop. `pick` chooses the constraint for iterate x;
// sigma >= 0 perturbs each loss with a Gaussian element of that scale;
// `skip_slack` leaves the weights unchanged when the pick is not violated.
template <typename Pick>
void RunPrimal(const ScpInstance& instance, const PrimalSchedule& schedule,
               Pick pick, double sigma, bool skip_slack, bool record_trace,
               RandomSource& rng, SolveReport& report) {
  const AlgebraPtr& alg = instance.algebra;
  ScmwuState state = ScmwuInit(alg, schedule.eta);
  Element sum(alg);
  const double inv_divisor = 1.0 / schedule.loss_divisor;
  const long total = schedule.iterations;
  for (long t = 1; t <= total; ++t) {
    const Element& x = state.iterate;
    sum += x;
    const std::size_t p = pick(x);
    ++report.oracle_calls;
    if (record_trace) {
      report.trace.push_back(
          {t, p, MaxOf(ConstraintViolations(instance, x))});
    }
    if (skip_slack) {
      const double lhs = Inner(instance.constraints[p], x);
      const double v = instance.sense[p] == Sense::kLE ? lhs - instance.b[p]
                                                       : instance.b[p] - lhs;
      if (v <= 0.0) {
        // The iterate only moves on violated picks; once nothing is
        // violated every remaining round repeats x.
        if (MaxOf(ConstraintViolations(instance, x)) <= 0.0) {
          sum += static_cast<double>(total - t) * x;
          break;
        }
        continue;
      }
    }
    Element loss = instance.constraints[p];
    if (instance.sense[p] == Sense::kGE) loss *= -1.0;
    if (sigma >= 0.0) {
      loss += GaussianNoiseElement(alg, sigma, rng);
      ++report.gaussian_calls;
    }
    loss *= inv_divisor;
    if (sigma >= 0.0 && Norm(loss, NormKind::kLinf) > 1.0 + kWidthTol) {
      ++report.loss_overflows;
    }
    state = ScmwuStep(state, loss);
  }
  report.iterations = total;
  report.eta = schedule.eta;
  report.solution = (1.0 / static_cast<double>(total)) * sum;
}

double LogOrZero(double v) { return v > 1.0 ? std::log(v) : 0.0; }

}  // namespace

void SolverConfig::Validate() const {
  if (!(alpha > 0.0)) throw std::invalid_argument("config: alpha must be > 0");
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument("config: beta must lie in (0, 1)");
  }
  PrivacyBudget::Make(budget.epsilon, budget.delta);
  if (s < 1) throw std::invalid_argument("config: s must be >= 1");
  if (!(delta_inf >= 0.0)) {
    throw std::invalid_argument("config: delta_inf must be >= 0");
  }
  if (!(rho_bar > 0.0)) {
    throw std::invalid_argument("config: rho_bar must be > 0");
  }
  if (objective_candidates < 0) {
    throw std::invalid_argument("config: objective_candidates must be >= 0");
  }
}

std::vector<Violation> CheckViolations(const Element& x,
                                       const ScpInstance& instance,
                                       double alpha) {
  const std::vector<double> v = ConstraintViolations(instance, x);
  std::vector<Violation> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > alpha) out.push_back({i, v[i] - alpha});
  }
  return out;
}

ScpInstance ScaleToDistribution(const ScpInstance& instance, double scale) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("scale_to_distribution: L must be > 0");
  }
  ScpInstance out = instance;
  for (double& b : out.b) b /= scale;
  if (out.metadata.planted_solution) {
    *out.metadata.planted_solution *= 1.0 / scale;
  }
  return out;
}

Element UnscaleSolution(const Element& x, double scale) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("unscale_solution: L must be > 0");
  }
  return scale * x;
}

PrimalSchedule NonprivateSchedule(double alpha, double rho, int rank) {
  if (!(alpha > 0.0) || !(rho > 0.0)) {
    throw std::invalid_argument("schedule: alpha and rho must be > 0");
  }
  const long t = IterationCount(16.0 * rho * rho * std::log(rank) /
                                (alpha * alpha));
  return {t, alpha / (4.0 * rho), rho};
}

PrimalSchedule ConstraintPrivateSchedule(double alpha, double rho_bar,
                                         int rank) {
  if (!(alpha > 0.0) || !(rho_bar > 0.0)) {
    throw std::invalid_argument("schedule: alpha and rho must be > 0");
  }
  const long t = IterationCount(144.0 * std::log(rank) / (alpha * alpha));
  return {t, alpha / (12.0 * rho_bar), 2.0};
}

SolveReport SolveFeasibilityNonprivate(const ScpInstance& instance,
                                       double alpha, RandomSource& rng,
                                       const DualOracle& oracle,
                                       bool record_trace) {
  instance.Validate();
  SolveReport report;
  report.rho = WidthRho(instance);
  if (report.rho == 0.0) report.rho = 1.0;
  const PrimalSchedule schedule =
      NonprivateSchedule(alpha, report.rho, instance.algebra->rank());
  auto pick = [&](const Element& x) {
    return oracle ? oracle(instance, x, rng) : DualOracleExact(instance, x);
  };
  RunPrimal(instance, schedule, pick, -1.0, /*skip_slack=*/true, record_trace,
            rng, report);
  report.alpha_bound = alpha;
  Finish(instance, alpha, report);
  return report;
}

SolveReport SolveScalarPrivate(const ScpInstance& instance,
                               const SolverConfig& config, RandomSource& rng,
                               const std::optional<PrimalSchedule>& schedule) {
  config.Validate();
  instance.Validate();
  SolveReport report;
  report.rho = WidthRho(instance);
  if (report.rho == 0.0) report.rho = 1.0;
  const PrimalSchedule sched =
      schedule ? *schedule
               : NonprivateSchedule(config.alpha, report.rho,
                                    instance.algebra->rank());
  report.epsilon_prime = AdvancedComposition(config.budget, sched.iterations);
  const double eps_prime = report.epsilon_prime;
  auto pick = [&](const Element& x) {
    return DualOraclePrivate(instance, x, eps_prime, config.delta_inf, rng);
  };
  RunPrimal(instance, sched, pick, -1.0, /*skip_slack=*/false,
            config.record_trace, rng, report);
  report.alpha_bound = ScalarPrivateAlphaBound(
      config.alpha, config.delta_inf, eps_prime, instance.num_constraints(),
      sched.iterations, config.beta);
  Finish(instance, config.alpha, report);
  return report;
}

SolveReport SolveConstraintPrivate(const ScpInstance& instance,
                                   const SolverConfig& config,
                                   RandomSource& rng) {
  config.Validate();
  instance.Validate();
  const double delta = config.budget.delta;
  if (!(delta > 0.0)) {
    throw std::invalid_argument("constraint-private: delta must be > 0");
  }
  const int rank = instance.algebra->rank();
  SolveReport report;
  report.rho = config.rho_bar;
  const PrimalSchedule sched =
      ConstraintPrivateSchedule(config.alpha, config.rho_bar, rank);
  const double t = static_cast<double>(sched.iterations);
  report.epsilon_prime =
      config.budget.epsilon / (4.0 * std::sqrt(t * std::log(1.0 / delta)));
  report.sigma = config.delta_inf * std::sqrt(2.0 * rank * std::log(t / delta)) /
                 report.epsilon_prime;
  const double eps_prime = report.epsilon_prime;
  auto pick = [&](const Element& x) {
    return DualOraclePrivate(instance, x, eps_prime, config.delta_inf, rng);
  };
  RunPrimal(instance, sched, pick, report.sigma, /*skip_slack=*/false,
            config.record_trace, rng, report);

  const double threshold = ConstraintPrivateAlphaBound(
      config.delta_inf, rank, instance.algebra->dim(), config.budget,
      config.beta);
  report.alpha_bound = config.alpha;
  if (config.alpha < threshold) {
    MarkVoid(report, "alpha " + std::to_string(config.alpha) +
                         " below the small-noise threshold " +
                         std::to_string(threshold));
  }
  if (report.loss_overflows > 0) {
    MarkVoid(report, std::to_string(report.loss_overflows) +
                         " noisy losses exceeded unit width");
  }
  if (WidthRho(instance) > config.rho_bar * (1.0 + kWidthTol)) {
    MarkVoid(report, "constraint width exceeds the declared rho_bar");
  }
  Finish(instance, config.alpha, report);
  return report;
}

ObjectivePrivateResult SolveObjectivePrivate(const ScpInstance& instance,
                                             const SolverConfig& config,
                                             RandomSource& rng) {
  config.Validate();
  instance.Validate();
  const double delta = config.budget.delta;
  if (!(delta > 0.0)) {
    throw std::invalid_argument("objective-private: delta must be > 0");
  }
  const AlgebraPtr& alg = instance.algebra;
  const int rank = alg->rank();
  ObjectivePrivateResult result;
  SolveReport& report = result.report;
  report.sigma = config.delta_inf * std::sqrt(2.0 * rank * std::log(1.0 / delta)) /
                 config.budget.epsilon;
  result.perturbed_objective =
      instance.objective + GaussianNoiseElement(alg, report.sigma, rng);
  report.gaussian_calls = 1;
  report.epsilon_prime = config.budget.epsilon;
  report.alpha_bound = ObjectivePrivateAlpha(config.delta_inf, rank,
                                             alg->dim(), config.budget,
                                             config.beta);

  const Element& c_tilde = result.perturbed_objective;
  auto feasible = [&](const Element& x) {
    return MaxOf(ConstraintViolations(instance, x)) <= kFeasibilityTol;
  };
  auto positive_part = [](const Element& x) -> std::optional<Element> {
    Element p = SpectralApply(x, [](double v) { return std::max(v, 0.0); });
    const double n = Norm(p, NormKind::kL2);
    if (!(n > 0.0)) return std::nullopt;
    return (1.0 / n) * p;
  };

  double best_perturbed = -std::numeric_limits<double>::infinity();
  double best_reference = -std::numeric_limits<double>::infinity();
  std::optional<Element> best;
  auto consider = [&](const Element& x) {
    ++result.candidates_examined;
    if (!feasible(x)) return;
    ++result.candidates_feasible;
    const double v = Inner(c_tilde, x);
    if (v > best_perturbed) {
      best_perturbed = v;
      best = x;
    }
    best_reference = std::max(best_reference, Inner(instance.objective, x));
  };

  if (auto p = positive_part(c_tilde)) consider(*p);
  for (int i = 0; i < config.objective_candidates; ++i) {
    const Element y = FromCoords(alg, rng.NormalVector(alg->dim()));
    if (i % 2 == 0) {
      if (auto sq = positive_part(JordanProduct(y, y))) consider(*sq);
    } else {
      // A primitive idempotent has unit norm already.
      consider(SpectralDecompose(y).frame.front());
    }
  }
  // The exact unconstrained optimum of the true objective, for the gap.
  if (auto p = positive_part(instance.objective); p && feasible(*p)) {
    best_reference = std::max(best_reference, Inner(instance.objective, *p));
  }

  report.iterations = result.candidates_examined;
  if (!best) {
    result.infeasible = true;
    MarkVoid(report, "no feasible candidate");
    report.solution = Zero(alg);
    Finish(instance, config.alpha, report);
    return result;
  }
  report.solution = *best;
  result.perturbed_value = best_perturbed;
  result.objective_value = Inner(instance.objective, *best);
  result.reference_opt = best_reference;
  Finish(instance, config.alpha, report);
  return result;
}

SolveReport SolveCoveringDense(const ScpInstance& instance, double opt,
                               const SolverConfig& config, RandomSource& rng,
                               const CoveringOracle& oracle) {
  config.Validate();
  instance.Validate();
  if (!(opt > 0.0)) throw std::invalid_argument("covering: opt must be > 0");
  for (Sense s : instance.sense) {
    if (s != Sense::kGE) {
      throw std::invalid_argument("covering: constraints must be >=");
    }
  }
  const std::size_t m = instance.num_constraints();
  if (m == 0) throw std::invalid_argument("covering: no constraints");
  const ScpInstance le = CanonicalizeToLE(instance);

  SolveReport report;
  report.rho = std::max(3.0 * opt - 1.0, 1.0);
  const double log_m = std::log(static_cast<double>(m));
  const double rho = report.rho;
  report.iterations = IterationCount(36.0 * rho * rho * log_m /
                                     (config.alpha * config.alpha));
  const double t_total = static_cast<double>(report.iterations);
  report.eta = m > 1 ? std::min(0.5, std::sqrt(log_m / t_total)) : 0.5;

  DenseMeasure measure = DenseMeasure::Uniform(m);
  Element sum(instance.algebra);
  std::vector<double> loss(m);
  for (long t = 1; t <= report.iterations; ++t) {
    const DenseDistribution y = BregmanProject(measure, config.s);
    CoveringAnswer answer = oracle(y.probabilities, le, rng);
    ++report.oracle_calls;
    bool overflow = false;
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      const double slack = le.b[i] - Inner(le.constraints[i], answer.point);
      overflow = overflow || std::abs(slack) > rho * (1.0 + kWidthTol);
      worst = std::max(worst, -slack);
      loss[i] = slack / (2.0 * rho) + 0.5;
    }
    if (overflow) ++report.width_overflows;
    if (config.record_trace) report.trace.push_back({t, answer.index, worst});
    sum += answer.point;
    measure = DenseMwuStep(measure, loss, report.eta);
  }
  report.clamp_events = measure.clamp_events;
  report.solution = (1.0 / t_total) * sum;
  report.alpha_bound = config.alpha;
  Finish(instance, config.alpha, report);
  return report;
}

SolveReport SolveCoveringHighSens(const ScpInstance& instance, double opt,
                                  const SolverConfig& config,
                                  RandomSource& rng,
                                  const CoveringOptions& options) {
  config.Validate();
  if (!(opt > 0.0)) throw std::invalid_argument("covering: opt must be > 0");
  const double gamma =
      options.net_gamma > 0.0 ? options.net_gamma : DefaultNetGamma(opt);
  const GammaNet net =
      BuildIdempotentNet(instance.algebra, opt, gamma, rng, options.net_mode);

  // Same T as SolveCoveringDense, needed up front for epsilon'.
  const double rho = std::max(3.0 * opt - 1.0, 1.0);
  const long iterations = IterationCount(
      36.0 * rho * rho * std::log(static_cast<double>(instance.num_constraints())) /
      (config.alpha * config.alpha));
  const double eps_prime =
      options.exact_oracle ? 0.0
                           : AdvancedComposition(config.budget, iterations);

  CoveringOracle oracle;
  if (options.exact_oracle) {
    oracle = [&net](std::span<const double> y, const ScpInstance& le,
                    RandomSource&) {
      const std::size_t i = CoveringOracleExactIndex(y, le, net);
      return CoveringAnswer{i, net.points[i]};
    };
  } else {
    oracle = [&net, &config, eps_prime](std::span<const double> y,
                                        const ScpInstance& le,
                                        RandomSource& r) {
      const std::size_t i =
          CoveringOraclePrivateIndex(y, le, net, config.s, eps_prime, r);
      return CoveringAnswer{i, net.points[i]};
    };
  }
  SolveReport report = SolveCoveringDense(instance, opt, config, rng, oracle);
  report.epsilon_prime = eps_prime;
  if (!options.exact_oracle) {
    const int needed = CoveringDensityLowerBound(
        instance.algebra->rank(), config.budget, config.beta,
        instance.num_constraints());
    if (config.s < needed) {
      MarkVoid(report, "density s = " + std::to_string(config.s) +
                           " below the required " + std::to_string(needed));
    }
  }
  if (report.width_overflows > 0) {
    MarkVoid(report, std::to_string(report.width_overflows) +
                         " oracle answers exceeded the declared width");
  }
  return report;
}

BinarySearchResult BinarySearchOpt(double lo, double hi, double tol,
                                   const PrivacyBudget& budget,
                                   const FeasibilitySolver& solver) {
  if (!(tol > 0.0)) throw std::invalid_argument("binary search: tol <= 0");
  if (!(lo <= hi)) throw std::invalid_argument("binary search: lo > hi");
  BinarySearchResult result{lo, 0, budget, std::nullopt};
  if (lo == hi) return result;
  const long calls =
      std::max(0L, static_cast<long>(std::ceil(std::log2((hi - lo) / tol))));
  if (calls > 0) {
    result.per_call_budget = PrivacyBudget::Make(
        budget.epsilon / calls, budget.delta / static_cast<double>(calls));
  }
  for (long k = 0; k < calls; ++k) {
    const double mid = 0.5 * (lo + hi);
    FeasibilityProbe probe = solver(mid, result.per_call_budget);
    ++result.calls;
    if (probe.feasible) {
      hi = mid;
      result.report = std::move(probe.report);
    } else {
      lo = mid;
    }
  }
  result.opt_estimate = hi;
  return result;
}

int CoveringDensityLowerBound(int r, const PrivacyBudget& budget,
                              double beta, std::size_t m) {
  if (!(budget.delta > 0.0 && budget.delta < 1.0) ||
      !(beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument("density bound: delta, beta must be in (0,1)");
  }
  const double s = r / budget.epsilon * std::sqrt(std::log(1.0 / budget.delta)) *
                   std::log(1.0 / beta) *
                   LogOrZero(static_cast<double>(m));
  return std::max(1, static_cast<int>(std::ceil(s)));
}

double ScalarPrivateAlphaBound(double alpha, double delta_inf,
                               double epsilon_prime, std::size_t m,
                               long iterations, double beta) {
  if (delta_inf == 0.0) return alpha / 2.0;
  return alpha / 2.0 +
         2.0 * delta_inf / epsilon_prime *
             std::log(static_cast<double>(m) * iterations / beta);
}

double ConstraintPrivateAlphaBound(double delta_inf, int r, int k,
                                   const PrivacyBudget& budget, double beta) {
  const double log_r = std::log(static_cast<double>(r));
  if (delta_inf == 0.0 || log_r == 0.0) return 0.0;
  return 12.0 * std::sqrt(delta_inf) * std::pow(r, 0.25) *
         std::pow(log_r, 0.25) * std::pow(k, 0.25) /
         std::sqrt(budget.epsilon) *
         std::pow(std::log(288.0 * log_r / beta), 0.25) *
         std::sqrt(std::log(288.0 * log_r / budget.delta));
}

double ObjectivePrivateAlpha(double delta_inf, int r, int k,
                             const PrivacyBudget& budget, double beta) {
  return 4.0 * delta_inf * std::sqrt(r * std::log(1.0 / budget.delta)) *
         (std::sqrt(static_cast<double>(k)) + std::sqrt(std::log(1.0 / beta))) /
         budget.epsilon;
}

}  // namespace dpscp
