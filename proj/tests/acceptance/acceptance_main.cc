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

// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails.
//
//   acceptance [--cli <path to dpscp>] [--workdir <dir>]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "dpscp/algebra.h"
#include "dpscp/audit.h"
#include "dpscp/dp_mech.h"
#include "dpscp/eja.h"
#include "dpscp/generators.h"
#include "dpscp/instance.h"
#include "dpscp/mwu.h"
#include "dpscp/oracles.h"
#include "dpscp/random.h"
#include "dpscp/solvers.h"
#include "testing.h"

namespace dpscp {
namespace {

using testing::Dist;
using testing::MixedAlgebra;
using testing::RandomBounded;
using testing::RandomElement;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates the worst observed value of a quantity against its limit.
class Check {
 public:
  Check(std::string name, double limit) : name_(std::move(name)), limit_(limit) {}
  void Observe(double value) { worst_ = std::max(worst_, value); }
  bool ok() const { return worst_ <= limit_; }
  std::string Summary() const {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s=%.3g/%.3g", name_.c_str(), worst_,
                  limit_);
    return buf;
  }

 private:
  std::string name_;
  double limit_;
  double worst_ = 0.0;
};

Outcome FromChecks(const std::vector<Check>& checks, std::string extra = "") {
  Outcome out;
  for (const Check& c : checks) {
    out.pass = out.pass && c.ok();
    if (!out.detail.empty()) out.detail += " ";
    out.detail += c.Summary();
  }
  if (!extra.empty()) out.detail += " " + extra;
  return out;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string Fmt(const char* format, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), format, a, b);
  return buf;
}

std::vector<AlgebraPtr> AxiomAlgebras() {
  return {MakeAlgebra(Factor::RealVector(4)),
          MakeAlgebra(Factor::SymMatrix(3)), MakeAlgebra(Factor::Spin(5)),
          MixedAlgebra()};
}

// Commutativity, Jordan identity, trace-form associativity, Cauchy-Schwarz,
// Holder and Golden-Thompson on 1000 samples per algebra.
Outcome EjaAxioms() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Check> checks = {
      {"commute", 1e-10},  {"jordan", 1e-8},  {"assoc", 1e-8},
      {"cs", 1e-10},       {"holder", 1e-8},  {"gt", 1e-8},
      {"selfdual", 1e-10}};
  RandomSource rng(101);
  for (const AlgebraPtr& alg : AxiomAlgebras()) {
    for (int trial = 0; trial < 1000; ++trial) {
      const Element x = RandomBounded(alg, rng, 2.0);
      const Element y = RandomBounded(alg, rng, 2.0);
      const Element z = RandomBounded(alg, rng, 2.0);
      const Element xy = JordanProduct(x, y);
      const Element x2 = JordanProduct(x, x);
      checks[0].Observe(Dist(xy, JordanProduct(y, x)));
      checks[1].Observe(Dist(JordanProduct(x2, xy),
                             JordanProduct(x, JordanProduct(x2, y))));
      checks[2].Observe(std::abs(Inner(xy, z) - Inner(x, JordanProduct(y, z))));
      const double ip = std::abs(Inner(x, y));
      checks[3].Observe(ip - Norm(x, NormKind::kL2) * Norm(y, NormKind::kL2));
      checks[4].Observe(std::max(
          {ip - Norm(x, NormKind::kL1) * Norm(y, NormKind::kLinf),
           ip - Norm(x, NormKind::kL2) * Norm(y, NormKind::kL2),
           ip - Norm(x, NormKind::kLinf) * Norm(y, NormKind::kL1)}));
      checks[5].Observe(Trace(Exp(x + y)) -
                        Trace(JordanProduct(Exp(x), Exp(y))));
      checks[6].Observe(-Inner(x2, JordanProduct(y, y)));
    }
  }
  const double secs = Seconds(start);
  Check time("seconds", 10.0);
  time.Observe(secs);
  checks.push_back(time);
  return FromChecks(checks);
}

Element PowerSeriesExp(const Element& x, int terms) {
  Element sum = Identity(x.algebra_ptr());
  Element term = Identity(x.algebra_ptr());
  for (int n = 1; n < terms; ++n) {
    term = JordanProduct(term, x) * (1.0 / n);
    sum += term;
  }
  return sum;
}

Outcome SpectralFidelity() {
  std::vector<AlgebraPtr> algebras;
  for (int r = 1; r <= 8; ++r) algebras.push_back(MakeAlgebra(Factor::SymMatrix(r)));
  for (int n = 2; n <= 16; ++n) algebras.push_back(MakeAlgebra(Factor::Spin(n)));
  algebras.push_back(MixedAlgebra());
  algebras.push_back(MakeAlgebra({Factor::SymMatrix(8), Factor::Spin(16),
                                  Factor::RealVector(3)}));
  std::vector<Check> checks = {{"residual", 1e-10}, {"frame", 1e-9},
                               {"exp_series", 1e-8}};
  RandomSource rng(202);
  for (const AlgebraPtr& alg : algebras) {
    for (int trial = 0; trial < 20; ++trial) {
      const Element x = RandomElement(alg, rng);
      const SpectralDecomposition d = SpectralDecompose(x);
      checks[0].Observe(Dist(Reconstruct(d, [](double v) { return v; }), x));
      Element sum = Zero(alg);
      for (std::size_t i = 0; i < d.frame.size(); ++i) {
        sum += d.frame[i];
        checks[1].Observe(std::abs(Trace(d.frame[i]) - 1.0));
        for (std::size_t j = i; j < d.frame.size(); ++j) {
          const Element p = JordanProduct(d.frame[i], d.frame[j]);
          checks[1].Observe(i == j ? Dist(p, d.frame[i])
                                   : Norm(p, NormKind::kL2));
        }
      }
      checks[1].Observe(Dist(sum, Identity(alg)));
      const Element b = RandomBounded(alg, rng, 1.0);
      checks[2].Observe(Dist(Exp(b), PowerSeriesExp(b, 20)));
    }
  }
  return FromChecks(checks);
}

Outcome Isometry() {
  Check check("inner_diff", 1e-10);
  RandomSource rng(303);
  std::vector<AlgebraPtr> algebras = AxiomAlgebras();
  for (int trial = 0; trial < 1000; ++trial) {
    const AlgebraPtr& alg = algebras[trial % algebras.size()];
    const Element x = RandomElement(alg, rng);
    const Element y = RandomElement(alg, rng);
    const std::vector<double> px = ToCoords(x);
    const std::vector<double> py = ToCoords(y);
    double dot = 0.0;
    for (std::size_t i = 0; i < px.size(); ++i) dot += px[i] * py[i];
    check.Observe(std::abs(dot - Inner(x, y)));
  }
  return FromChecks({check});
}

// Adversary: half of each loss sits on the iterate's top eigendirection, the
// other half is random; ||loss||_inf <= 1.
Element AdversarialLoss(const Element& iterate, RandomSource& rng) {
  const SpectralDecomposition d = SpectralDecompose(iterate);
  Element loss = 0.5 * d.frame.front();
  loss += RandomBounded(iterate.algebra_ptr(), rng, 0.5);
  return loss;
}

// Every s-subset of m actions, uniformly weighted.
double ExhaustiveBestSubset(const std::vector<double>& cumulative, int s) {
  const int m = static_cast<int>(cumulative.size());
  std::vector<bool> mask(m, false);
  std::fill(mask.begin(), mask.begin() + s, true);
  double best = INFINITY;
  do {
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
      if (mask[i]) sum += cumulative[i];
    }
    best = std::min(best, sum / s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return best;
}

Outcome RegretCertificates() {
  constexpr int kT = 500;
  int scmwu_fail = 0;
  int scmwu_runs = 0;
  for (int r : {2, 3, 8}) {
    const AlgebraPtr alg = MakeAlgebra(Factor::SymMatrix(r));
    const double eta = std::sqrt(std::log(static_cast<double>(r)) / kT);
    for (int seed = 0; seed < 100; ++seed) {
      RandomSource rng = RandomSource::ForStream(404, seed * 10 + r);
      ScmwuState state = ScmwuInit(alg, eta);
      std::vector<Element> losses;
      std::vector<Element> iterates;
      for (int t = 0; t < kT; ++t) {
        iterates.push_back(state.iterate);
        losses.push_back(AdversarialLoss(state.iterate, rng));
        state = ScmwuStep(state, losses.back());
      }
      scmwu_fail += !ScmwuRegretCertificate(losses, iterates, eta).holds();
      ++scmwu_runs;
    }
  }

  constexpr int kM = 16;
  constexpr int kS = 4;
  int dense_fail = 0;
  int comparator_mismatch = 0;
  const double eta = std::sqrt(std::log(static_cast<double>(kM)) / kT);
  for (int seed = 0; seed < 100; ++seed) {
    RandomSource rng = RandomSource::ForStream(405, seed);
    DenseMeasure f = DenseMeasure::Uniform(kM);
    std::vector<std::vector<double>> losses;
    std::vector<std::vector<double>> projected;
    std::vector<double> cumulative(kM, 0.0);
    for (int t = 0; t < kT; ++t) {
      projected.push_back(BregmanProject(f, kS).probabilities);
      // Adversary: loss 1 on the most-weighted actions, random elsewhere.
      std::vector<double> loss(kM);
      for (int i = 0; i < kM; ++i) {
        loss[i] = projected.back()[i] >= 1.0 / kM ? 1.0 : rng.Uniform();
        cumulative[i] += loss[i];
      }
      f = DenseMwuStep(f, loss, eta);
      losses.push_back(std::move(loss));
    }
    const RegretCertificate c =
        DenseRegretCertificate(losses, projected, kS, eta);
    dense_fail += !c.holds();
    const double expected_rhs = ExhaustiveBestSubset(cumulative, kS) / kT +
                                eta + std::log(kM) / (eta * kT);
    comparator_mismatch += std::abs(expected_rhs - c.rhs_bound) > 1e-9;
  }
  Outcome out;
  out.pass = scmwu_fail == 0 && dense_fail == 0 && comparator_mismatch == 0;
  out.detail = "scmwu_failures=" + std::to_string(scmwu_fail) + "/" +
               std::to_string(scmwu_runs) +
               " dense_failures=" + std::to_string(dense_fail) +
               "/100 comparator_mismatches=" +
               std::to_string(comparator_mismatch);
  return out;
}

// Neighbouring measures differ in a single action's weight (including the
// add-a-constraint case where one side has weight 0).
Outcome BregmanStability() {
  RandomSource rng(505);
  Check check("l1_times_s", 2.0 + 1e-10);
  for (int trial = 0; trial < 1000; ++trial) {
    const int s = 2 << (trial % 4);
    const int m = s + 1 + static_cast<int>(rng.UniformInt(48));
    std::vector<double> f(m);
    for (double& v : f) v = rng.Uniform();
    std::vector<double> g = f;
    const std::size_t j = rng.UniformInt(m);
    if (trial % 2 == 0) {
      f[j] = 0.0;
    } else {
      g[j] = rng.Uniform();
    }
    const DenseDistribution a = BregmanProject(f, s);
    const DenseDistribution b = BregmanProject(g, s);
    double l1 = 0.0;
    for (int i = 0; i < m; ++i) {
      l1 += std::abs(a.probabilities[i] - b.probabilities[i]);
    }
    check.Observe(l1 * s);
  }
  return FromChecks({check});
}

// ||z||_2^2 for z drawn by the Gaussian mechanism over an algebra of
// dimension k.
Outcome ChiSquare() {
  const std::vector<AlgebraPtr> algebras = {
      MakeAlgebra(Factor::SymMatrix(4)),
      MakeAlgebra({Factor::SymMatrix(13), Factor::Spin(9)})};
  constexpr int kDraws = 100000;
  const double sigma = 0.7;
  const std::vector<double> ts = {1.0, 2.0, 3.0};
  RandomSource rng(606);
  Outcome out;
  for (const AlgebraPtr& alg : algebras) {
    const int k = alg->dim();
    std::vector<ChiSquareThresholds> th;
    for (double t : ts) th.push_back(ChiSquareTailThresholds(k, sigma, t));
    std::vector<long> above(ts.size(), 0);
    std::vector<long> below(ts.size(), 0);
    for (int i = 0; i < kDraws; ++i) {
      const Element z = GaussianNoiseElement(alg, sigma, rng);
      const double n2 = Inner(z, z);
      for (std::size_t j = 0; j < ts.size(); ++j) {
        above[j] += n2 >= th[j].upper;
        below[j] += n2 <= th[j].lower;
      }
    }
    for (std::size_t j = 0; j < ts.size(); ++j) {
      const double limit = 1.5 * std::exp(-ts[j]);
      const double hi = static_cast<double>(above[j]) / kDraws;
      const double lo = static_cast<double>(below[j]) / kDraws;
      out.pass = out.pass && hi <= limit && lo <= limit;
      out.detail += "k=" + std::to_string(k) +
                    Fmt(",t=%g:", ts[j]) + Fmt("%.4f/%.4f", hi, lo) + " ";
    }
  }
  return out;
}

// Tight configuration: the best outcome scores 0 and every other outcome
// sits just beyond the error bound, so every non-argmax pick is a failure.
// A random-score configuration is checked as well.
Outcome ExpMechanismUtility() {
  constexpr int kTrials = 10000;
  const double beta = 0.1;
  const double eps = 1.0;
  const double sens = 1.0;
  const double slack = 3.0 * std::sqrt(beta * (1 - beta) / kTrials);
  RandomSource rng(707);
  Outcome out;
  for (int n : {2, 8, 64}) {
    const double bound = ExpMechanismErrorBound(n, sens, eps, beta);
    for (bool tight : {true, false}) {
      std::vector<double> scores(n);
      for (int i = 0; i < n; ++i) {
        scores[i] = tight ? (i == 0 ? 0.0 : -bound * (1 + 1e-9))
                          : rng.Uniform(-3 * bound, 0.0);
      }
      const double best = *std::max_element(scores.begin(), scores.end());
      long failures = 0;
      for (int t = 0; t < kTrials; ++t) {
        const std::size_t pick = ExponentialMechanism(scores, sens, eps, rng);
        failures += best - scores[pick] > bound;
      }
      const double rate = static_cast<double>(failures) / kTrials;
      out.pass = out.pass && rate <= beta + slack;
      out.detail += "|R|=" + std::to_string(n) + (tight ? "t" : "r") +
                    Fmt(":%.4f ", rate);
    }
  }
  out.detail += Fmt("limit=%.4f", beta + slack);
  return out;
}

Outcome Audit() {
  struct Case {
    AuditMechanism mechanism;
    bool expect_pass;
  };
  const std::vector<Case> cases = {
      {AuditMechanism::kExponential, true},
      {AuditMechanism::kDualOracle, true},
      {AuditMechanism::kExponentialMiscalibrated, false},
      {AuditMechanism::kGaussian, true},
      {AuditMechanism::kGaussianMiscalibrated, false}};
  Outcome out;
  for (const Case& c : cases) {
    AuditConfig config;
    config.mechanism = c.mechanism;
    config.epsilon = 1.0;
    config.trials = 1000000;
    config.seed = 808;
    const AuditReport r = PrivacyAudit(config);
    out.pass = out.pass && r.passed == c.expect_pass;
    out.detail += r.mechanism + Fmt(":eps_hat=%.3f", r.epsilon_hat) +
                  (r.passed ? "(pass) " : "(violation) ");
  }
  return out;
}

Outcome NonprivateSolver() {
  const AlgebraPtr alg = MakeAlgebra(Factor::SymMatrix(3));
  const double alpha = 0.1;
  int failures = 0;
  double worst = -INFINITY;
  for (int seed = 0; seed < 20; ++seed) {
    const ScpInstance inst = GenerateFeasibleScp(alg, 32, 0.0, 900 + seed);
    RandomSource rng = RandomSource::ForStream(909, seed);
    const SolveReport r = SolveFeasibilityNonprivate(inst, alpha, rng);
    failures += !CheckViolations(r.solution, inst, alpha).empty();
    worst = std::max(worst, r.max_violation);
  }
  Outcome out;
  out.pass = failures == 0;
  out.detail = "failures=" + std::to_string(failures) +
               Fmt("/20 worst_violation=%.4f alpha=%.2f", worst, alpha);
  return out;
}

Outcome CoveringSolver() {
  constexpr int kR = 3;
  constexpr int kM = 64;
  constexpr int kSeeds = 20;
  SolverConfig config;
  config.budget = PrivacyBudget::Make(2.0, 0.1);
  config.beta = 0.1;
  config.s = CoveringDensityLowerBound(kR, config.budget, config.beta, kM);
  const AlgebraPtr alg = MakeAlgebra(Factor::SymMatrix(kR));

  struct Family {
    std::string name;
    std::function<ScpInstance(int)> make;
  };
  const std::vector<Family> families = {
      {"uniform", [&](int) { return GenerateUniformCovering(alg, kM); }},
      {"planted",
       [&](int seed) { return GenerateCoveringSdp(kR, kM, 1000 + seed); }}};
  Outcome out;
  out.detail = "s=" + std::to_string(config.s) + " ";
  for (const Family& family : families) {
    int good = 0;
    int voided = 0;
    // Informational: the worst unscaled violation.
    double worst = -INFINITY;
    double slowest = 0.0;
    for (int seed = 0; seed < kSeeds; ++seed) {
      const ScpInstance inst = family.make(seed);
      const double opt = *inst.metadata.planted_opt;
      SolverConfig c = config;
      c.alpha = 0.5 * opt;
      RandomSource rng = RandomSource::ForStream(1010, seed);
      const auto start = std::chrono::steady_clock::now();
      const SolveReport r = SolveCoveringHighSens(inst, opt, c, rng);
      slowest = std::max(slowest, Seconds(start));
      good += static_cast<long>(r.violated.size()) < c.s;
      voided += r.guarantee_void;
      worst = std::max(worst, r.max_violation);
    }
    const bool ok = good >= (9 * kSeeds + 9) / 10 && slowest < 60.0 &&
                    voided == 0;
    out.pass = out.pass && ok;
    out.detail += family.name + ":" + std::to_string(good) + "/" +
                  std::to_string(kSeeds) + Fmt(",max_s=%.2f", slowest) +
                  Fmt(",max_violation=%.3f", worst) +
                  (voided ? ",void=" + std::to_string(voided) : "") + " ";
  }
  return out;
}

Outcome ConstraintPrivateSolver() {
  Outcome out;
  // Zero sensitivity: bit-identical to the scalar-private loop run with the
  // same schedule and seed.
  int mismatches = 0;
  for (int seed = 0; seed < 10; ++seed) {
    const AlgebraPtr alg = seed % 2 ? MixedAlgebra()
                                    : MakeAlgebra(Factor::SymMatrix(3));
    const ScpInstance inst = GenerateFeasibleScp(alg, 12, 0.0, 1100 + seed);
    SolverConfig c;
    c.budget = PrivacyBudget::Make(1.0, 1e-3);
    c.delta_inf = 0.0;
    c.alpha = 0.4;
    RandomSource a = RandomSource::ForStream(1111, seed);
    RandomSource b = RandomSource::ForStream(1111, seed);
    const SolveReport cp = SolveConstraintPrivate(inst, c, a);
    const SolveReport sp = SolveScalarPrivate(
        inst, c, b, ConstraintPrivateSchedule(c.alpha, c.rho_bar, alg->rank()));
    mismatches += !(cp.iterations == sp.iterations &&
                    cp.solution == sp.solution && a.NextU64() == b.NextU64());
  }
  out.pass = mismatches == 0;
  out.detail = "bit_mismatches=" + std::to_string(mismatches) + " ";

  // Positive sensitivity against the explicit alpha.
  const AlgebraPtr alg = MakeAlgebra(Factor::SymMatrix(2));
  SolverConfig c;
  c.budget = PrivacyBudget::Make(2.0, 0.05);
  c.beta = 0.05;
  c.delta_inf = 1e-4;
  c.alpha = ConstraintPrivateAlphaBound(c.delta_inf, alg->rank(), alg->dim(),
                                        c.budget, c.beta);
  int within = 0;
  int voided = 0;
  double composition_err = 0.0;
  for (int seed = 0; seed < 50; ++seed) {
    const ScpInstance inst = GenerateFeasibleScp(alg, 8, 0.0, 1200 + seed);
    RandomSource rng = RandomSource::ForStream(1212, seed);
    const SolveReport r = SolveConstraintPrivate(inst, c, rng);
    within += r.max_violation <= c.alpha;
    voided += r.guarantee_void;
    const double T = static_cast<double>(r.iterations);
    const double direct =
        c.budget.epsilon / (4 * std::sqrt(T * std::log(1 / c.budget.delta)));
    composition_err = std::max(
        {composition_err,
         std::abs(r.epsilon_prime -
                  AdvancedComposition(c.budget, 2 * r.iterations)) /
             r.epsilon_prime,
         std::abs(direct - r.epsilon_prime) / r.epsilon_prime});
  }
  const bool ok = within >= 48 && voided == 0 && composition_err <= 1e-14;
  out.pass = out.pass && ok;
  out.detail += "within_alpha=" + std::to_string(within) +
                Fmt("/50 alpha=%.4f composition_rel_err=%.1e", c.alpha,
                    composition_err) +
                (voided ? " void=" + std::to_string(voided) : "");
  return out;
}

// maximize <diag(1, 0), x> over unit-norm cone points: OPT = 1 at e1 e1^T.
// A single slack trace constraint stands in for "no constraints".
Outcome ObjectivePrivateSolver() {
  const AlgebraPtr alg = MakeAlgebra(Factor::SymMatrix(2));
  ScpInstance inst = MakeInstance(alg, {Identity(alg)}, {10.0}, Sense::kLE);
  inst.objective = Element(alg, {1, 0, 0, 0});
  SolverConfig c;
  c.budget = PrivacyBudget::Make(1.0, 0.05);
  c.beta = 0.05;
  // Small enough that alpha < OPT, so the check is not vacuous.
  c.delta_inf = 0.01;
  const double alpha = ObjectivePrivateAlpha(c.delta_inf, alg->rank(),
                                             alg->dim(), c.budget, c.beta);
  int ok = 0;
  double worst = INFINITY;
  for (int seed = 0; seed < 50; ++seed) {
    RandomSource rng = RandomSource::ForStream(1313, seed);
    const ObjectivePrivateResult r = SolveObjectivePrivate(inst, c, rng);
    ok += r.objective_value >= 1.0 - alpha;
    worst = std::min(worst, r.objective_value);
  }
  Outcome out;
  out.pass = ok >= 48;
  out.detail = "ok=" + std::to_string(ok) +
               Fmt("/50 alpha=%.4f worst_value=%.4f", alpha, worst);
  return out;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

int Run(const std::string& command) {
  const int status = std::system(command.c_str());
  return status == -1 ? -1 : WEXITSTATUS(status);
}

// Runs `dpscp solve` twice per solver with the same seeds and compares the
// CSV output byte for byte.
Outcome CliDeterminism(const std::string& cli,
                       const std::filesystem::path& workdir) {
  Outcome out;
  if (cli.empty()) {
    out.pass = false;
    out.detail = "no --cli given";
    return out;
  }
  std::filesystem::create_directories(workdir);
  const std::string q = "\"";
  const auto feasible = workdir / "feasible.json";
  const auto covering = workdir / "covering.json";
  if (Run(q + cli + q + " gen --kind feasible --alg sym:2+spin:3 --m 8" +
          " --seed 5 --out " + q + feasible.string() + q) != 0 ||
      Run(q + cli + q + " gen --kind covering --r 2 --m 6 --seed 6 --out " +
          q + covering.string() + q) != 0) {
    out.pass = false;
    out.detail = "gen failed";
    return out;
  }
  struct Job {
    std::string solver;
    std::filesystem::path instance;
    std::string extra;
  };
  const std::vector<Job> jobs = {
      {"nonprivate", feasible, "--alpha 0.2"},
      {"scalar", feasible, "--alpha 0.3 --dinf 0.01 --eps 1 --delta 1e-3"},
      {"constraint", feasible, "--alpha 0.5 --dinf 1e-4 --eps 2 --delta 0.05"},
      {"objective", feasible, "--dinf 0.05 --eps 1 --delta 0.05"},
      {"covering-hs", covering, "--alpha 1 --s 4 --eps 2 --delta 0.1"}};
  for (const Job& job : jobs) {
    std::string runs[2];
    bool exited_ok = true;
    for (int rep = 0; rep < 2; ++rep) {
      const auto csv =
          workdir / (job.solver + "_" + std::to_string(rep) + ".csv");
      std::filesystem::remove(csv);
      const int code =
          Run(q + cli + q + " solve --instance " + q + job.instance.string() +
              q + " --solver " + job.solver + " " + job.extra +
              " --seed 7 --seeds 3 --csv " + q + csv.string() + q +
              " 2>/dev/null");
      exited_ok = exited_ok && (code == 0 || code == 2);
      runs[rep] = ReadFile(csv);
    }
    const bool same = exited_ok && !runs[0].empty() && runs[0] == runs[1];
    out.pass = out.pass && same;
    out.detail += job.solver + (same ? ":identical " : ":DIFFERENT ");
  }
  return out;
}

struct Criterion {
  int id;
  const char* description;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace dpscp

int main(int argc, char** argv) {
  std::string cli;
  std::filesystem::path workdir =
      std::filesystem::temp_directory_path() / "dpscp_acceptance";
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--cli") {
      cli = argv[i + 1];
    } else if (flag == "--workdir") {
      workdir = argv[i + 1];
    } else {
      std::fprintf(stderr, "unknown flag %s\n", argv[i]);
      return 1;
    }
  }

  using namespace dpscp;
  const std::vector<Criterion> criteria = {
      {1, "EJA axioms on 1000 samples per algebra in < 10 s", EjaAxioms},
      {2, "spectral reconstruction, frame axioms and exp series",
       SpectralFidelity},
      {3, "coordinate isometry on 1000 pairs", Isometry},
      {4, "SCMWU and dense MWU regret certificates", RegretCertificates},
      {5, "Bregman projection neighbour stability", BregmanStability},
      {6, "chi-square tail thresholds", ChiSquare},
      {7, "exponential mechanism utility bound", ExpMechanismUtility},
      {8, "empirical privacy audit with negative controls", Audit},
      {9, "non-private solver on planted feasible instances",
       NonprivateSolver},
      {10, "high-sensitivity covering solver", CoveringSolver},
      {11, "constraint-private solver", ConstraintPrivateSolver},
      {12, "objective-private solver on the analytic instance",
       ObjectivePrivateSolver},
      {13, "CLI solve output is byte-identical across runs",
       [&] { return CliDeterminism(cli, workdir); }},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    failed += !outcome.pass;
    std::printf("%s %2d %s [%s] (%.1fs)\n", outcome.pass ? "PASS" : "FAIL",
                c.id, c.description, outcome.detail.c_str(),
                std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
