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

#include "dpscp/experiment.h"

#include <charconv>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dpscp/instance_io.h"
#include "dpscp/random.h"

namespace dpscp {
namespace {

std::string FormatDouble(double v) {
  // Shortest representation that parses back to the same double.
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, result.ptr);
}

}  // namespace

SolverKind ParseSolverKind(std::string_view name) {
  if (name == "nonprivate") return SolverKind::kNonprivate;
  if (name == "covering-hs") return SolverKind::kCoveringHighSens;
  if (name == "scalar") return SolverKind::kScalarPrivate;
  if (name == "constraint") return SolverKind::kConstraintPrivate;
  if (name == "objective") return SolverKind::kObjectivePrivate;
  throw std::invalid_argument("unknown solver '" + std::string(name) + "'");
}

std::string SolverName(SolverKind kind) {
  switch (kind) {
    case SolverKind::kNonprivate:
      return "nonprivate";
    case SolverKind::kCoveringHighSens:
      return "covering-hs";
    case SolverKind::kScalarPrivate:
      return "scalar";
    case SolverKind::kConstraintPrivate:
      return "constraint";
    case SolverKind::kObjectivePrivate:
      return "objective";
  }
  return "?";
}

RunRecord RunSolver(const ScpInstance& instance, SolverKind solver,
                    const SolverConfig& config, std::uint64_t seed,
                    const ExperimentOptions& options) {
  RandomSource rng = RandomSource::ForStream(seed, 0);
  const auto start = std::chrono::steady_clock::now();
  SolveReport report;
  switch (solver) {
    case SolverKind::kNonprivate:
      report = SolveFeasibilityNonprivate(instance, config.alpha, rng);
      break;
    case SolverKind::kCoveringHighSens: {
      const std::optional<double> opt =
          options.opt ? options.opt : instance.metadata.planted_opt;
      if (!opt) {
        throw std::invalid_argument(
            "covering-hs needs an OPT: pass one or use a planted instance");
      }
      report = SolveCoveringHighSens(instance, *opt, config, rng,
                                     options.covering);
      break;
    }
    case SolverKind::kScalarPrivate:
      report = SolveScalarPrivate(instance, config, rng);
      break;
    case SolverKind::kConstraintPrivate:
      report = SolveConstraintPrivate(instance, config, rng);
      break;
    case SolverKind::kObjectivePrivate:
      report = SolveObjectivePrivate(instance, config, rng).report;
      break;
  }
  const auto stop = std::chrono::steady_clock::now();

  RunRecord rec;
  rec.seed = seed;
  rec.solver = solver;
  rec.iterations = report.iterations;
  rec.max_violation = report.max_violation;
  rec.num_violated = static_cast<long>(report.violated.size());
  rec.alpha_bound = report.alpha_bound;
  rec.epsilon = config.budget.epsilon;
  rec.delta = config.budget.delta;
  if (options.timing) {
    rec.wall_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
  }
  rec.guarantee_void = report.guarantee_void;
  rec.void_reason = report.void_reason;
  return rec;
}

std::vector<RunRecord> RunExperiment(const ScpInstance& instance,
                                     SolverKind solver,
                                     const SolverConfig& config,
                                     const std::vector<std::uint64_t>& seeds,
                                     const ExperimentOptions& options) {
  std::vector<RunRecord> out;
  out.reserve(seeds.size());
  for (std::uint64_t seed : seeds) {
    out.push_back(RunSolver(instance, solver, config, seed, options));
  }
  return out;
}

std::vector<RunRecord> RunExperiment(const std::string& instance_path,
                                     SolverKind solver,
                                     const SolverConfig& config,
                                     const std::vector<std::uint64_t>& seeds,
                                     const ExperimentOptions& options) {
  return RunExperiment(ReadInstanceFile(instance_path), solver, config, seeds,
                       options);
}

std::string CsvHeader() {
  return "seed,T,max_violation,num_violated,alpha_bound,eps,delta,wall_ms";
}

std::string CsvRow(const RunRecord& r) {
  std::string row = std::to_string(r.seed);
  row += ',' + std::to_string(r.iterations);
  row += ',' + FormatDouble(r.max_violation);
  row += ',' + std::to_string(r.num_violated);
  row += ',' + FormatDouble(r.alpha_bound);
  row += ',' + FormatDouble(r.epsilon);
  row += ',' + FormatDouble(r.delta);
  row += ',';
  if (r.wall_ms) row += FormatDouble(*r.wall_ms);
  return row;
}

}  // namespace dpscp
