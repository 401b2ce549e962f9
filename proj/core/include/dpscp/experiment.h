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

// Experiment runner: solves one instance under a list of seeds and emits
// one CSV row per run.

#ifndef DPSCP_EXPERIMENT_H_
#define DPSCP_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpscp/instance.h"
#include "dpscp/solvers.h"

namespace dpscp {

enum class SolverKind {
  kNonprivate,
  kCoveringHighSens,
  kScalarPrivate,
  kConstraintPrivate,
  kObjectivePrivate,
};

// "nonprivate", "covering-hs", "scalar", "constraint", "objective".
SolverKind ParseSolverKind(std::string_view name);
std::string SolverName(SolverKind kind);

struct ExperimentOptions {
  // Fills wall_ms. Off by default so that repeated runs are byte-identical.
  bool timing = false;
  // Trace budget for covering-hs; defaults to the instance's planted OPT.
  std::optional<double> opt;
  CoveringOptions covering;
};

struct RunRecord {
  std::uint64_t seed = 0;
  SolverKind solver = SolverKind::kNonprivate;
  long iterations = 0;
  double max_violation = 0.0;
  long num_violated = 0;
  double alpha_bound = 0.0;
  double epsilon = 0.0;
  double delta = 0.0;
  std::optional<double> wall_ms;
  bool guarantee_void = false;
  std::string void_reason;
};

// Runs `solver` with RandomSource::ForStream(seed, 0).
RunRecord RunSolver(const ScpInstance& instance, SolverKind solver,
                    const SolverConfig& config, std::uint64_t seed,
                    const ExperimentOptions& options = {});

std::vector<RunRecord> RunExperiment(const ScpInstance& instance,
                                     SolverKind solver,
                                     const SolverConfig& config,
                                     const std::vector<std::uint64_t>& seeds,
                                     const ExperimentOptions& options = {});
std::vector<RunRecord> RunExperiment(const std::string& instance_path,
                                     SolverKind solver,
                                     const SolverConfig& config,
                                     const std::vector<std::uint64_t>& seeds,
                                     const ExperimentOptions& options = {});

// "seed,T,max_violation,num_violated,alpha_bound,eps,delta,wall_ms".
std::string CsvHeader();
// Doubles use the shortest round-trip form; wall_ms is empty when not measured.
std::string CsvRow(const RunRecord& record);

}  // namespace dpscp

#endif  // DPSCP_EXPERIMENT_H_
