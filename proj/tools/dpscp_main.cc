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

// dpscp: generate instances, run the solvers, audit the mechanisms.
//
//   dpscp gen   --kind feasible --alg sym:3 --m 32 --seed 1 --out inst.json
//   dpscp solve --instance inst.json --solver constraint --dinf 0.01
//   dpscp audit --mech exp --eps 1 --trials 1000000
//   dpscp bench --instance inst.json --solver scalar --eps-grid 0.5,1,2,4
//
// Exit status: 0 on success, 2 when a run finished with its guarantee void
// (or an audit detected a violation), 1 on error.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dpscp/audit.h"
#include "dpscp/dp_mech.h"
#include "dpscp/experiment.h"
#include "dpscp/generators.h"
#include "dpscp/instance.h"
#include "dpscp/instance_io.h"
#include "dpscp/nets.h"
#include "dpscp/solvers.h"

namespace {

constexpr int kExitVoid = 2;
constexpr int kExitError = 1;

struct GenFlags {
  std::string kind = "feasible";
  std::string alg;
  int r = 3;
  int m = 32;
  double margin = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

struct SolveFlags {
  std::string instance;
  std::string solver = "nonprivate";
  double eps = 1.0;
  double delta = 1e-6;
  double alpha = 0.1;
  double beta = 0.05;
  int s = 1;
  double dinf = 0.0;
  double rho_bar = 1.0;
  std::optional<double> opt;
  std::string net_mode = "grid";
  std::uint64_t seed = 0;
  int num_seeds = 1;
  std::string csv;
  bool timing = false;
  std::vector<double> eps_grid;
};

struct AuditFlags {
  std::string mech = "exp";
  std::string neighbor = "adjacent";
  double eps = 1.0;
  double delta = 1e-5;
  long trials = 1000000;
  std::uint64_t seed = 0;
};

void AddSolveOptions(CLI::App* cmd, SolveFlags& f) {
  cmd->add_option("--instance", f.instance, "Instance file")->required();
  cmd->add_option("--solver", f.solver,
                  "nonprivate|covering-hs|scalar|constraint|objective")
      ->check(CLI::IsMember({"nonprivate", "covering-hs", "scalar",
                             "constraint", "objective"}));
  cmd->add_option("--eps", f.eps, "Privacy epsilon");
  cmd->add_option("--delta", f.delta, "Privacy delta");
  cmd->add_option("--alpha", f.alpha, "Target accuracy");
  cmd->add_option("--beta", f.beta, "Failure probability");
  cmd->add_option("--s", f.s, "Density parameter (covering-hs)");
  cmd->add_option("--dinf", f.dinf, "Spectral-norm sensitivity");
  cmd->add_option("--rho-bar", f.rho_bar, "Public width bound (constraint)");
  cmd->add_option("--opt", f.opt, "Trace budget (covering-hs)");
  cmd->add_option("--net-mode", f.net_mode, "grid|random")
      ->check(CLI::IsMember({"grid", "random"}));
  cmd->add_option("--seed", f.seed, "First seed");
  cmd->add_option("--seeds", f.num_seeds, "Number of consecutive seeds")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--csv", f.csv, "Append CSV rows here (default stdout)");
}

int RunGen(const GenFlags& f) {
  using namespace dpscp;
  ScpInstance inst = [&] {
    if (f.kind == "covering") return GenerateCoveringSdp(f.r, f.m, f.seed);
    const AlgebraPtr alg =
        ParseAlgebraSpec(f.alg.empty() ? "sym:" + std::to_string(f.r) : f.alg);
    if (f.kind == "uniform") return GenerateUniformCovering(alg, f.m);
    return GenerateFeasibleScp(alg, f.m, f.margin, f.seed);
  }();
  if (f.out.empty()) {
    std::cout << SerializeInstance(inst);
  } else {
    WriteInstanceFile(f.out, inst);
  }
  return 0;
}

dpscp::SolverConfig MakeConfig(const SolveFlags& f) {
  dpscp::SolverConfig c;
  c.alpha = f.alpha;
  c.beta = f.beta;
  c.budget = dpscp::PrivacyBudget::Make(f.eps, f.delta);
  c.s = f.s;
  c.delta_inf = f.dinf;
  c.rho_bar = f.rho_bar;
  c.Validate();
  return c;
}

// Writes the header only when the destination is new or empty.
class CsvSink {
 public:
  explicit CsvSink(const std::string& path) {
    if (path.empty()) {
      out_ = &std::cout;
      std::cout << dpscp::CsvHeader() << "\n";
      return;
    }
    const bool fresh = !std::filesystem::exists(path) ||
                       std::filesystem::file_size(path) == 0;
    file_.open(path, std::ios::app | std::ios::binary);
    if (!file_) throw std::runtime_error("cannot open '" + path + "'");
    out_ = &file_;
    if (fresh) file_ << dpscp::CsvHeader() << "\n";
  }
  void Write(const dpscp::RunRecord& r) {
    *out_ << dpscp::CsvRow(r) << "\n";
    out_->flush();
  }

 private:
  std::ofstream file_;
  std::ostream* out_ = nullptr;
};

int RunSolve(const SolveFlags& f, bool bench) {
  using namespace dpscp;
  const ScpInstance inst = ReadInstanceFile(f.instance);
  const SolverKind kind = ParseSolverKind(f.solver);
  ExperimentOptions opts;
  opts.timing = f.timing || bench;
  opts.opt = f.opt;
  opts.covering.net_mode =
      f.net_mode == "random" ? NetMode::kRandomSphere : NetMode::kGrid;
  std::vector<double> grid = f.eps_grid;
  if (grid.empty()) grid.push_back(f.eps);

  CsvSink sink(f.csv);
  bool any_void = false;
  for (double eps : grid) {
    SolveFlags g = f;
    g.eps = eps;
    const SolverConfig config = MakeConfig(g);
    for (int k = 0; k < f.num_seeds; ++k) {
      const std::uint64_t seed = f.seed + static_cast<std::uint64_t>(k);
      const RunRecord rec = RunSolver(inst, kind, config, seed, opts);
      sink.Write(rec);
      if (rec.guarantee_void) {
        any_void = true;
        std::cerr << "seed " << seed << ": guarantee void: "
                  << rec.void_reason << "\n";
      }
    }
  }
  return any_void ? kExitVoid : 0;
}

int RunAudit(const AuditFlags& f) {
  using namespace dpscp;
  AuditConfig c;
  c.mechanism = ParseAuditMechanism(f.mech);
  c.neighbor = ParseNeighborSpec(f.neighbor);
  c.epsilon = f.eps;
  c.delta = f.delta;
  c.trials = f.trials;
  c.seed = f.seed;
  const AuditReport r = PrivacyAudit(c);
  std::printf(
      "mechanism=%s eps=%.6g delta=%.6g trials=%ld eps_hat=%.6g ci=%.6g "
      "delta_at_eps=%.6g outcomes=%ld result=%s\n",
      r.mechanism.c_str(), r.epsilon, r.delta, r.trials, r.epsilon_hat,
      r.ci_half_width, r.delta_at_epsilon, r.outcomes_audited,
      r.passed ? "PASS" : "VIOLATION");
  return r.passed ? 0 : kExitVoid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private symmetric cone programming"};
  app.require_subcommand(1);

  GenFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("--kind", gen.kind, "feasible|covering|uniform")
      ->check(CLI::IsMember({"feasible", "covering", "uniform"}));
  gen_cmd->add_option("--alg", gen.alg,
                      "Algebra, e.g. sym:3 or real:2+spin:4 (feasible, "
                      "uniform)");
  gen_cmd->add_option("--r", gen.r, "Matrix size (covering; default alg)");
  gen_cmd->add_option("--m", gen.m, "Number of constraints");
  gen_cmd->add_option("--margin", gen.margin, "Planted slack (feasible)");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  SolveFlags solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Run a solver");
  AddSolveOptions(solve_cmd, solve);
  solve_cmd->add_flag("--timing", solve.timing, "Fill the wall_ms column");

  SolveFlags bench;
  bench.num_seeds = 10;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Sweep a solver over eps and seeds");
  AddSolveOptions(bench_cmd, bench);
  bench_cmd->add_option("--eps-grid", bench.eps_grid, "Epsilon values")
      ->delimiter(',');

  AuditFlags audit;
  CLI::App* audit_cmd =
      app.add_subcommand("audit", "Empirical privacy audit of a mechanism");
  audit_cmd->add_option("--mech", audit.mech,
                        "exp|dual-oracle|exp-miscalibrated|gaussian|"
                        "gaussian-miscalibrated");
  audit_cmd->add_option("--neighbor", audit.neighbor, "adjacent|identical");
  audit_cmd->add_option("--eps", audit.eps, "Claimed epsilon");
  audit_cmd->add_option("--delta", audit.delta, "Claimed delta (gaussian)");
  audit_cmd->add_option("--trials", audit.trials, "Samples per side");
  audit_cmd->add_option("--seed", audit.seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*gen_cmd) return RunGen(gen);
    if (*solve_cmd) return RunSolve(solve, false);
    if (*bench_cmd) return RunSolve(bench, true);
    if (*audit_cmd) return RunAudit(audit);
  } catch (const std::exception& e) {
    std::cerr << "dpscp: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
