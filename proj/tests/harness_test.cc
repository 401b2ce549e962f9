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

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpscp/algebra.h"
#include "dpscp/audit.h"
#include "dpscp/eja.h"
#include "dpscp/experiment.h"
#include "dpscp/generators.h"
#include "dpscp/instance.h"
#include "dpscp/instance_io.h"
#include "dpscp/oracles.h"
#include "dpscp/solvers.h"
#include "gtest/gtest.h"
#include "testing.h"

namespace dpscp {
namespace {

void ExpectSameInstance(const ScpInstance& a, const ScpInstance& b) {
  EXPECT_TRUE(*a.algebra == *b.algebra);
  ASSERT_EQ(a.num_constraints(), b.num_constraints());
  for (std::size_t i = 0; i < a.num_constraints(); ++i) {
    EXPECT_EQ(a.constraints[i], b.constraints[i]);
  }
  EXPECT_EQ(a.b, b.b);
  EXPECT_EQ(a.sense, b.sense);
  EXPECT_EQ(a.objective, b.objective);
  EXPECT_EQ(a.metadata.generator, b.metadata.generator);
  EXPECT_EQ(a.metadata.seed, b.metadata.seed);
  EXPECT_EQ(a.metadata.planted_opt, b.metadata.planted_opt);
  ASSERT_EQ(a.metadata.planted_solution.has_value(),
            b.metadata.planted_solution.has_value());
  if (a.metadata.planted_solution) {
    EXPECT_EQ(*a.metadata.planted_solution, *b.metadata.planted_solution);
  }
}

TEST(InstanceIoTest, RoundTripIsExact) {
  const ScpInstance mixed =
      GenerateFeasibleScp(testing::MixedAlgebra(), 7, 0.125, 99);
  ExpectSameInstance(mixed, ParseInstance(SerializeInstance(mixed)));
  const ScpInstance cover = GenerateCoveringSdp(4, 9, 3);
  ExpectSameInstance(cover, ParseInstance(SerializeInstance(cover)));
  // Serialization is canonical.
  EXPECT_EQ(SerializeInstance(cover),
            SerializeInstance(ParseInstance(SerializeInstance(cover))));
}

TEST(InstanceIoTest, FileRoundTrip) {
  const std::string path =
      (std::filesystem::temp_directory_path() / "dpscp_io_test.json").string();
  const ScpInstance inst =
      GenerateFeasibleScp(MakeAlgebra(Factor::Spin(5)), 3, 0.0, 1);
  WriteInstanceFile(path, inst);
  ExpectSameInstance(inst, ReadInstanceFile(path));
  std::remove(path.c_str());
  EXPECT_THROW(ReadInstanceFile(path), std::runtime_error);
}

TEST(InstanceIoTest, SymmetricBlocksAreUpperTriangular) {
  const AlgebraPtr alg = MakeAlgebra(Factor::SymMatrix(2));
  const ScpInstance inst = MakeInstance(alg, {Element(alg, {1, 2, 2, 3})},
                                        {1.0}, Sense::kLE);
  const std::string text = SerializeInstance(inst);
  EXPECT_NE(text.find("\"schema_version\": 1"), std::string::npos);
  EXPECT_NE(text.find("seed_derivation"), std::string::npos);
  const ScpInstance back = ParseInstance(text);
  EXPECT_EQ(back.constraints[0], inst.constraints[0]);
}

TEST(InstanceIoTest, RejectsMalformedInput) {
  EXPECT_THROW(ParseInstance("{"), std::invalid_argument);
  EXPECT_THROW(ParseInstance(R"({"schema_version": 2})"),
               std::invalid_argument);
  EXPECT_THROW(
      ParseInstance(R"({"schema_version": 1,
        "algebra": [{"kind": "sym", "size": 2}],
        "constraints": [[[1, 2]]], "b": [1], "sense": ["<="]})"),
      std::invalid_argument);
  EXPECT_THROW(
      ParseInstance(R"({"schema_version": 1,
        "algebra": [{"kind": "herm", "size": 2}],
        "constraints": [], "b": [], "sense": []})"),
      std::invalid_argument);
}

TEST(AlgebraSpecTest, ParseAndFormat) {
  const AlgebraPtr alg = ParseAlgebraSpec("real:2+sym:3+spin:4");
  EXPECT_TRUE(*alg == *testing::MixedAlgebra());
  EXPECT_EQ(AlgebraSpec(*alg), "real:2+sym:3+spin:4");
  EXPECT_THROW(ParseAlgebraSpec("sym"), std::invalid_argument);
  EXPECT_THROW(ParseAlgebraSpec("sym:x"), std::invalid_argument);
  EXPECT_THROW(ParseAlgebraSpec("cube:3"), std::invalid_argument);
}

TEST(GeneratorTest, CoveringSdpNormalization) {
  const ScpInstance inst = GenerateCoveringSdp(4, 20, 5);
  ASSERT_EQ(inst.num_constraints(), 20u);
  for (std::size_t i = 0; i < 20; ++i) {
    EXPECT_NEAR(MaxEigenvalue(inst.constraints[i]), 1.0, 1e-9);
    EXPECT_GE(MinEigenvalue(inst.constraints[i]), -1e-9);
    EXPECT_EQ(inst.b[i], 1.0);
    EXPECT_EQ(inst.sense[i], Sense::kGE);
  }
  ASSERT_TRUE(inst.metadata.planted_opt.has_value());
  EXPECT_EQ(*inst.metadata.planted_opt, 4.0);
  // X = I is feasible with trace OPT.
  EXPECT_TRUE(
      CheckViolations(*inst.metadata.planted_solution, inst, 1e-9).empty());
  EXPECT_THROW(GenerateCoveringSdp(11, 5, 1), std::invalid_argument);
}

TEST(GeneratorTest, IdentityConstraintHasUnitOpt) {
  // m = 1, A = I: X = e1 e1^T has trace 1 and <I, X> = 1.
  const AlgebraPtr alg = MakeAlgebra(Factor::SymMatrix(3));
  const ScpInstance inst =
      MakeInstance(alg, {Identity(alg)}, {1.0}, Sense::kGE);
  const Element x(alg, {1, 0, 0, 0, 0, 0, 0, 0, 0});
  EXPECT_EQ(Trace(x), 1.0);
  EXPECT_TRUE(CheckViolations(x, inst, 0.0).empty());
}

TEST(GeneratorTest, UniformCoveringOpt) {
  const AlgebraPtr alg = MakeAlgebra(Factor::SymMatrix(3));
  const ScpInstance inst = GenerateUniformCovering(alg, 5);
  EXPECT_EQ(*inst.metadata.planted_opt, 3.0);
  EXPECT_TRUE(CheckViolations(Identity(alg), inst, 1e-12).empty());
  EXPECT_FALSE(CheckViolations(0.9 * Identity(alg), inst, 1e-12).empty());
}

TEST(GeneratorTest, FeasibleScpContract) {
  for (const auto& [name, alg] : testing::AlgebraZoo()) {
    const ScpInstance tight = GenerateFeasibleScp(alg, 10, 0.0, 6);
    const Element& x = *tight.metadata.planted_solution;
    EXPECT_NEAR(Trace(x), 1.0, 1e-12) << name;
    EXPECT_TRUE(InCone(x, 1e-12)) << name;
    for (double v : ConstraintViolations(tight, x)) {
      EXPECT_NEAR(v, 0.0, 1e-12) << name;
    }
    EXPECT_TRUE(CheckViolations(x, tight, 1e-12).empty());
    for (const Element& a : tight.constraints) {
      EXPECT_LE(Norm(a, NormKind::kLinf), 1.0 + 1e-12) << name;
    }
    const ScpInstance loose = GenerateFeasibleScp(alg, 10, 0.2, 6);
    for (double v : ConstraintViolations(loose, x)) {
      EXPECT_NEAR(v, -0.2, 1e-12) << name;
    }
  }
}

TEST(ExperimentTest, CsvSchema) {
  EXPECT_EQ(CsvHeader(),
            "seed,T,max_violation,num_violated,alpha_bound,eps,delta,wall_ms");
  RunRecord r;
  r.seed = 3;
  r.iterations = 10;
  r.max_violation = 0.5;
  r.num_violated = 1;
  r.alpha_bound = 0.25;
  r.epsilon = 1;
  r.delta = 1e-6;
  EXPECT_EQ(CsvRow(r), "3,10,0.5,1,0.25,1,1e-06,");
  r.wall_ms = 2.0;
  EXPECT_EQ(CsvRow(r), "3,10,0.5,1,0.25,1,1e-06,2");
}

TEST(ExperimentTest, CsvDoublesRoundTrip) {
  RandomSource rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    RunRecord r;
    r.max_violation = rng.Normal() * std::exp(20 * rng.Normal());
    const std::string row = CsvRow(r);
    const std::size_t begin = row.find(',', row.find(',') + 1) + 1;
    const std::string field = row.substr(begin, row.find(',', begin) - begin);
    EXPECT_EQ(std::stod(field), r.max_violation) << field;
  }
}

TEST(ExperimentTest, RepeatedRunsAreIdentical) {
  const ScpInstance inst =
      GenerateFeasibleScp(MakeAlgebra(Factor::SymMatrix(2)), 5, 0.0, 7);
  SolverConfig c;
  c.alpha = 0.3;
  c.delta_inf = 0.01;
  for (SolverKind kind :
       {SolverKind::kNonprivate, SolverKind::kScalarPrivate,
        SolverKind::kConstraintPrivate, SolverKind::kObjectivePrivate}) {
    const std::vector<RunRecord> a = RunExperiment(inst, kind, c, {1, 2});
    const std::vector<RunRecord> b = RunExperiment(inst, kind, c, {1, 2});
    ASSERT_EQ(a.size(), 2u);
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(CsvRow(a[i]), CsvRow(b[i])) << SolverName(kind);
    }
  }
}

TEST(ExperimentTest, SolverNames) {
  for (const char* name :
       {"nonprivate", "covering-hs", "scalar", "constraint", "objective"}) {
    EXPECT_EQ(SolverName(ParseSolverKind(name)), name);
  }
  EXPECT_THROW(ParseSolverKind("ipm"), std::invalid_argument);
}

TEST(ExperimentTest, CoveringNeedsOpt) {
  const AlgebraPtr alg = MakeAlgebra(Factor::SymMatrix(2));
  const ScpInstance inst =
      MakeInstance(alg, {Identity(alg)}, {1.0}, Sense::kGE);
  SolverConfig c;
  c.alpha = 0.5;
  c.budget = PrivacyBudget::Make(1.0, 0.1);
  EXPECT_THROW(RunSolver(inst, SolverKind::kCoveringHighSens, c, 1),
               std::invalid_argument);
  ExperimentOptions opts;
  opts.opt = 1.0;
  EXPECT_NO_THROW(RunSolver(inst, SolverKind::kCoveringHighSens, c, 1, opts));
}

TEST(AuditTest, ExponentialMechanismPasses) {
  AuditConfig c;
  c.trials = 200000;
  const AuditReport r = PrivacyAudit(c);
  EXPECT_TRUE(r.passed) << r.epsilon_hat;
  EXPECT_LE(r.epsilon_hat, 1.0 + r.ci_half_width);
  EXPECT_EQ(r.outcomes_audited, 4);
}

TEST(AuditTest, IdenticalNeighboursGiveNearZero) {
  AuditConfig c;
  c.neighbor = NeighborSpec::kIdentical;
  c.trials = 200000;
  const AuditReport r = PrivacyAudit(c);
  EXPECT_TRUE(r.passed);
  EXPECT_LE(r.epsilon_hat, r.ci_half_width);
}

TEST(AuditTest, NegativeControlsFail) {
  AuditConfig c;
  c.mechanism = AuditMechanism::kExponentialMiscalibrated;
  c.trials = 200000;
  EXPECT_FALSE(PrivacyAudit(c).passed);
  c.mechanism = AuditMechanism::kGaussianMiscalibrated;
  EXPECT_FALSE(PrivacyAudit(c).passed);
}

TEST(AuditTest, GaussianAndDualOracle) {
  AuditConfig c;
  c.mechanism = AuditMechanism::kGaussian;
  c.epsilon = 0.5;
  const AuditReport g = PrivacyAudit(c);
  EXPECT_TRUE(g.passed);
  EXPECT_LE(g.delta_at_epsilon, c.delta);
  EXPECT_LE(g.epsilon_hat, c.epsilon);
  c.mechanism = AuditMechanism::kDualOracle;
  c.epsilon = 1.0;
  c.trials = 200000;
  EXPECT_TRUE(PrivacyAudit(c).passed);
}

TEST(AuditTest, EstimatorIgnoresRareOutcomes) {
  const AuditReport r =
      EstimateLogRatio({1000, 10, 0}, {1000, 1, 0}, 2010, 0.1);
  EXPECT_EQ(r.outcomes_audited, 1);
  EXPECT_TRUE(r.passed);
}

}  // namespace
}  // namespace dpscp
