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

// Cyclic Jacobi eigensolver for dense real symmetric matrices.

#ifndef DPSCP_JACOBI_H_
#define DPSCP_JACOBI_H_

#include <span>
#include <vector>

namespace dpscp {

struct JacobiOptions {
  // Convergence when the off-diagonal Frobenius norm drops below
  // threshold * max(1, ||A||_F).
  double threshold = 1e-12;
  int max_sweeps = 30;
};

struct SymmetricEigen {
  // Descending eigenvalues.
  std::vector<double> values;
  // Column k of the row-major n x n matrix is the unit eigenvector for
  // values[k].
  std::vector<double> vectors;
  int sweeps = 0;
  double off_norm = 0.0;
};

// Diagonalizes the row-major n x n symmetric matrix `a`. Throws
// ConvergenceError carrying the final off-diagonal norm when max_sweeps is
// exhausted.
SymmetricEigen JacobiEigen(std::span<const double> a, int n,
                           const JacobiOptions& options = {});

}  // namespace dpscp

#endif  // DPSCP_JACOBI_H_
