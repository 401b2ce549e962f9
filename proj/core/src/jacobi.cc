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

#include "dpscp/jacobi.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpscp/errors.h"

namespace dpscp {
namespace {

double OffDiagonalNorm(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) sum += a[i * n + j] * a[i * n + j];
    }
  }
  return std::sqrt(sum);
}

// Applies the rotation annihilating a(p, q) to both a and the accumulated
// eigenvector matrix v.
void Rotate(std::vector<double>& a, std::vector<double>& v, int n, int p,
            int q) {
  const double apq = a[p * n + q];
  const double app = a[p * n + p];
  const double aqq = a[q * n + q];
  const double theta = (aqq - app) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (int k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a[k * n + p];
    const double akq = a[k * n + q];
    const double new_kp = c * akp - s * akq;
    const double new_kq = s * akp + c * akq;
    a[k * n + p] = a[p * n + k] = new_kp;
    a[k * n + q] = a[q * n + k] = new_kq;
  }
  a[p * n + p] = app - t * apq;
  a[q * n + q] = aqq + t * apq;
  a[p * n + q] = a[q * n + p] = 0.0;

  for (int k = 0; k < n; ++k) {
    const double vkp = v[k * n + p];
    const double vkq = v[k * n + q];
    v[k * n + p] = c * vkp - s * vkq;
    v[k * n + q] = s * vkp + c * vkq;
  }
}

}  // namespace

SymmetricEigen JacobiEigen(std::span<const double> input, int n,
                           const JacobiOptions& options) {
  if (n < 1 || static_cast<int>(input.size()) != n * n) {
    throw std::invalid_argument("JacobiEigen: expected an n x n matrix");
  }
  std::vector<double> a(input.begin(), input.end());
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  double frob = 0.0;
  for (double x : a) frob += x * x;
  frob = std::sqrt(frob);
  const double tol = options.threshold * std::max(1.0, frob);

  SymmetricEigen result;
  double off = OffDiagonalNorm(a, n);
  int sweep = 0;
  while (off > tol) {
    if (sweep == options.max_sweeps) {
      throw ConvergenceError("Jacobi eigensolver did not converge after " +
                                 std::to_string(options.max_sweeps) +
                                 " sweeps",
                             off);
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (a[p * n + q] != 0.0) Rotate(a, v, n, p, q);
      }
    }
    ++sweep;
    off = OffDiagonalNorm(a, n);
  }
  result.sweeps = sweep;
  result.off_norm = off;

  // Stable sort keeps the sweep order for repeated eigenvalues.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return a[i * n + i] > a[j * n + j];
  });
  result.values.resize(n);
  result.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int k = 0; k < n; ++k) {
    const int src = order[k];
    result.values[k] = a[src * n + src];
    for (int i = 0; i < n; ++i) result.vectors[i * n + k] = v[i * n + src];
  }
  return result;
}

}  // namespace dpscp
