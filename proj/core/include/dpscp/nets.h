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

// Finite gamma-nets over Euclidean balls and over scaled primitive
// idempotents of a simple factor. These are the candidate sets for the
// exponential-mechanism covering oracle.

#ifndef DPSCP_NETS_H_
#define DPSCP_NETS_H_

#include <cstddef>
#include <vector>

#include "dpscp/algebra.h"
#include "dpscp/random.h"

namespace dpscp {

enum class NetMode {
  // Axis-aligned lattice of pitch gamma * min(1, 2 / sqrt(r)); every ball
  // point's nearest lattice point is within gamma, and lattice points
  // outside the ball are pulled radially onto its surface.
  kGrid,
  // Radial shells every gamma / 2 with uniformly random directions. The
  // per-shell count is a heuristic; use CoverRadiusEstimate to check it.
  kRandomSphere,
};

inline constexpr int kMaxNetDimension = 10;
inline constexpr std::size_t kMaxNetPoints = 200000;

double GridPitch(int r, double gamma);

// Point count the construction would need (exact lattice enumeration bound
// for kGrid, planned total for kRandomSphere).
double EstimateBallNetSize(int r, double radius, double gamma, NetMode mode);

// Net of {u in R^r : ||u||_2 <= radius}. Throws std::invalid_argument for
// bad radius/gamma and BudgetError (carrying the estimated count) when r >
// kMaxNetDimension or the net would exceed max_points.
std::vector<std::vector<double>> BuildBallNet(
    int r, double radius, double gamma, NetMode mode, RandomSource& rng,
    std::size_t max_points = kMaxNetPoints);

// Largest distance from `samples` uniform ball points to their nearest net
// point (brute force).
double CoverRadiusEstimate(const std::vector<std::vector<double>>& net,
                           int r, double radius, int samples,
                           RandomSource& rng);

struct GammaNet {
  std::vector<Element> points;
  double gamma = 0.0;
  double opt = 0.0;
  NetMode construction = NetMode::kGrid;
};

// Scaled primitive idempotents with trace in (0, opt] for a simple factor:
//   R^k:      opt * e_i.
//   Sym(r):   u u^T for nonzero u in a ball net of radius sqrt(opt); one of
//             each +-u pair is kept.
//   Spin(n):  c * (1, w) / 2 with w on a net of the unit sphere of R^(n-1)
//             and c on a grid of (0, opt].
GammaNet BuildIdempotentNet(const AlgebraPtr& algebra, double opt,
                            double gamma, RandomSource& rng,
                            NetMode mode = NetMode::kGrid);

// gamma = sqrt(opt / 2), the radius that keeps |N| = exp(O(r)).
double DefaultNetGamma(double opt);

}  // namespace dpscp

#endif  // DPSCP_NETS_H_
