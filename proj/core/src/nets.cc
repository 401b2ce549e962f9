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

#include "dpscp/nets.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpscp/algebra.h"
#include "dpscp/errors.h"

namespace dpscp {
namespace {

double Norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

std::vector<double> RandomDirection(int r, RandomSource& rng) {
  for (;;) {
    std::vector<double> v = rng.NormalVector(r);
    const double n = Norm2(v);
    if (n > 1e-12) {
      for (double& x : v) x /= n;
      return v;
    }
  }
}

std::vector<long long> DedupKey(const std::vector<double>& v) {
  std::vector<long long> key(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    key[i] = std::llround(v[i] * 1e10);
  }
  return key;
}

void CheckBallArgs(int r, double radius, double gamma) {
  if (r < 1) throw std::invalid_argument("ball net: r must be >= 1");
  if (!(radius > 0.0)) throw std::invalid_argument("ball net: radius must be > 0");
  if (!(gamma > 0.0) || gamma > radius) {
    throw std::invalid_argument("ball net: need 0 < gamma <= radius");
  }
}

int GridExtent(double radius, double pitch) {
  // A lattice point is needed only if its Voronoi cube (half-width
  // pitch / 2) meets the ball.
  return static_cast<int>(std::floor((radius + 0.5 * pitch) / pitch + 1e-12));
}

std::vector<std::vector<double>> BuildGrid(int r, double radius, double gamma,
                                           std::size_t max_points) {
  const double h = GridPitch(r, gamma);
  const int zmax = GridExtent(radius, h);
  std::vector<int> z(r, -zmax);
  std::vector<std::vector<double>> net;
  std::set<std::vector<long long>> seen;
  for (;;) {
    double cube_gap2 = 0.0;
    for (int i = 0; i < r; ++i) {
      const double gap = std::max(0.0, std::abs(z[i]) * h - 0.5 * h);
      cube_gap2 += gap * gap;
    }
    if (cube_gap2 <= radius * radius * (1.0 + 1e-12)) {
      std::vector<double> v(r);
      for (int i = 0; i < r; ++i) v[i] = z[i] * h;
      const double n = Norm2(v);
      if (n > radius) {
        for (double& x : v) x *= radius / n;
      }
      if (seen.insert(DedupKey(v)).second) {
        net.push_back(std::move(v));
        if (net.size() > max_points) {
          throw BudgetError("ball net exceeds " + std::to_string(max_points) +
                                " points",
                            EstimateBallNetSize(r, radius, gamma,
                                                NetMode::kGrid));
        }
      }
    }
    int i = 0;
    while (i < r && z[i] == zmax) z[i++] = -zmax;
    if (i == r) break;
    ++z[i];
  }
  return net;
}

std::vector<double> ShellRadii(double radius, double gamma) {
  const int shells = static_cast<int>(std::ceil(2.0 * radius / gamma - 1e-12));
  std::vector<double> radii;
  for (int j = 1; j <= shells; ++j) {
    radii.push_back(std::min(radius, 0.5 * gamma * j));
  }
  return radii;
}

std::size_t DirectionsPerShell(int r, double rho, double gamma) {
  if (r == 1) return 2;
  const double base = 1.0 + 4.0 * rho / gamma;
  return static_cast<std::size_t>(
      std::ceil((r + 1) * std::pow(base, r - 1)));
}

}  // namespace

double GridPitch(int r, double gamma) {
  return gamma * std::min(1.0, 2.0 / std::sqrt(static_cast<double>(r)));
}

double EstimateBallNetSize(int r, double radius, double gamma, NetMode mode) {
  CheckBallArgs(r, radius, gamma);
  if (mode == NetMode::kGrid) {
    const int zmax = GridExtent(radius, GridPitch(r, gamma));
    return std::pow(2.0 * zmax + 1.0, r);
  }
  double total = 1.0;
  for (double rho : ShellRadii(radius, gamma)) {
    total += static_cast<double>(DirectionsPerShell(r, rho, gamma));
  }
  return total;
}

std::vector<std::vector<double>> BuildBallNet(int r, double radius,
                                              double gamma, NetMode mode,
                                              RandomSource& rng,
                                              std::size_t max_points) {
  CheckBallArgs(r, radius, gamma);
  const double estimate = EstimateBallNetSize(r, radius, gamma, mode);
  if (r > kMaxNetDimension) {
    throw BudgetError("ball net dimension " + std::to_string(r) +
                          " exceeds the desk-scale limit of " +
                          std::to_string(kMaxNetDimension),
                      estimate);
  }
  if (mode == NetMode::kGrid) {
    // The lattice box is enumerated in full, so bound its size too.
    if (estimate > 50.0 * static_cast<double>(max_points)) {
      throw BudgetError("ball net would need about " +
                            std::to_string(static_cast<long long>(estimate)) +
                            " lattice points",
                        estimate);
    }
    return BuildGrid(r, radius, gamma, max_points);
  }
  if (estimate > static_cast<double>(max_points)) {
    throw BudgetError("ball net would need about " +
                          std::to_string(static_cast<long long>(estimate)) +
                          " points",
                      estimate);
  }
  std::vector<std::vector<double>> net;
  net.emplace_back(r, 0.0);
  for (double rho : ShellRadii(radius, gamma)) {
    const std::size_t count = DirectionsPerShell(r, rho, gamma);
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<double> dir;
      if (r == 1) {
        dir = {k == 0 ? 1.0 : -1.0};
      } else {
        dir = RandomDirection(r, rng);
      }
      for (double& x : dir) x *= rho;
      net.push_back(std::move(dir));
    }
  }
  return net;
}

double CoverRadiusEstimate(const std::vector<std::vector<double>>& net, int r,
                           double radius, int samples, RandomSource& rng) {
  if (net.empty()) throw std::invalid_argument("CoverRadiusEstimate: empty net");
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    std::vector<double> u = RandomDirection(r, rng);
    const double rho = radius * std::pow(rng.Uniform(), 1.0 / r);
    for (double& x : u) x *= rho;
    double best = std::numeric_limits<double>::infinity();
    for (const std::vector<double>& p : net) {
      double d2 = 0.0;
      for (int i = 0; i < r; ++i) d2 += (u[i] - p[i]) * (u[i] - p[i]);
      best = std::min(best, d2);
    }
    worst = std::max(worst, std::sqrt(best));
  }
  return worst;
}

double DefaultNetGamma(double opt) { return std::sqrt(opt / 2.0); }

GammaNet BuildIdempotentNet(const AlgebraPtr& algebra, double opt,
                            double gamma, RandomSource& rng, NetMode mode) {
  if (!(opt > 0.0)) throw std::invalid_argument("idempotent net: OPT must be > 0");
  if (!(gamma > 0.0)) throw std::invalid_argument("idempotent net: gamma must be > 0");
  if (algebra->num_factors() != 1) {
    throw std::invalid_argument(
        "idempotent net: needs a single-factor algebra, got " +
        algebra->ToString());
  }
  const Factor& f = algebra->factor(0);
  GammaNet net;
  net.gamma = gamma;
  net.opt = opt;
  net.construction = mode;

  switch (f.kind) {
    case FactorKind::kRealVector: {
      for (int i = 0; i < f.size; ++i) {
        Element p(algebra);
        p.mutable_block(0)[i] = opt;
        net.points.push_back(std::move(p));
      }
      break;
    }
    case FactorKind::kSymMatrix: {
      const int r = f.size;
      const double radius = std::sqrt(opt);
      const std::vector<std::vector<double>> ball =
          BuildBallNet(r, radius, std::min(gamma, radius), mode, rng);
      for (const std::vector<double>& u : ball) {
        double n2 = 0.0;
        for (double x : u) n2 += x * x;
        if (n2 < 1e-12 * opt) continue;
        // u and -u give the same u u^T; keep the one whose first nonzero
        // coordinate is positive.
        const auto lead = std::find_if(u.begin(), u.end(), [](double x) {
          return std::abs(x) > 1e-12;
        });
        if (*lead < 0.0 && mode == NetMode::kGrid) continue;
        Element p(algebra);
        std::span<double> m = p.mutable_block(0);
        for (int i = 0; i < r; ++i) {
          for (int j = 0; j < r; ++j) m[i * r + j] = u[i] * u[j];
        }
        net.points.push_back(std::move(p));
      }
      break;
    }
    case FactorKind::kSpin: {
      const int d = f.size - 1;
      std::vector<std::vector<double>> dirs;
      if (d == 1) {
        dirs = {{1.0}, {-1.0}};
      } else {
        // Unit directions from a net of the unit ball; the angular spacing
        // follows gamma relative to the largest scale opt.
        const double gw = std::min(1.0, gamma / opt);
        std::set<std::vector<long long>> seen;
        for (std::vector<double>& v : BuildBallNet(d, 1.0, gw, mode, rng)) {
          const double n = Norm2(v);
          if (n < 0.5) continue;
          for (double& x : v) x /= n;
          if (seen.insert(DedupKey(v)).second) dirs.push_back(std::move(v));
        }
      }
      const int levels = std::max(1, static_cast<int>(std::ceil(opt / gamma)));
      for (int j = 1; j <= levels; ++j) {
        const double c = opt * j / levels;
        for (const std::vector<double>& w : dirs) {
          Element p(algebra);
          std::span<double> blk = p.mutable_block(0);
          blk[0] = 0.5 * c;
          for (int i = 0; i < d; ++i) blk[i + 1] = 0.5 * c * w[i];
          net.points.push_back(std::move(p));
        }
      }
      break;
    }
  }
  if (net.points.size() > kMaxNetPoints) {
    throw BudgetError("idempotent net too large",
                      static_cast<double>(net.points.size()));
  }
  return net;
}

}  // namespace dpscp
