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

#include "dpscp/mwu.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpscp/eja.h"
#include "dpscp/errors.h"

namespace dpscp {
namespace {

bool AllFinite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(),
                     [](double x) { return std::isfinite(x); });
}

}  // namespace

ScmwuState ScmwuInit(const AlgebraPtr& algebra, double eta) {
  if (!(eta > 0.0)) throw std::invalid_argument("ScmwuInit: eta must be > 0");
  Element iterate = Identity(algebra);
  iterate *= 1.0 / algebra->rank();
  return ScmwuState{eta, Zero(algebra), std::move(iterate), 0};
}

ScmwuState ScmwuStep(const ScmwuState& state, const Element& loss) {
  if (!AllFinite(loss.data())) {
    throw std::domain_error("ScmwuStep: non-finite loss");
  }
  ScmwuState next{state.eta, state.cumulative_loss + loss, state.iterate,
                  state.steps + 1};
  const Element exponent = (-state.eta) * next.cumulative_loss;
  const SpectralDecomposition d = SpectralDecompose(exponent);
  const double shift = d.eigenvalues.front();
  Element numerator =
      Reconstruct(d, [shift](double v) { return std::exp(v - shift); });
  const double trace = Trace(numerator);
  if (!(trace > 0.0) || !std::isfinite(trace)) {
    throw std::domain_error("ScmwuStep: degenerate normalization");
  }
  numerator *= 1.0 / trace;
  next.iterate = std::move(numerator);
  return next;
}

RegretCertificate ScmwuRegretCertificate(std::span<const Element> losses,
                                         std::span<const Element> iterates,
                                         double eta) {
  if (losses.size() != iterates.size()) {
    throw std::invalid_argument("ScmwuRegretCertificate: length mismatch");
  }
  if (losses.empty()) {
    throw std::invalid_argument("ScmwuRegretCertificate: empty sequence");
  }
  double lhs = 0.0;
  Element cumulative = Zero(losses.front().algebra_ptr());
  for (std::size_t t = 0; t < losses.size(); ++t) {
    lhs += Inner(losses[t], iterates[t]);
    cumulative += losses[t];
  }
  const double rank = losses.front().algebra().rank();
  const double T = static_cast<double>(losses.size());
  const double rhs = MinEigenvalue(cumulative) + eta * T + std::log(rank) / eta;
  return RegretCertificate{lhs, rhs};
}

DenseMeasure DenseMeasure::Uniform(std::size_t m) {
  if (m == 0) throw std::invalid_argument("DenseMeasure: m must be >= 1");
  return DenseMeasure{std::vector<double>(m, 1.0 / static_cast<double>(m)), 0};
}

DenseDistribution BregmanProject(const DenseMeasure& measure, int s) {
  return BregmanProject(measure.weights, s);
}

DenseDistribution BregmanProject(std::span<const double> weights, int s) {
  if (s < 1) throw std::invalid_argument("BregmanProject: s must be >= 1");
  const std::size_t m = weights.size();
  std::vector<double> sorted;
  sorted.reserve(m);
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("BregmanProject: weights must be finite, >= 0");
    }
    if (w > 0.0) sorted.push_back(w);
  }
  if (sorted.size() < static_cast<std::size_t>(s)) {
    throw InfeasibleProjectionError(
        "BregmanProject: only " + std::to_string(sorted.size()) +
        " positive weights, need at least s = " + std::to_string(s));
  }
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());

  // suffix[j] = sum of sorted[j..]
  std::vector<double> suffix(sorted.size() + 1, 0.0);
  for (std::size_t j = sorted.size(); j-- > 0;) {
    suffix[j] = suffix[j + 1] + sorted[j];
  }

  // With the top j weights saturated, c = (s - j) / suffix[j] must satisfy
  // c * sorted[j] <= 1 and, for j > 0, c * sorted[j - 1] >= 1.
  double c = -1.0;
  for (int j = 0; j < s; ++j) {
    const double candidate = (s - j) / suffix[j];
    const bool below = candidate * sorted[j] <= 1.0 + 1e-15;
    const bool above = j == 0 || candidate * sorted[j - 1] >= 1.0 - 1e-15;
    if (below && above) {
      c = candidate;
      break;
    }
  }
  if (c < 0.0) {
    // Every interval check failed by rounding; bisect the monotone map
    // c -> sum min(1, c F_f) on [0, 1 / min positive weight].
    double lo = 0.0;
    double hi = 1.0 / sorted.back();
    for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      double total = 0.0;
      for (double w : sorted) total += std::min(1.0, mid * w);
      (total < s ? lo : hi) = mid;
    }
    c = hi;
  }

  DenseDistribution out;
  out.density = s;
  out.scale = c;
  out.probabilities.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    out.probabilities[i] = std::min(1.0, c * weights[i]) / s;
  }
  return out;
}

DenseMeasure DenseMwuStep(const DenseMeasure& measure,
                          std::span<const double> loss, double eta) {
  if (loss.size() != measure.weights.size()) {
    throw std::invalid_argument("DenseMwuStep: loss length mismatch");
  }
  if (!AllFinite(loss)) throw std::domain_error("DenseMwuStep: non-finite loss");
  DenseMeasure next = measure;
  for (std::size_t i = 0; i < loss.size(); ++i) {
    double w = std::exp(-eta * loss[i]) * measure.weights[i];
    if (w > 1.0) {
      w = 1.0;
      ++next.clamp_events;
    }
    next.weights[i] = w;
  }
  return next;
}

RegretCertificate DenseRegretCertificate(
    std::span<const std::vector<double>> losses,
    std::span<const std::vector<double>> projected, int s, double eta) {
  if (losses.size() != projected.size() || losses.empty()) {
    throw std::invalid_argument("DenseRegretCertificate: length mismatch");
  }
  const std::size_t m = losses.front().size();
  if (s < 1 || static_cast<std::size_t>(s) > m) {
    throw std::invalid_argument("DenseRegretCertificate: need 1 <= s <= m");
  }
  const double T = static_cast<double>(losses.size());
  double lhs = 0.0;
  std::vector<double> cumulative(m, 0.0);
  for (std::size_t t = 0; t < losses.size(); ++t) {
    if (losses[t].size() != m || projected[t].size() != m) {
      throw std::invalid_argument("DenseRegretCertificate: ragged input");
    }
    for (std::size_t i = 0; i < m; ++i) {
      lhs += losses[t][i] * projected[t][i];
      cumulative[i] += losses[t][i];
    }
  }
  std::sort(cumulative.begin(), cumulative.end());
  const double best =
      std::accumulate(cumulative.begin(), cumulative.begin() + s, 0.0) / s;
  return RegretCertificate{
      lhs / T, best / T + eta + std::log(static_cast<double>(m)) / (eta * T)};
}

}  // namespace dpscp
