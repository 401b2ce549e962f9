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

#include "dpscp/eja.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dpscp/algebra.h"
#include "dpscp/jacobi.h"

namespace dpscp {
namespace {

const double kSqrt2 = std::sqrt(2.0);

double SpinTailNorm(std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 1; i < b.size(); ++i) s += b[i] * b[i];
  return std::sqrt(s);
}

// Eigenvalues and frame blocks of one factor, in descending order.
struct LocalSpectrum {
  std::vector<double> values;
  std::vector<std::vector<double>> blocks;
};

LocalSpectrum DecomposeBlock(const Factor& f, std::span<const double> b,
                             const JacobiOptions& options, bool want_frame) {
  LocalSpectrum out;
  switch (f.kind) {
    case FactorKind::kRealVector: {
      std::vector<int> order(f.size);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](int i, int j) { return b[i] > b[j]; });
      for (int i : order) {
        out.values.push_back(b[i]);
        if (want_frame) {
          std::vector<double> q(f.size, 0.0);
          q[i] = 1.0;
          out.blocks.push_back(std::move(q));
        }
      }
      break;
    }
    case FactorKind::kSymMatrix: {
      const int r = f.size;
      SymmetricEigen eig = JacobiEigen(b, r, options);
      out.values = eig.values;
      if (want_frame) {
        for (int k = 0; k < r; ++k) {
          std::vector<double> q(static_cast<std::size_t>(r) * r);
          for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
              q[i * r + j] = eig.vectors[i * r + k] * eig.vectors[j * r + k];
            }
          }
          out.blocks.push_back(std::move(q));
        }
      }
      break;
    }
    case FactorKind::kSpin: {
      const double tail = SpinTailNorm(b);
      out.values = {b[0] + tail, b[0] - tail};
      if (want_frame) {
        // With a zero tail the eigenvalues coincide and any split is a
        // valid frame; use the first tail axis.
        std::vector<double> w(f.size, 0.0);
        if (tail > 0.0) {
          for (int i = 1; i < f.size; ++i) w[i] = b[i] / tail;
        } else {
          w[1] = 1.0;
        }
        std::vector<double> q1(f.size), q2(f.size);
        q1[0] = q2[0] = 0.5;
        for (int i = 1; i < f.size; ++i) {
          q1[i] = 0.5 * w[i];
          q2[i] = -0.5 * w[i];
        }
        out.blocks.push_back(std::move(q1));
        out.blocks.push_back(std::move(q2));
      }
      break;
    }
  }
  return out;
}

std::vector<double> FactorEigenvalues(const Factor& f,
                                      std::span<const double> b,
                                      const JacobiOptions& options) {
  return DecomposeBlock(f, b, options, /*want_frame=*/false).values;
}

}  // namespace

Element JordanProduct(const Element& x, const Element& y) {
  CheckSameAlgebra(x, y, "JordanProduct");
  const Algebra& alg = x.algebra();
  Element out(x.algebra_ptr());
  for (std::size_t f = 0; f < alg.num_factors(); ++f) {
    const Factor& factor = alg.factor(f);
    std::span<const double> a = x.block(f);
    std::span<const double> b = y.block(f);
    std::span<double> c = out.mutable_block(f);
    switch (factor.kind) {
      case FactorKind::kRealVector:
        for (int i = 0; i < factor.size; ++i) c[i] = a[i] * b[i];
        break;
      case FactorKind::kSymMatrix: {
        const int r = factor.size;
        for (int i = 0; i < r; ++i) {
          for (int j = i; j < r; ++j) {
            double ab = 0.0, ba = 0.0;
            for (int k = 0; k < r; ++k) {
              ab += a[i * r + k] * b[k * r + j];
              ba += b[i * r + k] * a[k * r + j];
            }
            // (XY + YX)/2 is symmetric; fill both halves from one value.
            const double v = 0.5 * (ab + ba);
            c[i * r + j] = v;
            c[j * r + i] = v;
          }
        }
        break;
      }
      case FactorKind::kSpin: {
        double dot = a[0] * b[0];
        for (int i = 1; i < factor.size; ++i) dot += a[i] * b[i];
        c[0] = dot;
        for (int i = 1; i < factor.size; ++i) c[i] = a[0] * b[i] + b[0] * a[i];
        break;
      }
    }
  }
  return out;
}

Element Identity(const AlgebraPtr& algebra) {
  Element e(algebra);
  for (std::size_t f = 0; f < algebra->num_factors(); ++f) {
    const Factor& factor = algebra->factor(f);
    std::span<double> b = e.mutable_block(f);
    switch (factor.kind) {
      case FactorKind::kRealVector:
        std::fill(b.begin(), b.end(), 1.0);
        break;
      case FactorKind::kSymMatrix:
        for (int i = 0; i < factor.size; ++i) b[i * factor.size + i] = 1.0;
        break;
      case FactorKind::kSpin:
        b[0] = 1.0;
        break;
    }
  }
  return e;
}

Element Zero(const AlgebraPtr& algebra) { return Element(algebra); }

double Trace(const Element& x) {
  const Algebra& alg = x.algebra();
  double t = 0.0;
  for (std::size_t f = 0; f < alg.num_factors(); ++f) {
    const Factor& factor = alg.factor(f);
    std::span<const double> b = x.block(f);
    switch (factor.kind) {
      case FactorKind::kRealVector:
        for (double v : b) t += v;
        break;
      case FactorKind::kSymMatrix:
        for (int i = 0; i < factor.size; ++i) t += b[i * factor.size + i];
        break;
      case FactorKind::kSpin:
        t += 2.0 * b[0];
        break;
    }
  }
  return t;
}

double Inner(const Element& x, const Element& y) {
  CheckSameAlgebra(x, y, "Inner");
  const Algebra& alg = x.algebra();
  double s = 0.0;
  for (std::size_t f = 0; f < alg.num_factors(); ++f) {
    std::span<const double> a = x.block(f);
    std::span<const double> b = y.block(f);
    // Tr(XY) for symmetric X, Y is the Frobenius product, so every factor
    // except spin reduces to a plain dot product of the stored entries.
    double dot = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
    s += alg.factor(f).kind == FactorKind::kSpin ? 2.0 * dot : dot;
  }
  return s;
}

SpectralDecomposition SpectralDecompose(const Element& x,
                                        const JacobiOptions& options) {
  const Algebra& alg = x.algebra();
  std::vector<double> values;
  std::vector<Element> frame;
  values.reserve(alg.rank());
  frame.reserve(alg.rank());
  for (std::size_t f = 0; f < alg.num_factors(); ++f) {
    LocalSpectrum local =
        DecomposeBlock(alg.factor(f), x.block(f), options, /*want_frame=*/true);
    for (std::size_t k = 0; k < local.values.size(); ++k) {
      values.push_back(local.values[k]);
      frame.push_back(EmbedBlock(x.algebra_ptr(), f, local.blocks[k]));
    }
  }
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i,
                                                   std::size_t j) {
    return values[i] > values[j];
  });
  SpectralDecomposition d;
  d.eigenvalues.reserve(values.size());
  d.frame.reserve(values.size());
  for (std::size_t i : order) {
    d.eigenvalues.push_back(values[i]);
    d.frame.push_back(std::move(frame[i]));
  }
  return d;
}

std::vector<double> Eigenvalues(const Element& x,
                                const JacobiOptions& options) {
  const Algebra& alg = x.algebra();
  std::vector<double> values;
  values.reserve(alg.rank());
  for (std::size_t f = 0; f < alg.num_factors(); ++f) {
    std::vector<double> v = FactorEigenvalues(alg.factor(f), x.block(f),
                                              options);
    values.insert(values.end(), v.begin(), v.end());
  }
  std::stable_sort(values.begin(), values.end(), std::greater<double>());
  return values;
}

Element Reconstruct(const SpectralDecomposition& d,
                    const std::function<double(double)>& f) {
  if (d.frame.empty()) {
    throw std::invalid_argument("Reconstruct: empty decomposition");
  }
  Element out(d.frame.front().algebra_ptr());
  std::span<double> dst = out.mutable_data();
  for (std::size_t i = 0; i < d.frame.size(); ++i) {
    const double w = f(d.eigenvalues[i]);
    std::span<const double> q = d.frame[i].data();
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += w * q[k];
  }
  return out;
}

Element SpectralApply(const Element& x, const std::function<double(double)>& f,
                      const JacobiOptions& options) {
  return Reconstruct(SpectralDecompose(x, options), f);
}

Element Exp(const Element& x) {
  return SpectralApply(x, [](double v) { return std::exp(v); });
}

double Norm(const Element& x, NormKind p) {
  if (p == NormKind::kL2) return std::sqrt(std::max(0.0, Inner(x, x)));
  const std::vector<double> values = Eigenvalues(x);
  double acc = 0.0;
  for (double v : values) {
    acc = p == NormKind::kL1 ? acc + std::abs(v) : std::max(acc, std::abs(v));
  }
  return acc;
}

std::vector<double> ToCoords(const Element& x) {
  const Algebra& alg = x.algebra();
  std::vector<double> v(alg.dim());
  for (std::size_t f = 0; f < alg.num_factors(); ++f) {
    const Factor& factor = alg.factor(f);
    std::span<const double> b = x.block(f);
    double* out = v.data() + alg.coord_offset(f);
    switch (factor.kind) {
      case FactorKind::kRealVector:
        std::copy(b.begin(), b.end(), out);
        break;
      case FactorKind::kSymMatrix: {
        const int r = factor.size;
        int k = 0;
        for (int i = 0; i < r; ++i) out[k++] = b[i * r + i];
        for (int i = 0; i < r; ++i) {
          for (int j = i + 1; j < r; ++j) out[k++] = kSqrt2 * b[i * r + j];
        }
        break;
      }
      case FactorKind::kSpin:
        for (int i = 0; i < factor.size; ++i) out[i] = kSqrt2 * b[i];
        break;
    }
  }
  return v;
}

Element FromCoords(const AlgebraPtr& algebra, std::span<const double> coords) {
  if (static_cast<int>(coords.size()) != algebra->dim()) {
    throw std::invalid_argument(
        "FromCoords: expected " + std::to_string(algebra->dim()) +
        " coordinates, got " + std::to_string(coords.size()));
  }
  Element x(algebra);
  for (std::size_t f = 0; f < algebra->num_factors(); ++f) {
    const Factor& factor = algebra->factor(f);
    std::span<double> b = x.mutable_block(f);
    const double* in = coords.data() + algebra->coord_offset(f);
    switch (factor.kind) {
      case FactorKind::kRealVector:
        std::copy(in, in + factor.size, b.begin());
        break;
      case FactorKind::kSymMatrix: {
        const int r = factor.size;
        int k = 0;
        for (int i = 0; i < r; ++i) b[i * r + i] = in[k++];
        for (int i = 0; i < r; ++i) {
          for (int j = i + 1; j < r; ++j) {
            const double v = in[k++] / kSqrt2;
            b[i * r + j] = v;
            b[j * r + i] = v;
          }
        }
        break;
      }
      case FactorKind::kSpin:
        for (int i = 0; i < factor.size; ++i) b[i] = in[i] / kSqrt2;
        break;
    }
  }
  return x;
}

double MinEigenvalue(const Element& x) { return Eigenvalues(x).back(); }

double MaxEigenvalue(const Element& x) { return Eigenvalues(x).front(); }

bool InCone(const Element& x, double tol) { return MinEigenvalue(x) >= -tol; }

}  // namespace dpscp
