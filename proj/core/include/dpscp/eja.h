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

// Jordan-algebra operations: products, trace form, spectral decomposition,
// spectral functions and norms, the coordinate isometry, and cone
// membership. All functions are pure.

#ifndef DPSCP_EJA_H_
#define DPSCP_EJA_H_

#include <functional>
#include <span>
#include <vector>

#include "dpscp/algebra.h"
#include "dpscp/jacobi.h"

namespace dpscp {

// x o y, factor-wise: componentwise for R^k, (XY + YX)/2 for symmetric
// matrices, (x0 y0 + <xb, yb>, x0 yb + y0 xb) for spin factors.
Element JordanProduct(const Element& x, const Element& y);

Element Identity(const AlgebraPtr& algebra);
Element Zero(const AlgebraPtr& algebra);

// Closed-form trace; never goes through a decomposition.
double Trace(const Element& x);

// <x, y> = Tr(x o y), evaluated per factor in closed form.
double Inner(const Element& x, const Element& y);

struct SpectralDecomposition {
  // Descending; ties ordered by factor index, then within-factor order.
  std::vector<double> eigenvalues;
  // Jordan frame; frame[i] pairs with eigenvalues[i].
  std::vector<Element> frame;
};

SpectralDecomposition SpectralDecompose(const Element& x,
                                        const JacobiOptions& options = {});

// Eigenvalues only, in the same order SpectralDecompose reports them.
std::vector<double> Eigenvalues(const Element& x,
                                const JacobiOptions& options = {});

// sum_i f(lambda_i) q_i.
Element SpectralApply(const Element& x, const std::function<double(double)>& f,
                      const JacobiOptions& options = {});
Element Reconstruct(const SpectralDecomposition& d,
                    const std::function<double(double)>& f);

Element Exp(const Element& x);

enum class NormKind { kL1, kL2, kLinf };

// Spectral l_p norm. kL2 is sqrt(<x, x>); the others decompose.
double Norm(const Element& x, NormKind p);

// Orthonormal coordinates in R^dim. Symmetric blocks contribute the
// diagonal first, then the strict upper triangle row-major scaled by
// sqrt(2); spin blocks are scaled by sqrt(2).
std::vector<double> ToCoords(const Element& x);
Element FromCoords(const AlgebraPtr& algebra, std::span<const double> coords);

double MinEigenvalue(const Element& x);
double MaxEigenvalue(const Element& x);
bool InCone(const Element& x, double tol);

}  // namespace dpscp

#endif  // DPSCP_EJA_H_
