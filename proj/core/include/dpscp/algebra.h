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

// Algebra descriptors and element storage for Euclidean Jordan algebras
// built as direct sums of R^k, real symmetric matrices and spin factors.

#ifndef DPSCP_ALGEBRA_H_
#define DPSCP_ALGEBRA_H_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace dpscp {

enum class FactorKind { kRealVector, kSymMatrix, kSpin };

// One simple (or, for R^k, fully decomposable) summand of an algebra.
//
//   kRealVector(k): R^k with componentwise product, rank k, dim k.
//   kSymMatrix(r):  r x r symmetric matrices, rank r, dim r(r+1)/2.
//   kSpin(n):       spin factor on R^n = R x R^(n-1), rank 2, dim n.
struct Factor {
  FactorKind kind;
  int size;

  static Factor RealVector(int k) { return {FactorKind::kRealVector, k}; }
  static Factor SymMatrix(int r) { return {FactorKind::kSymMatrix, r}; }
  static Factor Spin(int n) { return {FactorKind::kSpin, n}; }

  int rank() const;
  int dim() const;
  // Number of doubles used to store one block. Symmetric matrices are kept
  // as full row-major r x r arrays.
  int storage() const;
  // Peirce constant d; the scaled primitive idempotents of a simple factor
  // form a manifold of dimension d(r-1)+1.
  int peirce_constant() const;

  std::string ToString() const;
  friend bool operator==(const Factor&, const Factor&) = default;
};

class Algebra {
 public:
  explicit Algebra(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t num_factors() const { return factors_.size(); }
  const Factor& factor(std::size_t i) const { return factors_[i]; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }
  std::size_t storage() const { return storage_; }
  std::size_t offset(std::size_t i) const { return offsets_[i]; }
  // Offset of factor i's coordinates inside the isometry vector.
  std::size_t coord_offset(std::size_t i) const { return coord_offsets_[i]; }
  bool is_simple() const;

  std::string ToString() const;
  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<Factor> factors_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> coord_offsets_;
  int rank_ = 0;
  int dim_ = 0;
  std::size_t storage_ = 0;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Validates the factor list and returns a shared descriptor. Throws
// std::invalid_argument on an empty list or an out-of-range factor size.
AlgebraPtr MakeAlgebra(std::vector<Factor> factors);
inline AlgebraPtr MakeAlgebra(Factor f) {
  return MakeAlgebra(std::vector<Factor>{f});
}

bool SameAlgebra(const Algebra& a, const Algebra& b);

// An element of an algebra: per-factor coefficient blocks stored
// contiguously. Elements are values; copying copies the coefficients and
// shares the descriptor.
class Element {
 public:
  // An unbound placeholder; only assignment to it is meaningful.
  Element() = default;
  // The zero element.
  explicit Element(AlgebraPtr algebra);
  // Takes ownership of raw storage; symmetric blocks are symmetrized.
  Element(AlgebraPtr algebra, std::vector<double> data);

  const Algebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }

  std::span<const double> data() const { return data_; }
  std::span<double> mutable_data() { return data_; }
  std::span<const double> block(std::size_t i) const;
  std::span<double> mutable_block(std::size_t i);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(double s);

  friend bool operator==(const Element& a, const Element& b);

 private:
  void Symmetrize();

  AlgebraPtr algebra_;
  std::vector<double> data_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator-(Element a);
Element operator*(double s, Element a);
Element operator*(Element a, double s);

// Builds an element from per-factor blocks. RealVector and Spin blocks hold
// `size` entries; SymMatrix blocks hold either r*r row-major entries or the
// r(r+1)/2 upper triangle in row-major order. Symmetric blocks are
// symmetrized as (M + M^T)/2.
Element FromBlocks(AlgebraPtr algebra,
                   const std::vector<std::vector<double>>& blocks);

// Embeds `local` (an element of the single-factor algebra of factor i) into
// `algebra`, leaving all other blocks zero.
Element EmbedBlock(AlgebraPtr algebra, std::size_t factor_index,
                   std::span<const double> local);

// Throws std::invalid_argument naming `op` if x and y live in different
// algebras.
void CheckSameAlgebra(const Element& x, const Element& y, const char* op);

}  // namespace dpscp

#endif  // DPSCP_ALGEBRA_H_
