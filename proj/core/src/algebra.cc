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

#include "dpscp/algebra.h"

#include <cstddef>
#include <memory>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dpscp {

int Factor::rank() const {
  switch (kind) {
    case FactorKind::kRealVector:
      return size;
    case FactorKind::kSymMatrix:
      return size;
    case FactorKind::kSpin:
      return 2;
  }
  return 0;
}

int Factor::dim() const {
  switch (kind) {
    case FactorKind::kRealVector:
      return size;
    case FactorKind::kSymMatrix:
      return size * (size + 1) / 2;
    case FactorKind::kSpin:
      return size;
  }
  return 0;
}

int Factor::storage() const {
  return kind == FactorKind::kSymMatrix ? size * size : size;
}

int Factor::peirce_constant() const {
  switch (kind) {
    case FactorKind::kRealVector:
      return 0;
    case FactorKind::kSymMatrix:
      return 1;
    case FactorKind::kSpin:
      // Spin factor on R^n: rank 2, Peirce constant n - 2, so the scaled
      // idempotent rays have dimension n - 1.
      return size - 2;
  }
  return 0;
}

std::string Factor::ToString() const {
  std::ostringstream os;
  switch (kind) {
    case FactorKind::kRealVector:
      os << "R^" << size;
      break;
    case FactorKind::kSymMatrix:
      os << "Sym(" << size << ")";
      break;
    case FactorKind::kSpin:
      os << "Spin(" << size << ")";
      break;
  }
  return os.str();
}

Algebra::Algebra(std::vector<Factor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw std::invalid_argument("algebra needs at least one factor");
  }
  for (const Factor& f : factors_) {
    const int min_size = f.kind == FactorKind::kSpin ? 2 : 1;
    if (f.size < min_size) {
      throw std::invalid_argument("factor " + f.ToString() +
                                  " has invalid size");
    }
    offsets_.push_back(storage_);
    coord_offsets_.push_back(static_cast<std::size_t>(dim_));
    storage_ += static_cast<std::size_t>(f.storage());
    rank_ += f.rank();
    dim_ += f.dim();
  }
}

bool Algebra::is_simple() const {
  if (factors_.size() != 1) return false;
  const Factor& f = factors_.front();
  return f.kind != FactorKind::kRealVector || f.size == 1;
}

std::string Algebra::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) out += " + ";
    out += factors_[i].ToString();
  }
  return out;
}

AlgebraPtr MakeAlgebra(std::vector<Factor> factors) {
  return std::make_shared<const Algebra>(std::move(factors));
}

bool SameAlgebra(const Algebra& a, const Algebra& b) {
  return &a == &b || a == b;
}

void CheckSameAlgebra(const Element& x, const Element& y, const char* op) {
  if (!SameAlgebra(x.algebra(), y.algebra())) {
    throw std::invalid_argument(std::string(op) + ": algebra mismatch (" +
                                x.algebra().ToString() + " vs " +
                                y.algebra().ToString() + ")");
  }
}

Element::Element(AlgebraPtr algebra)
    : algebra_(std::move(algebra)), data_(algebra_->storage(), 0.0) {}

Element::Element(AlgebraPtr algebra, std::vector<double> data)
    : algebra_(std::move(algebra)), data_(std::move(data)) {
  if (data_.size() != algebra_->storage()) {
    throw std::invalid_argument("element storage size mismatch for " +
                                algebra_->ToString());
  }
  Symmetrize();
}

std::span<const double> Element::block(std::size_t i) const {
  return std::span<const double>(data_).subspan(
      algebra_->offset(i), algebra_->factor(i).storage());
}

std::span<double> Element::mutable_block(std::size_t i) {
  return std::span<double>(data_).subspan(algebra_->offset(i),
                                          algebra_->factor(i).storage());
}

void Element::Symmetrize() {
  for (std::size_t f = 0; f < algebra_->num_factors(); ++f) {
    if (algebra_->factor(f).kind != FactorKind::kSymMatrix) continue;
    const int r = algebra_->factor(f).size;
    std::span<double> m = mutable_block(f);
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        const double avg = 0.5 * (m[i * r + j] + m[j * r + i]);
        m[i * r + j] = avg;
        m[j * r + i] = avg;
      }
    }
  }
}

Element& Element::operator+=(const Element& other) {
  CheckSameAlgebra(*this, other, "add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Element& Element::operator-=(const Element& other) {
  CheckSameAlgebra(*this, other, "subtract");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Element& Element::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

bool operator==(const Element& a, const Element& b) {
  return SameAlgebra(a.algebra(), b.algebra()) && a.data_ == b.data_;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator-(Element a) { return a *= -1.0; }
Element operator*(double s, Element a) { return a *= s; }
Element operator*(Element a, double s) { return a *= s; }

Element FromBlocks(AlgebraPtr algebra,
                   const std::vector<std::vector<double>>& blocks) {
  if (blocks.size() != algebra->num_factors()) {
    throw std::invalid_argument("expected " +
                                std::to_string(algebra->num_factors()) +
                                " blocks, got " + std::to_string(blocks.size()));
  }
  std::vector<double> data(algebra->storage(), 0.0);
  for (std::size_t f = 0; f < blocks.size(); ++f) {
    const Factor& factor = algebra->factor(f);
    const std::vector<double>& in = blocks[f];
    double* out = data.data() + algebra->offset(f);
    if (factor.kind != FactorKind::kSymMatrix) {
      if (static_cast<int>(in.size()) != factor.size) {
        throw std::invalid_argument("block " + std::to_string(f) + " of " +
                                    factor.ToString() + " needs " +
                                    std::to_string(factor.size) + " entries");
      }
      std::copy(in.begin(), in.end(), out);
      continue;
    }
    const int r = factor.size;
    if (static_cast<int>(in.size()) == r * r) {
      std::copy(in.begin(), in.end(), out);
    } else if (static_cast<int>(in.size()) == factor.dim()) {
      std::size_t k = 0;
      for (int i = 0; i < r; ++i) {
        for (int j = i; j < r; ++j) {
          out[i * r + j] = in[k];
          out[j * r + i] = in[k];
          ++k;
        }
      }
    } else {
      throw std::invalid_argument("block " + std::to_string(f) + " of " +
                                  factor.ToString() +
                                  " needs r*r or r(r+1)/2 entries");
    }
  }
  return Element(std::move(algebra), std::move(data));
}

Element EmbedBlock(AlgebraPtr algebra, std::size_t factor_index,
                   std::span<const double> local) {
  Element out(std::move(algebra));
  std::span<double> dst = out.mutable_block(factor_index);
  if (local.size() != dst.size()) {
    throw std::invalid_argument("EmbedBlock: block size mismatch");
  }
  std::copy(local.begin(), local.end(), dst.begin());
  return out;
}

}  // namespace dpscp
