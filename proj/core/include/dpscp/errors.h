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

#ifndef DPSCP_ERRORS_H_
#define DPSCP_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dpscp {

// Spectral solver did not reach its off-diagonal threshold.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Bregman projection onto 1/s-dense distributions has no solution.
class InfeasibleProjectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested construction would exceed the desk-scale size limit.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, double required)
      : std::runtime_error(what), required_(required) {}
  double required() const { return required_; }

 private:
  double required_;
};

}  // namespace dpscp

#endif  // DPSCP_ERRORS_H_
