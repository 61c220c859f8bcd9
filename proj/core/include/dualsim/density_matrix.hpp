// Copyright 2026 The dualsim Authors
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

#pragma once

#include "dualsim/matrix.hpp"

namespace dualsim {

/// Hermitian positive-semidefinite matrix with trace at most one. A
/// "proper" density matrix has unit trace; pipeline outputs may be
/// subnormalized (trace in [0, 1]), with the trace recording the surviving
/// wave's weight. Validation happens once at construction: hermiticity
/// within TOL_STRICT and smallest eigenvalue above -EIG_CLAMP_WINDOW.
class DensityMatrix {
 public:
  /// Unit-trace density matrix (trace 1 within TOL_STRICT).
  static DensityMatrix proper(Matrix m);

  /// Output-context density matrix: trace anywhere in [0, 1] (small slack
  /// above 1 for rounding is tolerated).
  static DensityMatrix subnormalized(Matrix m);

  /// |psi><psi| for a (possibly subnormalized) state vector.
  static DensityMatrix pure(const StateVector& psi);

  const Matrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.rows(); }
  double trace_real() const { return trace_; }
  bool is_proper() const;

  const Complex& operator()(std::size_t i, std::size_t j) const {
    return matrix_(i, j);
  }

 private:
  DensityMatrix(Matrix m, double trace)
      : matrix_(std::move(m)), trace_(trace) {}

  static double validate(const Matrix& m, bool require_unit_trace);

  Matrix matrix_;
  double trace_;
};

}  // namespace dualsim
