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

#include <vector>

#include "dualsim/matrix.hpp"

namespace dualsim {

/// Result of a Hermitian eigendecomposition: H = V diag(lambda) V^dagger
/// with real eigenvalues sorted descending and orthonormal columns in V.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;

  /// V diag(lambda) V^dagger, mainly used as a test oracle.
  Matrix reconstruct() const;
};

/// Eigendecomposition of a Hermitian matrix via cyclic complex Jacobi
/// rotations. Sweeps continue until the off-diagonal Frobenius mass falls
/// below JACOBI_OFF_TOL relative to the input scale.
///
/// Throws DomainError when the input is not Hermitian within TOL_STRICT and
/// NumericalError on non-convergence.
EigenDecomposition hermitian_eig(const Matrix& h);

/// Largest singular value, sqrt(lambda_max(m^dagger m)). Square input only.
double operator_norm(const Matrix& m);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// (-EIG_CLAMP_WINDOW, 0) are clamped to zero; anything below that window
/// raises NumericalError.
Matrix psd_sqrt(const Matrix& h);

}  // namespace dualsim
