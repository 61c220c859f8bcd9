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

#include "dualsim/density_matrix.hpp"

#include <cmath>
#include <utility>

#include "dualsim/errors.hpp"
#include "dualsim/linalg.hpp"
#include "dualsim/tolerances.hpp"

namespace dualsim {

double DensityMatrix::validate(const Matrix& m, bool require_unit_trace) {
  if (!m.is_square()) {
    throw DimensionError("DensityMatrix: matrix must be square");
  }
  if (!is_hermitian(m, TOL_STRICT)) {
    throw DomainError("DensityMatrix: matrix is not Hermitian");
  }
  const EigenDecomposition eig = hermitian_eig(m);
  if (eig.eigenvalues.back() < -EIG_CLAMP_WINDOW) {
    throw DomainError("DensityMatrix: matrix is not positive semidefinite");
  }
  const double trace = m.trace().real();
  if (require_unit_trace) {
    if (std::abs(trace - 1.0) > TOL_STRICT) {
      throw DomainError("DensityMatrix: trace must be 1 for a proper state");
    }
  } else if (trace > 1.0 + TOL_UNITARY || trace < -TOL_STRICT) {
    throw DomainError("DensityMatrix: trace must lie in [0, 1]");
  }
  return trace;
}

DensityMatrix DensityMatrix::proper(Matrix m) {
  const double trace = validate(m, /*require_unit_trace=*/true);
  return DensityMatrix(std::move(m), trace);
}

DensityMatrix DensityMatrix::subnormalized(Matrix m) {
  const double trace = validate(m, /*require_unit_trace=*/false);
  return DensityMatrix(std::move(m), trace);
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  return subnormalized(outer_product(psi, psi));
}

bool DensityMatrix::is_proper() const {
  return std::abs(trace_ - 1.0) <= TOL_STRICT;
}

}  // namespace dualsim
