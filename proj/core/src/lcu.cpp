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

#include "dualsim/lcu.hpp"

#include <cmath>

#include "dualsim/errors.hpp"
#include "dualsim/linalg.hpp"
#include "dualsim/tolerances.hpp"

namespace dualsim {

UnitaryCombination::UnitaryCombination(std::size_t dim,
                                       std::vector<WeightedUnitary> terms)
    : dim_(dim), terms_(std::move(terms)) {
  if (dim_ == 0) {
    throw DimensionError("UnitaryCombination: dimension must be positive");
  }
  for (const WeightedUnitary& term : terms_) {
    if (!std::isfinite(term.coefficient) || term.coefficient <= 0.0) {
      throw DomainError("UnitaryCombination: coefficients must be positive");
    }
    if (term.unitary.rows() != dim_ || term.unitary.cols() != dim_) {
      throw DimensionError("UnitaryCombination: term dimension mismatch");
    }
    if (!is_unitary(term.unitary, TOL_UNITARY)) {
      throw DomainError("UnitaryCombination: factor is not unitary");
    }
  }
}

double UnitaryCombination::coefficient_sum() const {
  double sum = 0.0;
  for (const WeightedUnitary& term : terms_) sum += term.coefficient;
  return sum;
}

ContractionWitness ContractionWitness::of(Matrix m) {
  const double norm = operator_norm(m);
  return ContractionWitness{std::move(m), norm};
}

bool ContractionWitness::in_contraction_set() const {
  return norm <= 1.0 + TOL_UNITARY;
}

std::pair<Matrix, Matrix> hermitian_split(const Matrix& a) {
  if (!a.is_square()) {
    throw DimensionError("hermitian_split: matrix must be square");
  }
  const Matrix adj = dagger(a);
  const Matrix b = 0.5 * (a + adj);
  const Matrix c = Complex(0.0, -0.5) * (a - adj);
  return {b, c};
}

UnitaryCombination hermitian_to_unitaries(const Matrix& h) {
  if (!h.is_square()) {
    throw DimensionError("hermitian_to_unitaries: matrix must be square");
  }
  if (!is_hermitian(h, TOL_STRICT)) {
    throw DomainError("hermitian_to_unitaries: matrix is not Hermitian");
  }
  const std::size_t dim = h.rows();
  // Work on the exactly-Hermitian average so I - (h/s)^2 stays Hermitian to
  // rounding error for psd_sqrt.
  const Matrix sym = 0.5 * (h + dagger(h));
  const double s = operator_norm(sym);
  if (s == 0.0) {
    return UnitaryCombination(dim, {});
  }
  const Matrix normalized = (1.0 / s) * sym;
  const Matrix defect = Matrix::identity(dim) - matmul(normalized, normalized);
  const Matrix root = psd_sqrt(defect);
  const Matrix u = normalized + Complex(0.0, 1.0) * root;
  return UnitaryCombination(
      dim, {{0.5 * s, u}, {0.5 * s, dagger(u)}});
}

UnitaryCombination decompose(const Matrix& a) {
  if (!a.is_square()) {
    throw DimensionError("decompose: matrix must be square");
  }
  const auto [b, c] = hermitian_split(a);
  const UnitaryCombination real_part = hermitian_to_unitaries(b);
  const UnitaryCombination imag_part = hermitian_to_unitaries(c);

  std::vector<WeightedUnitary> terms = real_part.terms();
  // a = B + iC, so the imaginary part's unitaries pick up a phase i, which
  // keeps them unitary.
  for (const WeightedUnitary& term : imag_part.terms()) {
    terms.push_back(
        {term.coefficient, Complex(0.0, 1.0) * term.unitary});
  }
  return UnitaryCombination(a.rows(), std::move(terms));
}

Matrix reconstruct(const UnitaryCombination& combination) {
  Matrix sum(combination.dim(), combination.dim());
  for (const WeightedUnitary& term : combination.terms()) {
    sum = sum + term.coefficient * term.unitary;
  }
  return sum;
}

bool is_in_contraction_set(const Matrix& t) {
  if (!t.is_square()) {
    throw DimensionError("is_in_contraction_set: matrix must be square");
  }
  return operator_norm(t) <= 1.0 + TOL_UNITARY;
}

bool midpoint_unitarity_check(const Matrix& v, const Matrix& w) {
  if (!is_unitary(v, TOL_UNITARY) || !is_unitary(w, TOL_UNITARY)) {
    throw DomainError("midpoint_unitarity_check: inputs must be unitary");
  }
  if (v.rows() != w.rows() || v.cols() != w.cols()) {
    throw DimensionError("midpoint_unitarity_check: dimension mismatch");
  }
  return is_unitary(0.5 * (v + w), TOL_RECON);
}

}  // namespace dualsim
