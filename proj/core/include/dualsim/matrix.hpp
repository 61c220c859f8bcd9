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

#include <complex>
#include <cstddef>
#include <vector>

#include "dualsim/tolerances.hpp"

namespace dualsim {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Entries are validated to be finite on
/// construction; all algebra below is pure and returns fresh values.
class Matrix {
 public:
  /// Zero matrix of the given shape. Both dimensions must be >= 1.
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static Matrix identity(std::size_t dim);
  static Matrix zero(std::size_t rows, std::size_t cols);
  /// Diagonal matrix from the given entries.
  static Matrix diagonal(const std::vector<Complex>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Complex& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  const std::vector<Complex>& entries() const { return entries_; }

  /// Sum of diagonal entries; requires a square matrix.
  Complex trace() const;
  double frobenius_norm() const;
  /// Largest entrywise modulus.
  double max_abs() const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

/// Complex amplitude vector of dimension >= 1. Normalization is contextual:
/// inputs to pipelines must be unit norm, outputs may be subnormalized.
class StateVector {
 public:
  explicit StateVector(std::vector<Complex> amplitudes);

  /// Computational basis state |index> in the given dimension.
  static StateVector basis(std::size_t dim, std::size_t index);
  /// (1/sqrt(dim), ..., 1/sqrt(dim)).
  static StateVector uniform_superposition(std::size_t dim);
  /// All-zero vector (used for fully cancelled branches).
  static StateVector zero(std::size_t dim);

  std::size_t dim() const { return amplitudes_.size(); }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }

  double norm_squared() const;
  double norm() const;
  bool is_normalized(double tol = TOL_STRICT) const;

  StateVector scaled(Complex factor) const;

 private:
  std::vector<Complex> amplitudes_;
};

/// Hermitian conjugate: complex conjugate plus transpose.
Matrix dagger(const Matrix& m);

/// Standard matrix product; throws DimensionError on a.cols != b.rows.
Matrix matmul(const Matrix& a, const Matrix& b);

/// Kronecker product; (a ox b)(i0*br+i1, j0*bc+j1) = a(i0,j0) * b(i1,j1).
Matrix tensor_product(const Matrix& a, const Matrix& b);

/// sqrt(sum |a_ij - b_ij|^2); operands must share a shape.
double frobenius_distance(const Matrix& a, const Matrix& b);

/// True iff max entrywise |m^dagger m - I| <= tol.
bool is_unitary(const Matrix& m, double tol);

/// True iff max entrywise |m - m^dagger| <= tol.
bool is_hermitian(const Matrix& m, double tol);

/// |a><b| outer product.
Matrix outer_product(const StateVector& a, const StateVector& b);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Complex scalar, const Matrix& m);
Matrix operator*(double scalar, const Matrix& m);

StateVector operator*(const Matrix& m, const StateVector& v);
StateVector operator+(const StateVector& a, const StateVector& b);
StateVector operator-(const StateVector& a, const StateVector& b);

/// Euclidean distance ||a - b||.
double distance(const StateVector& a, const StateVector& b);

}  // namespace dualsim
