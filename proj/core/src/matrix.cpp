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

#include "dualsim/matrix.hpp"

#include <cmath>
#include <utility>

#include "dualsim/errors.hpp"

namespace dualsim {

namespace {

void require_finite(const std::vector<Complex>& values, const char* what) {
  for (const Complex& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw DomainError(std::string(what) + ": non-finite entry");
    }
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("Matrix: dimensions must be positive");
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("Matrix: dimensions must be positive");
  }
  if (entries_.size() != rows * cols) {
    throw DimensionError("Matrix: entry count does not match rows*cols");
  }
  require_finite(entries_, "Matrix");
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols);
}

Matrix Matrix::diagonal(const std::vector<Complex>& diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  require_finite(m.entries_, "Matrix");
  return m;
}

Complex Matrix::trace() const {
  if (!is_square()) throw DimensionError("trace: matrix must be square");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex& v : entries_) sum += std::norm(v);
  return std::sqrt(sum);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const Complex& v : entries_) m = std::max(m, std::abs(v));
  return m;
}

StateVector::StateVector(std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) {
    throw DimensionError("StateVector: dimension must be positive");
  }
  require_finite(amplitudes_, "StateVector");
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DomainError("StateVector::basis: index out of range");
  std::vector<Complex> amps(dim, Complex(0.0, 0.0));
  amps[index] = 1.0;
  return StateVector(std::move(amps));
}

StateVector StateVector::uniform_superposition(std::size_t dim) {
  if (dim == 0) throw DimensionError("StateVector: dimension must be positive");
  std::vector<Complex> amps(dim, Complex(1.0 / std::sqrt(double(dim)), 0.0));
  return StateVector(std::move(amps));
}

StateVector StateVector::zero(std::size_t dim) {
  if (dim == 0) throw DimensionError("StateVector: dimension must be positive");
  return StateVector(std::vector<Complex>(dim, Complex(0.0, 0.0)));
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const Complex& a : amplitudes_) sum += std::norm(a);
  return sum;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

bool StateVector::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

StateVector StateVector::scaled(Complex factor) const {
  std::vector<Complex> amps(amplitudes_);
  for (Complex& a : amps) a *= factor;
  return StateVector(std::move(amps));
}

Matrix dagger(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(j, i) = std::conj(m(i, j));
    }
  }
  return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions do not match");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i0 = 0; i0 < a.rows(); ++i0) {
    for (std::size_t j0 = 0; j0 < a.cols(); ++j0) {
      const Complex aij = a(i0, j0);
      for (std::size_t i1 = 0; i1 < b.rows(); ++i1) {
        for (std::size_t j1 = 0; j1 < b.cols(); ++j1) {
          out(i0 * b.rows() + i1, j0 * b.cols() + j1) = aij * b(i1, j1);
        }
      }
    }
  }
  return out;
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("frobenius_distance: shapes do not match");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    sum += std::norm(a.entries()[i] - b.entries()[i]);
  }
  return std::sqrt(sum);
}

bool is_unitary(const Matrix& m, double tol) {
  if (!m.is_square()) return false;
  const Matrix gram = matmul(dagger(m), m);
  double worst = 0.0;
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      const Complex expected = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      worst = std::max(worst, std::abs(gram(i, j) - expected));
    }
  }
  return worst <= tol;
}

bool is_hermitian(const Matrix& m, double tol) {
  if (!m.is_square()) return false;
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst <= tol;
}

Matrix outer_product(const StateVector& a, const StateVector& b) {
  Matrix out(a.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      out(i, j) = a[i] * std::conj(b[j]);
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("Matrix addition: shapes do not match");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("Matrix subtraction: shapes do not match");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }

Matrix operator*(Complex scalar, const Matrix& m) {
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= scalar;
  }
  return out;
}

Matrix operator*(double scalar, const Matrix& m) {
  return Complex(scalar, 0.0) * m;
}

StateVector operator*(const Matrix& m, const StateVector& v) {
  if (m.cols() != v.dim()) {
    throw DimensionError("Matrix * StateVector: dimensions do not match");
  }
  std::vector<Complex> out(m.rows(), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex sum = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) sum += m(i, j) * v[j];
    out[i] = sum;
  }
  return StateVector(std::move(out));
}

StateVector operator+(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("StateVector addition: dimensions do not match");
  }
  std::vector<Complex> out(a.amplitudes());
  for (std::size_t i = 0; i < b.dim(); ++i) out[i] += b[i];
  return StateVector(std::move(out));
}

StateVector operator-(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("StateVector subtraction: dimensions do not match");
  }
  std::vector<Complex> out(a.amplitudes());
  for (std::size_t i = 0; i < b.dim(); ++i) out[i] -= b[i];
  return StateVector(std::move(out));
}

double distance(const StateVector& a, const StateVector& b) {
  return (a - b).norm();
}

}  // namespace dualsim
