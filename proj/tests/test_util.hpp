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

#include <cmath>
#include <random>
#include <vector>

#include "dualsim/density_matrix.hpp"
#include "dualsim/duality.hpp"
#include "dualsim/matrix.hpp"

namespace dualsim::testing {

using Rng = std::mt19937_64;

inline Complex random_gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return Complex(re, im);
}

/// Complex matrix with entries drawn in the unit disc.
inline Matrix random_matrix(std::size_t dim, Rng& rng) {
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      m(i, j) = std::polar(radius(rng), angle(rng));
    }
  }
  return m;
}

inline Matrix random_hermitian(std::size_t dim, Rng& rng) {
  const Matrix m = random_matrix(dim, rng);
  return 0.5 * (m + dagger(m));
}

/// Haar-ish unitary: modified Gram-Schmidt on a Gaussian matrix.
inline Matrix random_unitary(std::size_t dim, Rng& rng) {
  std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
  for (auto& col : cols) {
    for (Complex& v : col) v = random_gaussian(rng);
  }
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex overlap = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        overlap += std::conj(cols[k][i]) * cols[j][i];
      }
      for (std::size_t i = 0; i < dim; ++i) {
        cols[j][i] -= overlap * cols[k][i];
      }
    }
    double norm = 0.0;
    for (const Complex& v : cols[j]) norm += std::norm(v);
    norm = std::sqrt(norm);
    for (Complex& v : cols[j]) v /= norm;
  }
  Matrix u(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < dim; ++i) u(i, j) = cols[j][i];
  }
  return u;
}

inline StateVector random_state(std::size_t dim, Rng& rng) {
  std::vector<Complex> amps(dim);
  double norm = 0.0;
  for (Complex& a : amps) {
    a = random_gaussian(rng);
    norm += std::norm(a);
  }
  norm = std::sqrt(norm);
  for (Complex& a : amps) a /= norm;
  return StateVector(std::move(amps));
}

inline BranchDistribution random_distribution(std::size_t n, Rng& rng) {
  std::uniform_real_distribution<double> uniform(0.05, 1.0);
  std::vector<double> weights(n);
  double sum = 0.0;
  for (double& w : weights) {
    w = uniform(rng);
    sum += w;
  }
  for (double& w : weights) w /= sum;
  return BranchDistribution(std::move(weights));
}

inline DualityGate random_gate(std::size_t paths, std::size_t dim, Rng& rng) {
  std::vector<Matrix> unitaries;
  unitaries.reserve(paths);
  for (std::size_t i = 0; i < paths; ++i) {
    unitaries.push_back(random_unitary(dim, rng));
  }
  return DualityGate(std::move(unitaries));
}

/// Proper mixed state: random convex mixture of a few random pure states.
inline DensityMatrix random_density(std::size_t dim, Rng& rng) {
  std::uniform_int_distribution<std::size_t> count(1, 4);
  const std::size_t members = count(rng);
  std::uniform_real_distribution<double> uniform(0.05, 1.0);
  std::vector<double> weights(members);
  double sum = 0.0;
  for (double& w : weights) {
    w = uniform(rng);
    sum += w;
  }
  Matrix rho(dim, dim);
  for (double w : weights) {
    const StateVector psi = random_state(dim, rng);
    rho = rho + (w / sum) * outer_product(psi, psi);
  }
  return DensityMatrix::proper(rho);
}

// Frequently used fixed gates.
inline Matrix pauli_x() { return Matrix(2, 2, {0, 1, 1, 0}); }
inline Matrix pauli_y() {
  return Matrix(2, 2, {0, Complex(0, -1), Complex(0, 1), 0});
}
inline Matrix pauli_z() { return Matrix(2, 2, {1, 0, 0, -1}); }
inline Matrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return Matrix(2, 2, {s, s, s, -s});
}
inline StateVector ket_plus() {
  const double s = 1.0 / std::sqrt(2.0);
  return StateVector({s, s});
}
inline StateVector ket_minus() {
  const double s = 1.0 / std::sqrt(2.0);
  return StateVector({s, -s});
}

}  // namespace dualsim::testing
