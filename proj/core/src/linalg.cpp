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

#include "dualsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dualsim/errors.hpp"
#include "dualsim/tolerances.hpp"

namespace dualsim {

namespace {

double offdiag_frobenius(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// One complex Jacobi rotation zeroing a(p,q). The 2x2 transform on the
// (p,q) plane is W = [[c, s], [-s*phase_conj, c*phase_conj]] where phase
// strips a(p,q) down to its modulus, so the remaining problem is the real
// symmetric one with the classic tangent formula.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;

  const Complex phase = apq / r;            // e^{i arg(a_pq)}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0.0)
                       ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                       : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex wpp(c, 0.0);
  const Complex wpq(s, 0.0);
  const Complex wqp = -s * std::conj(phase);
  const Complex wqq = c * std::conj(phase);

  const std::size_t n = a.rows();

  // a <- W^dagger a W: columns first, then rows.
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * wpp + akq * wqp;
    a(k, q) = akp * wpq + akq * wqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(wpp) * apk + std::conj(wqp) * aqk;
    a(q, k) = std::conj(wpq) * apk + std::conj(wqq) * aqk;
  }

  // Pin the entries the rotation is defined to produce.
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = Complex(a(p, p).real(), 0.0);
  a(q, q) = Complex(a(q, q).real(), 0.0);

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * wpp + vkq * wqp;
    v(k, q) = vkp * wpq + vkq * wqq;
  }
}

}  // namespace

Matrix EigenDecomposition::reconstruct() const {
  const std::size_t n = eigenvalues.size();
  Matrix scaled = eigenvectors;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= eigenvalues[j];
  }
  return matmul(scaled, dagger(eigenvectors));
}

EigenDecomposition hermitian_eig(const Matrix& h) {
  if (!h.is_square()) {
    throw DimensionError("hermitian_eig: matrix must be square");
  }
  if (!is_hermitian(h, TOL_STRICT)) {
    throw DomainError("hermitian_eig: matrix is not Hermitian");
  }

  const std::size_t n = h.rows();
  Matrix a = h;
  // Work on the exactly-Hermitian average so rounding asymmetry within the
  // tolerance cannot bias the sweeps.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = Complex(a(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex m = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
  }
  Matrix v = Matrix::identity(n);

  const double scale = std::max(1.0, a.frobenius_norm());
  const double target = JACOBI_OFF_TOL * scale;
  constexpr int kMaxSweeps = 100;

  bool converged = offdiag_frobenius(a) <= target;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        rotate(a, v, p, q);
      }
    }
    converged = offdiag_frobenius(a) <= target;
  }
  if (!converged) {
    throw NumericalError("hermitian_eig: Jacobi sweeps did not converge");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  EigenDecomposition out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) {
      out.eigenvectors(i, j) = v(i, order[j]);
    }
  }
  return out;
}

double operator_norm(const Matrix& m) {
  if (!m.is_square()) {
    throw DimensionError("operator_norm: matrix must be square");
  }
  // m^dagger m is Hermitian PSD; its top eigenvalue is the squared norm.
  const EigenDecomposition eig = hermitian_eig(matmul(dagger(m), m));
  const double top = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
  return std::sqrt(std::max(0.0, top));
}

Matrix psd_sqrt(const Matrix& h) {
  if (!h.is_square()) {
    throw DimensionError("psd_sqrt: matrix must be square");
  }
  if (!is_hermitian(h, TOL_STRICT)) {
    throw DomainError("psd_sqrt: matrix is not Hermitian");
  }
  EigenDecomposition eig = hermitian_eig(h);
  const std::size_t n = h.rows();
  for (double& lambda : eig.eigenvalues) {
    if (lambda < -EIG_CLAMP_WINDOW) {
      throw NumericalError("psd_sqrt: materially negative eigenvalue");
    }
    lambda = std::sqrt(std::max(0.0, lambda));
  }
  Matrix scaled = eig.eigenvectors;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= eig.eigenvalues[j];
  }
  return matmul(scaled, dagger(eig.eigenvectors));
}

}  // namespace dualsim
