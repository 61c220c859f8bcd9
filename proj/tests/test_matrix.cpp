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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "dualsim/errors.hpp"
#include "test_util.hpp"

namespace dualsim {
namespace {

using testing::hadamard;
using testing::pauli_x;
using testing::pauli_y;
using testing::pauli_z;

TEST(Matrix, RejectsNonFiniteEntries) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(Matrix(1, 1, {Complex(nan, 0)}), DomainError);
  EXPECT_THROW(Matrix(1, 1, {Complex(0, inf)}), DomainError);
  EXPECT_THROW(StateVector({Complex(nan, 0)}), DomainError);
}

TEST(Matrix, RejectsShapeMismatches) {
  EXPECT_THROW(Matrix(2, 2, {1, 0, 0}), DimensionError);
  EXPECT_THROW(Matrix(0, 2), DimensionError);
  EXPECT_THROW(matmul(Matrix(2, 3), Matrix(2, 2)), DimensionError);
  EXPECT_THROW(frobenius_distance(Matrix(2, 2), Matrix(3, 3)),
               DimensionError);
}

TEST(Dagger, IdentityFixedPoint) {
  EXPECT_EQ(dagger(Matrix::identity(2)), Matrix::identity(2));
}

TEST(Dagger, TransposesRealMatrices) {
  const Matrix m(2, 2, {0, 1, 0, 0});
  EXPECT_EQ(dagger(m), Matrix(2, 2, {0, 0, 1, 0}));
}

TEST(Dagger, PauliYIsHermitian) {
  // Conjugate-transpose by hand: (-i) -> conj -> i, then swapped back.
  EXPECT_EQ(dagger(pauli_y()), pauli_y());
}

TEST(Dagger, IsAnInvolution) {
  testing::Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = testing::random_matrix(5, rng);
    EXPECT_EQ(dagger(dagger(m)), m);
  }
}

TEST(Matmul, PauliXSquaresToIdentity) {
  EXPECT_EQ(matmul(pauli_x(), pauli_x()), Matrix::identity(2));
}

TEST(Matmul, IdentityIsNeutral) {
  testing::Rng rng(8);
  const Matrix m = testing::random_matrix(4, rng);
  EXPECT_EQ(matmul(Matrix::identity(4), m), m);
}

TEST(Matmul, HadamardSquaresToIdentity) {
  const Matrix hh = matmul(hadamard(), hadamard());
  EXPECT_LT(frobenius_distance(hh, Matrix::identity(2)), 1e-15);
}

TEST(TensorProduct, IdentityTimesIdentity) {
  EXPECT_EQ(tensor_product(Matrix::identity(2), Matrix::identity(2)),
            Matrix::identity(4));
}

TEST(TensorProduct, XOnHighQubitFlipsMsb) {
  const Matrix x_high = tensor_product(pauli_x(), Matrix::identity(2));
  const StateVector mapped = x_high * StateVector::basis(4, 0);
  EXPECT_EQ(mapped.amplitudes(), StateVector::basis(4, 2).amplitudes());
}

TEST(TensorProduct, ZTensorZDiagonal) {
  const Matrix zz = tensor_product(pauli_z(), pauli_z());
  EXPECT_EQ(zz, Matrix::diagonal({1, -1, -1, 1}));
}

TEST(TensorProduct, AssociativeOnIntegerMatrices) {
  const Matrix a(2, 2, {1, 2, 3, 4});
  const Matrix b(2, 2, {0, 1, 1, 0});
  const Matrix c(2, 2, {5, 0, 0, 7});
  EXPECT_EQ(tensor_product(tensor_product(a, b), c),
            tensor_product(a, tensor_product(b, c)));
}

TEST(FrobeniusDistance, ZeroOnEqualMatrices) {
  testing::Rng rng(9);
  const Matrix m = testing::random_matrix(3, rng);
  EXPECT_EQ(frobenius_distance(m, m), 0.0);
}

TEST(FrobeniusDistance, IdentityToZero) {
  EXPECT_DOUBLE_EQ(frobenius_distance(Matrix::identity(2), Matrix(2, 2)),
                   std::sqrt(2.0));
}

TEST(FrobeniusDistance, ProjectorToMaximallyMixed) {
  // Entrywise differences (1/2, 0, 0, -1/2).
  const Matrix projector = Matrix::diagonal({1, 0});
  const Matrix mixed = 0.5 * Matrix::identity(2);
  EXPECT_NEAR(frobenius_distance(projector, mixed), 1.0 / std::sqrt(2.0),
              1e-15);
}

TEST(IsUnitary, AcceptsGatesRejectsContractions) {
  EXPECT_TRUE(is_unitary(hadamard(), 1e-10));
  EXPECT_FALSE(is_unitary(0.5 * Matrix::identity(2), 1e-10));
}

TEST(IsUnitary, GlobalPhaseCancels) {
  testing::Rng rng(10);
  const Matrix u = testing::random_unitary(3, rng);
  EXPECT_TRUE(is_unitary(std::polar(1.0, 0.3) * u, 1e-10));
}

TEST(StateVector, BasisAndNorms) {
  const StateVector e1 = StateVector::basis(4, 1);
  EXPECT_EQ(e1.dim(), 4u);
  EXPECT_DOUBLE_EQ(e1.norm_squared(), 1.0);
  EXPECT_TRUE(e1.is_normalized());
  EXPECT_FALSE(StateVector::zero(4).is_normalized());
  EXPECT_THROW(StateVector::basis(2, 2), DomainError);
}

TEST(OuterProduct, MatchesHandComputation) {
  const Matrix proj = outer_product(testing::ket_plus(), testing::ket_plus());
  EXPECT_LT(frobenius_distance(
                proj, Matrix(2, 2, {0.5, 0.5, 0.5, 0.5})),
            1e-15);
}

}  // namespace
}  // namespace dualsim
