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

#include <gtest/gtest.h>

#include "dualsim/errors.hpp"
#include "test_util.hpp"

namespace dualsim {
namespace {

TEST(DensityMatrix, AcceptsProperStates) {
  const DensityMatrix rho = DensityMatrix::proper(0.5 * Matrix::identity(2));
  EXPECT_TRUE(rho.is_proper());
  EXPECT_DOUBLE_EQ(rho.trace_real(), 1.0);
}

TEST(DensityMatrix, RejectsNonHermitian) {
  EXPECT_THROW(DensityMatrix::proper(Matrix(2, 2, {0.5, 1, 0, 0.5})),
               DomainError);
}

TEST(DensityMatrix, RejectsNegativeEigenvalues) {
  EXPECT_THROW(DensityMatrix::subnormalized(Matrix::diagonal({1.5, -0.5})),
               DomainError);
}

TEST(DensityMatrix, RejectsWrongTrace) {
  EXPECT_THROW(DensityMatrix::proper(Matrix::identity(2)), DomainError);
  EXPECT_THROW(DensityMatrix::subnormalized(Matrix::identity(2)), DomainError);
}

TEST(DensityMatrix, SubnormalizedAllowsPartialAndZeroTrace) {
  const DensityMatrix partial =
      DensityMatrix::subnormalized(Matrix::diagonal({0.25, 0.25}));
  EXPECT_FALSE(partial.is_proper());
  EXPECT_DOUBLE_EQ(partial.trace_real(), 0.5);
  const DensityMatrix zero = DensityMatrix::subnormalized(Matrix(3, 3));
  EXPECT_DOUBLE_EQ(zero.trace_real(), 0.0);
}

TEST(DensityMatrix, PureOuterProduct) {
  const DensityMatrix rho = DensityMatrix::pure(testing::ket_plus());
  EXPECT_TRUE(rho.is_proper());
  EXPECT_LT(frobenius_distance(rho.matrix(),
                               Matrix(2, 2, {0.5, 0.5, 0.5, 0.5})),
            1e-15);
}

TEST(DensityMatrix, RandomMixturesAreProper) {
  testing::Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = testing::random_density(4, rng);
    EXPECT_TRUE(rho.is_proper());
  }
}

}  // namespace
}  // namespace dualsim
