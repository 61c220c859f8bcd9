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

#include <utility>
#include <vector>

#include "dualsim/matrix.hpp"

namespace dualsim {

// Every bounded operator is a positive combination of unitaries. The
// constructive route used here: split A = B + iC into Hermitian parts, then
// write each Hermitian H with s = ||H|| as (s/2)(U + U^dagger) where
// U = H/s + i sqrt(I - (H/s)^2). At most four weighted unitaries result.

struct WeightedUnitary {
  double coefficient;
  Matrix unitary;
};

/// A positive combination sum_k c_k V_k with every c_k > 0 and every V_k
/// unitary within TOL_UNITARY. The zero operator is the empty combination.
class UnitaryCombination {
 public:
  UnitaryCombination(std::size_t dim, std::vector<WeightedUnitary> terms);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<WeightedUnitary>& terms() const { return terms_; }
  double coefficient_sum() const;

 private:
  std::size_t dim_;
  std::vector<WeightedUnitary> terms_;
};

/// An operator together with its cached operator norm; member of the
/// contraction set g(H) iff the norm is at most 1.
struct ContractionWitness {
  Matrix op;
  double norm;

  static ContractionWitness of(Matrix m);
  bool in_contraction_set() const;
};

/// Cartesian decomposition a = b + i*c with b, c Hermitian.
std::pair<Matrix, Matrix> hermitian_split(const Matrix& a);

/// Two-term positive combination realizing a Hermitian operator; the zero
/// operator yields the empty combination.
UnitaryCombination hermitian_to_unitaries(const Matrix& h);

/// Positive combination (at most four terms) realizing an arbitrary square
/// operator; reconstruction holds within TOL_RECON in Frobenius norm.
UnitaryCombination decompose(const Matrix& a);

/// sum_k c_k V_k; the empty combination reconstructs the zero matrix.
Matrix reconstruct(const UnitaryCombination& combination);

/// operator_norm(t) <= 1 (+ TOL_UNITARY slack).
bool is_in_contraction_set(const Matrix& t);

/// For unitaries v, w: whether (v+w)/2 is unitary. True only when v and w
/// coincide, which is what makes the unitaries extreme points of the
/// contraction set.
bool midpoint_unitarity_check(const Matrix& v, const Matrix& w);

}  // namespace dualsim
