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

#include <optional>
#include <vector>

#include "dualsim/density_matrix.hpp"
#include "dualsim/matrix.hpp"

namespace dualsim {

// A duality computation divides a wave into weighted sub-waves, applies one
// unitary per path, and recombines. Three semantics are provided:
//
//   * pure:     psi -> sum_i p_i U_i psi           (subnormalized output)
//   * coherent: rho -> A rho A^dagger, A = sum_i p_i U_i
//   * mixed:    rho -> sum_i p_i U_i rho U_i^dagger (trace preserving)
//
// The coherent semantics is the density-level counterpart of the pure one;
// the mixed semantics is retained as an explicit alternative backend so the
// divergence between the two density treatments stays observable.

/// Nonnegative branch weights p_1..p_n with sum 1; caches ||p|| = sqrt(sum
/// p_i^2). Zero weights are allowed (those branches carry zero waves).
class BranchDistribution {
 public:
  explicit BranchDistribution(std::vector<double> weights);

  std::size_t size() const { return weights_.size(); }
  double weight(std::size_t i) const { return weights_[i]; }
  const std::vector<double>& weights() const { return weights_; }
  double norm() const { return norm_; }

 private:
  std::vector<double> weights_;
  double norm_;
};

/// Per-path unitaries (U_1..U_n), all of one dimension, each unitary within
/// TOL_UNITARY.
class DualityGate {
 public:
  explicit DualityGate(std::vector<Matrix> unitaries);

  std::size_t paths() const { return unitaries_.size(); }
  std::size_t dim() const { return unitaries_.front().rows(); }
  const Matrix& unitary(std::size_t i) const { return unitaries_[i]; }

 private:
  std::vector<Matrix> unitaries_;
};

/// Output of the divider in the pure formalism: one (generally
/// subnormalized) sub-wave per branch. The divider is an isometry, so the
/// branch norms restore the input norm in quadrature.
class DividedPureState {
 public:
  DividedPureState(std::vector<StateVector> branches, BranchDistribution dist);

  std::size_t branch_count() const { return branches_.size(); }
  std::size_t dim() const { return branches_.front().dim(); }
  const StateVector& branch(std::size_t i) const { return branches_[i]; }
  const BranchDistribution& dist() const { return dist_; }

 private:
  std::vector<StateVector> branches_;
  BranchDistribution dist_;
};

/// Output of the divider in the coherent density formalism: the full n x n
/// grid of dim x dim blocks M_ij obtained by conjugating with the divider,
/// M_ij = p_i p_j rho / ||p||^2. Off-diagonal blocks carry the coherences
/// the combiner needs; blocks satisfy M_ji = dagger(M_ij).
class DividedDensityState {
 public:
  DividedDensityState(std::size_t branch_count, std::size_t dim,
                      std::vector<Matrix> blocks, BranchDistribution dist);

  std::size_t branch_count() const { return branch_count_; }
  std::size_t dim() const { return dim_; }
  const Matrix& block(std::size_t i, std::size_t j) const {
    return blocks_[i * branch_count_ + j];
  }
  const BranchDistribution& dist() const { return dist_; }

  /// Assembles the (n*dim) x (n*dim) block matrix; Hermitian PSD.
  Matrix block_matrix() const;

 private:
  std::size_t branch_count_;
  std::size_t dim_;
  std::vector<Matrix> blocks_;  // row-major n x n
  BranchDistribution dist_;
};

/// Result of a full divide-gate-combine pipeline. The measurement
/// efficiency is the squared norm (pure) or trace (density) of the
/// subnormalized output.
class PipelineResult {
 public:
  enum class Kind { pure, density };

  static PipelineResult from_pure(StateVector out);
  static PipelineResult from_density(DensityMatrix out);

  Kind kind() const { return kind_; }
  double efficiency() const { return efficiency_; }
  const StateVector& pure_out() const;
  const DensityMatrix& density_out() const;

 private:
  PipelineResult(Kind kind, std::optional<StateVector> pure,
                 std::optional<DensityMatrix> density, double efficiency)
      : kind_(kind),
        pure_(std::move(pure)),
        density_(std::move(density)),
        efficiency_(efficiency) {}

  Kind kind_;
  std::optional<StateVector> pure_;
  std::optional<DensityMatrix> density_;
  double efficiency_;
};

/// Divider D_p: psi -> branches (p_i/||p||) psi. Requires a normalized
/// input; the output satisfies the isometry identity sum_i ||branch_i||^2 =
/// ||psi||^2.
DividedPureState divide_pure(const StateVector& psi,
                             const BranchDistribution& p);

/// Combiner C_p: branches -> ||p|| * sum_i branch_i. Linear in the branch
/// vectors; inverts divide_pure on the divided subspace.
StateVector combine_pure(const DividedPureState& divided);

/// Applies U_i to branch i. Branch norms are individually preserved.
DividedPureState apply_gate_pure(const DividedPureState& divided,
                                 const DualityGate& gate);

/// Full pure pipeline: output sum_i p_i U_i psi with efficiency equal to
/// its squared norm. Equals the divide/gate/combine composition.
PipelineResult run_pure_pipeline(const StateVector& psi,
                                 const BranchDistribution& p,
                                 const DualityGate& gate);

/// The effective (generally non-unitary) operator sum_i p_i U_i; a convex
/// combination of unitaries, hence a contraction.
Matrix duality_operator(const BranchDistribution& p, const DualityGate& gate);

/// Divider on a proper density matrix: blocks M_ij = p_i p_j rho / ||p||^2.
DividedDensityState divide_density(const DensityMatrix& rho,
                                   const BranchDistribution& p);

/// Per-path gates on the divided density state: M_ij <- U_i M_ij U_j^dagger.
DividedDensityState apply_gate_density(const DividedDensityState& divided,
                                       const DualityGate& gate);

/// Combiner at the density level: ||p||^2 * sum_ij M_ij (subnormalized).
DensityMatrix combine_density(const DividedDensityState& divided);

/// Full coherent density pipeline: A rho A^dagger with A the duality
/// operator; efficiency is the output trace. Consistent with the pure
/// pipeline on pure inputs.
PipelineResult run_density_pipeline(const DensityMatrix& rho,
                                    const BranchDistribution& p,
                                    const DualityGate& gate);

/// The alternative mixed-state semantics sum_i p_i U_i rho U_i^dagger: a
/// trace-preserving map that generally disagrees with the coherent one.
DensityMatrix run_gudder_mixed_pipeline(const DensityMatrix& rho,
                                        const BranchDistribution& p,
                                        const DualityGate& gate);

/// One pure state of a proper mixture, prepared with classical weight q.
struct EnsembleMember {
  double weight;
  StateVector state;
};

/// Frobenius distance between (a) the weighted average of per-member
/// coherent outputs and (b) the coherent pipeline applied to the averaged
/// density matrix. Linearity makes this vanish; returns the distance so
/// callers can assert the bound.
double convex_average_check(const std::vector<EnsembleMember>& ensemble,
                            const BranchDistribution& p,
                            const DualityGate& gate);

}  // namespace dualsim
