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

#include "dualsim/duality.hpp"

#include <cmath>
#include <utility>

#include "dualsim/errors.hpp"
#include "dualsim/tolerances.hpp"

namespace dualsim {

BranchDistribution::BranchDistribution(std::vector<double> weights)
    : weights_(std::move(weights)), norm_(0.0) {
  if (weights_.empty()) {
    throw DomainError("BranchDistribution: at least one branch required");
  }
  if (weights_.size() > MAX_BRANCHES) {
    throw DomainError("BranchDistribution: branch count exceeds cap");
  }
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw DomainError("BranchDistribution: weights must be finite and >= 0");
    }
    sum += w;
    sum_sq += w * w;
  }
  if (std::abs(sum - 1.0) > TOL_PROB_SUM) {
    throw DomainError("BranchDistribution: weights must sum to 1");
  }
  norm_ = std::sqrt(sum_sq);
}

DualityGate::DualityGate(std::vector<Matrix> unitaries)
    : unitaries_(std::move(unitaries)) {
  if (unitaries_.empty()) {
    throw DomainError("DualityGate: at least one path required");
  }
  if (unitaries_.size() > MAX_BRANCHES) {
    throw DomainError("DualityGate: path count exceeds cap");
  }
  const std::size_t dim = unitaries_.front().rows();
  if (dim > MAX_DIM) {
    throw DomainError("DualityGate: dimension exceeds cap");
  }
  for (const Matrix& u : unitaries_) {
    if (u.rows() != dim || u.cols() != dim) {
      throw DimensionError("DualityGate: unitaries must share one dimension");
    }
    if (!is_unitary(u, TOL_UNITARY)) {
      throw DomainError("DualityGate: matrix is not unitary");
    }
  }
}

DividedPureState::DividedPureState(std::vector<StateVector> branches,
                                   BranchDistribution dist)
    : branches_(std::move(branches)), dist_(std::move(dist)) {
  if (branches_.size() != dist_.size()) {
    throw DimensionError("DividedPureState: branch count mismatch");
  }
  const std::size_t dim = branches_.front().dim();
  for (const StateVector& b : branches_) {
    if (b.dim() != dim) {
      throw DimensionError("DividedPureState: branch dimensions differ");
    }
  }
}

DividedDensityState::DividedDensityState(std::size_t branch_count,
                                         std::size_t dim,
                                         std::vector<Matrix> blocks,
                                         BranchDistribution dist)
    : branch_count_(branch_count),
      dim_(dim),
      blocks_(std::move(blocks)),
      dist_(std::move(dist)) {
  if (branch_count_ != dist_.size()) {
    throw DimensionError("DividedDensityState: branch count mismatch");
  }
  if (blocks_.size() != branch_count_ * branch_count_) {
    throw DimensionError("DividedDensityState: expected n*n blocks");
  }
  for (const Matrix& b : blocks_) {
    if (b.rows() != dim_ || b.cols() != dim_) {
      throw DimensionError("DividedDensityState: block shape mismatch");
    }
  }
  // Hermitian pairing of the block grid; the full block matrix is then
  // Hermitian, and positivity follows from the divider/gate construction.
  for (std::size_t i = 0; i < branch_count_; ++i) {
    for (std::size_t j = i; j < branch_count_; ++j) {
      if (frobenius_distance(block(j, i), dagger(block(i, j))) > TOL_STRICT) {
        throw DomainError("DividedDensityState: blocks violate M_ji = M_ij^+");
      }
    }
  }
}

Matrix DividedDensityState::block_matrix() const {
  Matrix full(branch_count_ * dim_, branch_count_ * dim_);
  for (std::size_t i = 0; i < branch_count_; ++i) {
    for (std::size_t j = 0; j < branch_count_; ++j) {
      const Matrix& b = block(i, j);
      for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
          full(i * dim_ + r, j * dim_ + c) = b(r, c);
        }
      }
    }
  }
  return full;
}

PipelineResult PipelineResult::from_pure(StateVector out) {
  const double efficiency = out.norm_squared();
  if (efficiency > 1.0 + TOL_UNITARY) {
    throw NumericalError("PipelineResult: efficiency above 1");
  }
  return PipelineResult(Kind::pure, std::move(out), std::nullopt, efficiency);
}

PipelineResult PipelineResult::from_density(DensityMatrix out) {
  const double efficiency = out.trace_real();
  if (efficiency > 1.0 + TOL_UNITARY || efficiency < -TOL_STRICT) {
    throw NumericalError("PipelineResult: efficiency outside [0, 1]");
  }
  return PipelineResult(Kind::density, std::nullopt, std::move(out),
                        std::max(0.0, efficiency));
}

const StateVector& PipelineResult::pure_out() const {
  if (!pure_) throw DomainError("PipelineResult: no pure output");
  return *pure_;
}

const DensityMatrix& PipelineResult::density_out() const {
  if (!density_) throw DomainError("PipelineResult: no density output");
  return *density_;
}

namespace {

void require_dim_cap(std::size_t dim) {
  if (dim > MAX_DIM) {
    throw DomainError("duality pipeline: dimension exceeds cap");
  }
}

void require_match(const BranchDistribution& p, const DualityGate& g,
                   std::size_t dim) {
  if (p.size() != g.paths()) {
    throw DimensionError("duality pipeline: branch/path count mismatch");
  }
  if (g.dim() != dim) {
    throw DimensionError("duality pipeline: gate dimension mismatch");
  }
}

}  // namespace

DividedPureState divide_pure(const StateVector& psi,
                             const BranchDistribution& p) {
  require_dim_cap(psi.dim());
  if (!psi.is_normalized(TOL_STRICT)) {
    throw DomainError("divide_pure: input state must be normalized");
  }
  std::vector<StateVector> branches;
  branches.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    branches.push_back(psi.scaled(p.weight(i) / p.norm()));
  }
  return DividedPureState(std::move(branches), p);
}

StateVector combine_pure(const DividedPureState& divided) {
  StateVector sum = StateVector::zero(divided.dim());
  for (std::size_t i = 0; i < divided.branch_count(); ++i) {
    sum = sum + divided.branch(i);
  }
  return sum.scaled(divided.dist().norm());
}

DividedPureState apply_gate_pure(const DividedPureState& divided,
                                 const DualityGate& gate) {
  require_match(divided.dist(), gate, divided.dim());
  std::vector<StateVector> branches;
  branches.reserve(divided.branch_count());
  for (std::size_t i = 0; i < divided.branch_count(); ++i) {
    branches.push_back(gate.unitary(i) * divided.branch(i));
  }
  return DividedPureState(std::move(branches), divided.dist());
}

PipelineResult run_pure_pipeline(const StateVector& psi,
                                 const BranchDistribution& p,
                                 const DualityGate& gate) {
  require_dim_cap(psi.dim());
  require_match(p, gate, psi.dim());
  if (!psi.is_normalized(TOL_STRICT)) {
    throw DomainError("run_pure_pipeline: input state must be normalized");
  }
  return PipelineResult::from_pure(duality_operator(p, gate) * psi);
}

Matrix duality_operator(const BranchDistribution& p, const DualityGate& gate) {
  if (p.size() != gate.paths()) {
    throw DimensionError("duality_operator: branch/path count mismatch");
  }
  Matrix sum(gate.dim(), gate.dim());
  for (std::size_t i = 0; i < p.size(); ++i) {
    sum = sum + p.weight(i) * gate.unitary(i);
  }
  return sum;
}

DividedDensityState divide_density(const DensityMatrix& rho,
                                   const BranchDistribution& p) {
  require_dim_cap(rho.dim());
  if (!rho.is_proper()) {
    throw DomainError("divide_density: input must have trace 1");
  }
  const double norm_sq = p.norm() * p.norm();
  std::vector<Matrix> blocks;
  blocks.reserve(p.size() * p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      blocks.push_back((p.weight(i) * p.weight(j) / norm_sq) * rho.matrix());
    }
  }
  return DividedDensityState(p.size(), rho.dim(), std::move(blocks), p);
}

DividedDensityState apply_gate_density(const DividedDensityState& divided,
                                       const DualityGate& gate) {
  require_match(divided.dist(), gate, divided.dim());
  std::vector<Matrix> blocks;
  blocks.reserve(divided.branch_count() * divided.branch_count());
  for (std::size_t i = 0; i < divided.branch_count(); ++i) {
    for (std::size_t j = 0; j < divided.branch_count(); ++j) {
      blocks.push_back(
          matmul(gate.unitary(i),
                 matmul(divided.block(i, j), dagger(gate.unitary(j)))));
    }
  }
  return DividedDensityState(divided.branch_count(), divided.dim(),
                             std::move(blocks), divided.dist());
}

DensityMatrix combine_density(const DividedDensityState& divided) {
  Matrix sum(divided.dim(), divided.dim());
  for (std::size_t i = 0; i < divided.branch_count(); ++i) {
    for (std::size_t j = 0; j < divided.branch_count(); ++j) {
      sum = sum + divided.block(i, j);
    }
  }
  const double norm_sq = divided.dist().norm() * divided.dist().norm();
  return DensityMatrix::subnormalized(norm_sq * sum);
}

PipelineResult run_density_pipeline(const DensityMatrix& rho,
                                    const BranchDistribution& p,
                                    const DualityGate& gate) {
  require_dim_cap(rho.dim());
  require_match(p, gate, rho.dim());
  if (!rho.is_proper()) {
    throw DomainError("run_density_pipeline: input must have trace 1");
  }
  const Matrix a = duality_operator(p, gate);
  const Matrix out = matmul(a, matmul(rho.matrix(), dagger(a)));
  return PipelineResult::from_density(DensityMatrix::subnormalized(out));
}

DensityMatrix run_gudder_mixed_pipeline(const DensityMatrix& rho,
                                        const BranchDistribution& p,
                                        const DualityGate& gate) {
  require_dim_cap(rho.dim());
  require_match(p, gate, rho.dim());
  if (!rho.is_proper()) {
    throw DomainError("run_gudder_mixed_pipeline: input must have trace 1");
  }
  Matrix sum(rho.dim(), rho.dim());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Matrix& u = gate.unitary(i);
    sum = sum + p.weight(i) * matmul(u, matmul(rho.matrix(), dagger(u)));
  }
  DensityMatrix out = DensityMatrix::subnormalized(std::move(sum));
  if (std::abs(out.trace_real() - 1.0) > TOL_STRICT) {
    throw NumericalError("run_gudder_mixed_pipeline: trace drifted from 1");
  }
  return out;
}

double convex_average_check(const std::vector<EnsembleMember>& ensemble,
                            const BranchDistribution& p,
                            const DualityGate& gate) {
  if (ensemble.empty()) {
    throw DomainError("convex_average_check: ensemble must be non-empty");
  }
  double weight_sum = 0.0;
  for (const EnsembleMember& member : ensemble) {
    if (!std::isfinite(member.weight) || member.weight < 0.0) {
      throw DomainError("convex_average_check: weights must be >= 0");
    }
    weight_sum += member.weight;
  }
  if (std::abs(weight_sum - 1.0) > TOL_PROB_SUM) {
    throw DomainError("convex_average_check: weights must sum to 1");
  }

  const std::size_t dim = ensemble.front().state.dim();
  const Matrix a = duality_operator(p, gate);

  // Average of the per-member coherent outputs.
  Matrix averaged_outputs(dim, dim);
  // Averaged input density matrix.
  Matrix averaged_input(dim, dim);
  for (const EnsembleMember& member : ensemble) {
    const Matrix proj = outer_product(member.state, member.state);
    averaged_input = averaged_input + member.weight * proj;
    averaged_outputs =
        averaged_outputs + member.weight * matmul(a, matmul(proj, dagger(a)));
  }

  const PipelineResult mixed_run =
      run_density_pipeline(DensityMatrix::proper(averaged_input), p, gate);
  return frobenius_distance(averaged_outputs,
                            mixed_run.density_out().matrix());
}

}  // namespace dualsim
