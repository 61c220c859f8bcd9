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

#include <cstddef>

namespace dualsim {

// Centralized numerical tolerances. Every module reads these rather than
// hard-coding its own thresholds.

/// Strict entrywise tolerance: hermiticity checks, normalization checks,
/// round-trip identities.
inline constexpr double TOL_STRICT = 1e-10;

/// Reconstruction tolerance for eigendecomposition-backed operations
/// (psd_sqrt squaring, operator decompositions).
inline constexpr double TOL_RECON = 1e-8;

/// Unitarity tolerance for gate validation and decomposition factors.
inline constexpr double TOL_UNITARY = 1e-9;

/// Tolerance for identities that hold to rounding error (cached norms,
/// efficiency bookkeeping, renormalized outputs).
inline constexpr double TOL_CONSISTENCY = 1e-12;

/// Probability vectors must sum to one within this bound.
inline constexpr double TOL_PROB_SUM = 1e-9;

/// Eigenvalues of nominally-PSD matrices may dip this far below zero before
/// being treated as an error; anything in (-EIG_CLAMP_WINDOW, 0) is clamped
/// to zero.
inline constexpr double EIG_CLAMP_WINDOW = 1e-10;

/// Convergence target for the Jacobi eigensolver: off-diagonal Frobenius
/// mass relative to the input scale.
inline constexpr double JACOBI_OFF_TOL = 1e-12;

// Desk-scale caps. The coherent divided-density representation is an
// (n_branches * dim)^2 block matrix, so both factors stay small.
inline constexpr std::size_t MAX_BRANCHES = 16;
inline constexpr std::size_t MAX_DIM = 64;
inline constexpr std::size_t MAX_QUBITS = 6;  // 2^6 == MAX_DIM

}  // namespace dualsim
