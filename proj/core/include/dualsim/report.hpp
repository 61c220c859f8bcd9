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
#include <string>

#include "dualsim/circuit.hpp"

namespace dualsim {

/// Which semantics executes the circuit.
enum class Backend { pure, density, mixed };

Backend backend_from_name(const std::string& name);

/// Everything a single circuit execution produced. Serialized by
/// emit_json with a stable key order; see README for the schema.
struct RunReport {
  Backend backend;
  std::size_t qubit_count;
  MeasurementSpec measure;

  double efficiency;
  std::optional<double> zeno_boosted_efficiency;

  // Exactly one pair is populated, matching the backend's output kind.
  std::optional<StateVector> pure_unnormalized;
  std::optional<StateVector> pure_renormalized;
  std::optional<Matrix> density_unnormalized;
  std::optional<Matrix> density_renormalized;

  /// True when a renormalizing scenario found the wave at or below its
  /// threshold: no outcome is obtainable.
  bool null_outcome = false;

  OutcomeDistribution distribution;
  std::optional<SampleCounts> counts;
};

/// Executes a parsed circuit. The initial state defaults to |0...0> and
/// may be overridden (it must be normalized and of matching dimension).
/// The mixed backend accepts scenario none or renorm (trace threshold);
/// scenario ideal raises E_BACKEND_SCENARIO.
RunReport run_circuit(const Circuit& circuit, Backend backend,
                      const std::optional<StateVector>& input = std::nullopt);

/// One-query search over n = 2^k basis states: a two-path circuit whose
/// duality operator projects onto the marked state, giving efficiency 1/n
/// and, after renormalization, certainty on the target.
RunReport run_search_demo(std::size_t n, std::size_t target,
                          const MeasurementScenario& scenario,
                          const std::optional<ZenoSchedule>& zeno = std::nullopt);

/// Deterministic JSON serialization (stable key order, 17-digit floats).
std::string emit_json(const RunReport& report);

}  // namespace dualsim
