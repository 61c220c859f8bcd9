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

#include <cstdint>
#include <optional>
#include <vector>

#include "dualsim/duality.hpp"

namespace dualsim {

// Measuring a subnormalized output wave admits three scenarios:
//
//   1. NO_RENORM:        the detector sees the partial wave as-is; with
//                        probability 1 - efficiency it registers nothing.
//   2. RENORM_THRESHOLD: the state is renormalized before measurement
//                        provided its norm (pure) or trace (density)
//                        exceeds a device threshold epsilon; below the
//                        threshold no outcome is obtainable.
//   3. RENORM_IDEAL:     threshold semantics with epsilon = 0 - any
//                        non-vanishing wave is eventually detected.
//
// Note the epsilon units differ between the two formalisms: a pure state is
// thresholded on its amplitude norm, a density state on its trace.

enum class ScenarioMode { no_renorm, renorm_threshold, renorm_ideal };

class MeasurementScenario {
 public:
  static MeasurementScenario none() {
    return MeasurementScenario(ScenarioMode::no_renorm, 0.0);
  }
  static MeasurementScenario renorm(double epsilon);
  static MeasurementScenario ideal() {
    return MeasurementScenario(ScenarioMode::renorm_ideal, 0.0);
  }

  ScenarioMode mode() const { return mode_; }
  /// Threshold; ideal mode behaves as threshold mode with epsilon = 0.
  double epsilon() const { return epsilon_; }

 private:
  MeasurementScenario(ScenarioMode mode, double epsilon)
      : mode_(mode), epsilon_(epsilon) {}

  ScenarioMode mode_;
  double epsilon_;
};

/// One measurement draw: a computational-basis index, or nothing when the
/// detector failed to register (only possible without renormalization or
/// below threshold).
struct MeasurementOutcome {
  std::optional<std::size_t> value;
};

/// Probabilities over basis indices plus the no-outcome probability; the
/// total is 1 within TOL_STRICT.
class OutcomeDistribution {
 public:
  OutcomeDistribution(std::vector<double> probabilities,
                      double null_probability);

  std::size_t dim() const { return probabilities_.size(); }
  double probability(std::size_t index) const { return probabilities_[index]; }
  const std::vector<double>& probabilities() const { return probabilities_; }
  double null_probability() const { return null_probability_; }

 private:
  std::vector<double> probabilities_;
  double null_probability_;
};

/// Number of repeated detection attempts on the same partial wave.
struct ZenoSchedule {
  explicit ZenoSchedule(std::uint32_t r);
  std::uint32_t repeats;
};

/// Shot counts per basis index plus the no-outcome count.
struct SampleCounts {
  std::vector<std::uint64_t> counts;
  std::uint64_t null_count = 0;

  std::uint64_t total() const;
};

/// Probability that a perfect detector registers anything: squared norm of
/// a pure output, trace of a density output.
double efficiency(const PipelineResult& result);

/// Scenario 1 distribution: basis probabilities straight off the
/// subnormalized output, remainder assigned to the null outcome.
OutcomeDistribution measure_scenario1(const PipelineResult& result);

/// Scenario 2/3 renormalization. Pure outputs are divided by their norm
/// when it exceeds epsilon; density outputs by their trace. Returns
/// nullopt when the wave is at or below threshold (a modeled outcome, not
/// an error). Rejects NO_RENORM scenarios.
std::optional<PipelineResult> renormalize(const PipelineResult& result,
                                          const MeasurementScenario& scenario);

/// Detection probability after `repeats` independent attempts with
/// per-attempt efficiency eta: 1 - (1 - eta)^r.
double zeno_detection_probability(double eta, const ZenoSchedule& schedule);

/// Draws `shots` outcomes with a seeded generator. Identical seeds give
/// bit-identical counts; shots must be positive.
SampleCounts sample(const OutcomeDistribution& dist, std::uint64_t shots,
                    std::int64_t seed);

}  // namespace dualsim
