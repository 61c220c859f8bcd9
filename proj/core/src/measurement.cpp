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

#include "dualsim/measurement.hpp"

#include <cmath>
#include <random>
#include <utility>

#include "dualsim/errors.hpp"
#include "dualsim/tolerances.hpp"

namespace dualsim {

MeasurementScenario MeasurementScenario::renorm(double epsilon) {
  if (!std::isfinite(epsilon) || epsilon < 0.0) {
    throw DomainError("MeasurementScenario: epsilon must be finite and >= 0");
  }
  return MeasurementScenario(ScenarioMode::renorm_threshold, epsilon);
}

OutcomeDistribution::OutcomeDistribution(std::vector<double> probabilities,
                                         double null_probability)
    : probabilities_(std::move(probabilities)),
      null_probability_(null_probability) {
  if (probabilities_.empty()) {
    throw DimensionError("OutcomeDistribution: dimension must be positive");
  }
  double total = 0.0;
  for (double& prob : probabilities_) {
    if (!std::isfinite(prob) || prob < -TOL_UNITARY) {
      throw DomainError("OutcomeDistribution: negative probability");
    }
    if (prob < 0.0) prob = 0.0;  // rounding residue
    total += prob;
  }
  if (!std::isfinite(null_probability_) || null_probability_ < -TOL_UNITARY) {
    throw DomainError("OutcomeDistribution: negative null probability");
  }
  if (null_probability_ < 0.0) null_probability_ = 0.0;
  total += null_probability_;
  if (std::abs(total - 1.0) > TOL_STRICT) {
    throw DomainError("OutcomeDistribution: probabilities must total 1");
  }
}

ZenoSchedule::ZenoSchedule(std::uint32_t r) : repeats(r) {
  if (r == 0) throw DomainError("ZenoSchedule: repeats must be >= 1");
}

std::uint64_t SampleCounts::total() const {
  std::uint64_t sum = null_count;
  for (std::uint64_t c : counts) sum += c;
  return sum;
}

double efficiency(const PipelineResult& result) { return result.efficiency(); }

OutcomeDistribution measure_scenario1(const PipelineResult& result) {
  std::vector<double> probs;
  if (result.kind() == PipelineResult::Kind::pure) {
    const StateVector& out = result.pure_out();
    probs.resize(out.dim());
    for (std::size_t k = 0; k < out.dim(); ++k) probs[k] = std::norm(out[k]);
  } else {
    const DensityMatrix& out = result.density_out();
    probs.resize(out.dim());
    for (std::size_t k = 0; k < out.dim(); ++k) probs[k] = out(k, k).real();
  }
  return OutcomeDistribution(std::move(probs), 1.0 - result.efficiency());
}

std::optional<PipelineResult> renormalize(
    const PipelineResult& result, const MeasurementScenario& scenario) {
  if (scenario.mode() == ScenarioMode::no_renorm) {
    throw DomainError("renormalize: scenario does not renormalize");
  }
  const double epsilon = scenario.epsilon();
  if (result.kind() == PipelineResult::Kind::pure) {
    const double norm = result.pure_out().norm();
    if (!(norm > epsilon)) return std::nullopt;
    return PipelineResult::from_pure(result.pure_out().scaled(1.0 / norm));
  }
  const double trace = result.density_out().trace_real();
  if (!(trace > epsilon)) return std::nullopt;
  const Matrix renormed = (1.0 / trace) * result.density_out().matrix();
  return PipelineResult::from_density(DensityMatrix::subnormalized(renormed));
}

double zeno_detection_probability(double eta, const ZenoSchedule& schedule) {
  if (!std::isfinite(eta) || eta < 0.0 || eta > 1.0) {
    throw DomainError("zeno_detection_probability: eta must be in [0, 1]");
  }
  return 1.0 - std::pow(1.0 - eta, double(schedule.repeats));
}

SampleCounts sample(const OutcomeDistribution& dist, std::uint64_t shots,
                    std::int64_t seed) {
  if (shots == 0) throw DomainError("sample: shots must be positive");

  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  const auto draw_unit = [&rng]() {
    // 53 uniform bits; avoids distribution objects for cross-platform
    // bit-reproducibility.
    return double(rng() >> 11) * 0x1.0p-53;
  };

  double total = dist.null_probability();
  for (double p : dist.probabilities()) total += p;

  SampleCounts out;
  out.counts.assign(dist.dim(), 0);
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = draw_unit() * total;
    double cumulative = 0.0;
    MeasurementOutcome outcome;  // null unless a basis bucket catches u
    for (std::size_t k = 0; k < dist.dim(); ++k) {
      cumulative += dist.probability(k);
      if (u < cumulative) {
        outcome.value = k;
        break;
      }
    }
    if (outcome.value) {
      ++out.counts[*outcome.value];
    } else {
      ++out.null_count;
    }
  }
  return out;
}

}  // namespace dualsim
