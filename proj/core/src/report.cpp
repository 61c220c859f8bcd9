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

#include "dualsim/report.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "dualsim/errors.hpp"
#include "dualsim/json_io.hpp"
#include "dualsim/tolerances.hpp"

namespace dualsim {

Backend backend_from_name(const std::string& name) {
  if (name == "pure") return Backend::pure;
  if (name == "density") return Backend::density;
  if (name == "mixed") return Backend::mixed;
  throw DomainError("unknown backend '" + name + "'");
}

namespace {

OutcomeDistribution all_null_distribution(std::size_t dim) {
  return OutcomeDistribution(std::vector<double>(dim, 0.0), 1.0);
}

RunReport build_report(Backend backend, const Circuit& circuit,
                       PipelineResult result) {
  const MeasurementSpec& spec = circuit.measure;
  const std::size_t dim = circuit.dim();

  RunReport report{backend,
                   circuit.qubit_count,
                   spec,
                   result.efficiency(),
                   std::nullopt,
                   std::nullopt,
                   std::nullopt,
                   std::nullopt,
                   std::nullopt,
                   false,
                   all_null_distribution(dim),
                   std::nullopt};

  if (result.kind() == PipelineResult::Kind::pure) {
    report.pure_unnormalized = result.pure_out();
  } else {
    report.density_unnormalized = result.density_out().matrix();
  }

  if (spec.scenario.mode() == ScenarioMode::no_renorm) {
    report.distribution = measure_scenario1(result);
  } else {
    const std::optional<PipelineResult> renormed =
        renormalize(result, spec.scenario);
    if (renormed) {
      if (renormed->kind() == PipelineResult::Kind::pure) {
        report.pure_renormalized = renormed->pure_out();
      } else {
        report.density_renormalized = renormed->density_out().matrix();
      }
      report.distribution = measure_scenario1(*renormed);
    } else {
      report.null_outcome = true;
    }
  }

  if (spec.shots > 0) {
    report.counts = sample(report.distribution, spec.shots, spec.seed);
  }
  if (spec.zeno) {
    const double eta = std::clamp(result.efficiency(), 0.0, 1.0);
    report.zeno_boosted_efficiency =
        zeno_detection_probability(eta, *spec.zeno);
  }
  return report;
}

}  // namespace

RunReport run_circuit(const Circuit& circuit, Backend backend,
                      const std::optional<StateVector>& input) {
  const std::size_t dim = circuit.dim();
  StateVector psi = input ? *input : StateVector::basis(dim, 0);
  if (psi.dim() != dim) {
    throw DomainError("run_circuit: input state dimension mismatch");
  }
  if (!psi.is_normalized(TOL_STRICT)) {
    throw DomainError("run_circuit: input state must be normalized");
  }

  const auto [dist, gate] = lower(circuit);

  switch (backend) {
    case Backend::pure:
      return build_report(backend, circuit,
                          run_pure_pipeline(psi, dist, gate));
    case Backend::density:
      return build_report(
          backend, circuit,
          run_density_pipeline(DensityMatrix::pure(psi), dist, gate));
    case Backend::mixed: {
      if (circuit.measure.scenario.mode() == ScenarioMode::renorm_ideal) {
        throw ParseError("E_BACKEND_SCENARIO", 0,
                         "mixed backend supports scenario none or renorm");
      }
      DensityMatrix out =
          run_gudder_mixed_pipeline(DensityMatrix::pure(psi), dist, gate);
      return build_report(backend, circuit,
                          PipelineResult::from_density(std::move(out)));
    }
  }
  throw DomainError("run_circuit: unreachable backend");
}

RunReport run_search_demo(std::size_t n, std::size_t target,
                          const MeasurementScenario& scenario,
                          const std::optional<ZenoSchedule>& zeno) {
  if (n < 2 || n > MAX_DIM || (n & (n - 1)) != 0) {
    throw DomainError("run_search_demo: n must be a power of 2 in [2, 64]");
  }
  if (target >= n) {
    throw DomainError("run_search_demo: target must be below n");
  }
  std::size_t qubits = 0;
  while ((std::size_t{1} << qubits) < n) ++qubits;

  // Two paths: identity, and the negated phase oracle. Their average is
  // the projector onto |target>.
  Circuit circuit{
      qubits,
      BranchDistribution({0.5, 0.5}),
      {{GateStatement{"I", {}, {}}},
       {GateStatement{"NEG", {}, {}}, GateStatement{"ORACLE", {}, {target}}}},
      MeasurementSpec{scenario, 0, 0, zeno}};

  return run_circuit(circuit, Backend::pure,
                     StateVector::uniform_superposition(n));
}

namespace {

void append_scenario(std::string& out, const MeasurementScenario& scenario) {
  out += "\"scenario\": {\"mode\": ";
  switch (scenario.mode()) {
    case ScenarioMode::no_renorm:
      out += "\"none\"}";
      return;
    case ScenarioMode::renorm_threshold:
      out += "\"renorm\", \"epsilon\": " + json_number(scenario.epsilon()) +
             "}";
      return;
    case ScenarioMode::renorm_ideal:
      out += "\"ideal\"}";
      return;
  }
}

const char* backend_name(Backend backend) {
  switch (backend) {
    case Backend::pure:
      return "pure";
    case Backend::density:
      return "density";
    case Backend::mixed:
      return "mixed";
  }
  return "?";
}

}  // namespace

std::string emit_json(const RunReport& report) {
  std::string out = "{\n";
  out += "  \"backend\": \"" + std::string(backend_name(report.backend)) +
         "\",\n";
  out += "  \"qubits\": " + std::to_string(report.qubit_count) + ",\n";
  out += "  ";
  append_scenario(out, report.measure.scenario);
  out += ",\n";
  out += "  \"shots\": " + std::to_string(report.measure.shots) + ",\n";
  out += "  \"seed\": " + std::to_string(report.measure.seed) + ",\n";
  if (report.measure.zeno) {
    out += "  \"zeno\": " + std::to_string(report.measure.zeno->repeats) +
           ",\n";
  }
  out += "  \"efficiency\": " + json_number(report.efficiency) + ",\n";
  if (report.zeno_boosted_efficiency) {
    out += "  \"zeno_boosted_efficiency\": " +
           json_number(*report.zeno_boosted_efficiency) + ",\n";
  }

  out += "  \"output\": {";
  if (report.pure_unnormalized) {
    out += "\"kind\": \"pure\", \"unnormalized\": " +
           state_to_json(*report.pure_unnormalized);
    if (report.measure.scenario.mode() != ScenarioMode::no_renorm) {
      out += ", \"renormalized\": ";
      out += report.pure_renormalized ? state_to_json(*report.pure_renormalized)
                                      : "null";
    }
  } else {
    out += "\"kind\": \"density\", \"unnormalized\": " +
           matrix_to_json(*report.density_unnormalized);
    if (report.measure.scenario.mode() != ScenarioMode::no_renorm) {
      out += ", \"renormalized\": ";
      out += report.density_renormalized
                 ? matrix_to_json(*report.density_renormalized)
                 : "null";
    }
  }
  out += "},\n";

  if (report.null_outcome) {
    out += "  \"outcome\": null,\n";
  }

  out += "  \"distribution\": {\"probabilities\": {";
  for (std::size_t k = 0; k < report.distribution.dim(); ++k) {
    if (k != 0) out += ", ";
    out += "\"" + std::to_string(k) +
           "\": " + json_number(report.distribution.probability(k));
  }
  out += "}, \"null_probability\": " +
         json_number(report.distribution.null_probability()) + "}";

  if (report.counts) {
    out += ",\n  \"counts\": {";
    for (std::size_t k = 0; k < report.counts->counts.size(); ++k) {
      if (k != 0) out += ", ";
      out += "\"" + std::to_string(k) +
             "\": " + std::to_string(report.counts->counts[k]);
    }
    out += ", \"null\": " + std::to_string(report.counts->null_count) + "}";
  }
  out += "\n}\n";
  return out;
}

}  // namespace dualsim
