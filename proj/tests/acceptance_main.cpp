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

// End-to-end acceptance suite. Each criterion prints exactly one
// [PASS]/[FAIL] line; the process exits with the number of failures.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dualsim/circuit.hpp"
#include "dualsim/duality.hpp"
#include "dualsim/errors.hpp"
#include "dualsim/lcu.hpp"
#include "dualsim/linalg.hpp"
#include "dualsim/measurement.hpp"
#include "dualsim/report.hpp"
#include "test_util.hpp"

namespace dualsim {
namespace {

namespace fs = std::filesystem;
using testing::Rng;

int g_failures = 0;

void report(int number, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number,
              name, detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// 1. Divide/combine round trip at both levels.
void criterion_round_trip() {
  Rng rng(1001);
  double worst_pure = 0.0;
  double worst_density = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const std::size_t dim = 2 + trial % 15;
    const StateVector psi = testing::random_state(dim, rng);
    const BranchDistribution p = testing::random_distribution(n, rng);
    worst_pure = std::max(
        worst_pure, distance(combine_pure(divide_pure(psi, p)), psi));
    const DensityMatrix rho = DensityMatrix::pure(psi);
    worst_density = std::max(
        worst_density,
        frobenius_distance(combine_density(divide_density(rho, p)).matrix(),
                           rho.matrix()));
  }
  report(1, "divide/combine round trip",
         worst_pure <= 1e-10 && worst_density <= 1e-12,
         "pure " + fmt(worst_pure) + ", density " + fmt(worst_density));
}

// 2. The divider is an isometry.
void criterion_isometry() {
  Rng rng(1002);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const std::size_t dim = 2 + trial % 15;
    const DividedPureState divided =
        divide_pure(testing::random_state(dim, rng),
                    testing::random_distribution(n, rng));
    double total = 0.0;
    for (std::size_t i = 0; i < divided.branch_count(); ++i) {
      total += divided.branch(i).norm_squared();
    }
    worst = std::max(worst, std::abs(total - 1.0));
  }
  report(2, "divider isometry", worst <= 1e-10, "max defect " + fmt(worst));
}

// 3. Coherent density pipeline matches the pure one on pure inputs.
void criterion_pure_density_consistency() {
  Rng rng(1003);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const std::size_t dim = 2 + trial % 15;
    const StateVector psi = testing::random_state(dim, rng);
    const BranchDistribution p = testing::random_distribution(n, rng);
    const DualityGate g = testing::random_gate(n, dim, rng);
    const StateVector pure_out = run_pure_pipeline(psi, p, g).pure_out();
    const Matrix density_out =
        run_density_pipeline(DensityMatrix::pure(psi), p, g)
            .density_out()
            .matrix();
    worst = std::max(worst,
                     frobenius_distance(
                         density_out, outer_product(pure_out, pure_out)));
  }
  report(3, "pure/density consistency", worst <= 1e-10,
         "max distance " + fmt(worst));
}

// 4. Proper mixtures evolve as the average of their members.
void criterion_convex_average() {
  Rng rng(1004);
  double worst = 0.0;
  std::uniform_int_distribution<std::size_t> member_count(1, 4);
  std::uniform_real_distribution<double> uniform(0.05, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 2 + trial % 7;
    const std::size_t n = 1 + trial % 4;
    const std::size_t members = member_count(rng);
    std::vector<double> weights(members);
    double sum = 0.0;
    for (double& w : weights) {
      w = uniform(rng);
      sum += w;
    }
    std::vector<EnsembleMember> ensemble;
    for (double w : weights) {
      ensemble.push_back({w / sum, testing::random_state(dim, rng)});
    }
    worst = std::max(worst, convex_average_check(
                                ensemble, testing::random_distribution(n, rng),
                                testing::random_gate(n, dim, rng)));
  }
  report(4, "convex-average identity", worst <= 1e-10,
         "max distance " + fmt(worst));
}

// 5. The two density semantics disagree on (I, Z) over |+><+|.
void criterion_paradox() {
  const DensityMatrix rho = DensityMatrix::pure(testing::ket_plus());
  const BranchDistribution p({0.5, 0.5});
  const DualityGate gate({Matrix::identity(2), testing::pauli_z()});

  const DensityMatrix mixed = run_gudder_mixed_pipeline(rho, p, gate);
  const double mixed_defect =
      frobenius_distance(mixed.matrix(), 0.5 * Matrix::identity(2));

  const PipelineResult coherent = run_density_pipeline(rho, p, gate);
  const auto renormed =
      renormalize(coherent, MeasurementScenario::renorm(1e-9));
  const Matrix projector = Matrix::diagonal({1, 0});
  const double long_defect =
      renormed ? frobenius_distance(renormed->density_out().matrix(),
                                    projector)
               : 1.0;

  const double gap = renormed ? frobenius_distance(
                                    mixed.matrix(),
                                    renormed->density_out().matrix())
                              : 0.0;
  const bool ok = mixed_defect <= 1e-12 && long_defect <= 1e-12 &&
                  std::abs(gap - 1.0 / std::sqrt(2.0)) <= 1e-9;
  report(5, "paradox reproduction", ok,
         "gap " + fmt(gap) + " vs 1/sqrt(2)");
}

// 6. Measurement scenarios: null mass, renormalized norms, thresholds.
void criterion_measurement_scenarios() {
  Rng rng(1006);
  bool ok = true;
  std::string detail;
  for (int trial = 0; trial < 50 && ok; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const std::size_t dim = 2 + trial % 7;
    const PipelineResult result =
        run_pure_pipeline(testing::random_state(dim, rng),
                          testing::random_distribution(n, rng),
                          testing::random_gate(n, dim, rng));
    const OutcomeDistribution dist = measure_scenario1(result);
    if (std::abs(dist.null_probability() - (1.0 - result.efficiency())) >
        1e-12) {
      ok = false;
      detail = "scenario-1 null mass mismatch";
    }
    const auto renormed = renormalize(result, MeasurementScenario::ideal());
    if (renormed &&
        std::abs(renormed->pure_out().norm() - 1.0) > 1e-12) {
      ok = false;
      detail = "renormalized norm drift";
    }
    const auto density_renormed = renormalize(
        run_density_pipeline(
            DensityMatrix::pure(testing::random_state(dim, rng)),
            testing::random_distribution(n, rng),
            testing::random_gate(n, dim, rng)),
        MeasurementScenario::ideal());
    if (density_renormed &&
        std::abs(density_renormed->density_out().trace_real() - 1.0) > 1e-12) {
      ok = false;
      detail = "renormalized trace drift";
    }
  }
  // Complete cancellation yields NULL at every threshold.
  const PipelineResult cancelled = run_pure_pipeline(
      testing::ket_plus(), BranchDistribution({0.5, 0.5}),
      DualityGate({Matrix::identity(2), -1.0 * Matrix::identity(2)}));
  for (double eps : {0.0, 1e-12, 1e-3, 0.5, 1.0}) {
    if (renormalize(cancelled, MeasurementScenario::renorm(eps))) {
      ok = false;
      detail = "cancelled wave produced an outcome at eps=" + fmt(eps);
    }
  }
  report(6, "measurement scenarios", ok, detail);
}

// 7. One-query search: efficiency 1/n, certainty after renormalization.
void criterion_search_demo() {
  bool ok = true;
  std::string detail;
  for (std::size_t n : {2u, 4u, 8u, 16u, 32u, 64u}) {
    const std::size_t target = (5 * n) / 7 % n;
    const RunReport rep =
        run_search_demo(n, target, MeasurementScenario::renorm(1e-9));
    if (std::abs(rep.efficiency - 1.0 / double(n)) > 1e-12 ||
        std::abs(rep.distribution.probability(target) - 1.0) > 1e-12) {
      ok = false;
      detail = "n=" + std::to_string(n);
    }
  }
  const auto start = std::chrono::steady_clock::now();
  run_search_demo(64, 63, MeasurementScenario::ideal());
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (seconds >= 1.0) {
    ok = false;
    detail = "n=64 took " + fmt(seconds) + "s";
  }
  report(7, "one-query search demo", ok,
         detail.empty() ? ("n=64 in " + fmt(seconds) + "s") : detail);
}

// 8. Zeno boosting: closed form and monotonicity.
void criterion_zeno() {
  double expected = 1.0;
  for (int i = 0; i < 10; ++i) expected *= 15.0 / 16.0;  // (15/16)^10
  expected = 1.0 - expected;
  bool ok = std::abs(zeno_detection_probability(1.0 / 16, ZenoSchedule(10)) -
                     expected) <= 1e-12;
  Rng rng(1008);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::uniform_int_distribution<std::uint32_t> repeats(1, 50);
  for (int trial = 0; trial < 100 && ok; ++trial) {
    const double eta = uniform(rng);
    const std::uint32_t r = repeats(rng);
    if (zeno_detection_probability(eta, ZenoSchedule(r)) >
        zeno_detection_probability(eta, ZenoSchedule(r + 1)) + 1e-15) {
      ok = false;
    }
  }
  report(8, "zeno boosting model", ok, "");
}

// 9. Constructive positive-combination decomposition.
void criterion_decompose() {
  Rng rng(1009);
  bool ok = true;
  double worst = 0.0;
  const std::size_t dims[] = {2, 4, 8};
  for (int trial = 0; trial < 100 && ok; ++trial) {
    const std::size_t dim = dims[trial % 3];
    const Matrix a = testing::random_matrix(dim, rng);
    const UnitaryCombination comb = decompose(a);
    const double err = frobenius_distance(reconstruct(comb), a);
    worst = std::max(worst, err);
    if (err > 1e-8 || comb.size() > 4) ok = false;
    for (const WeightedUnitary& term : comb.terms()) {
      if (term.coefficient <= 0.0 || !is_unitary(term.unitary, 1e-9)) {
        ok = false;
      }
    }
    const auto [b, c] = hermitian_split(a);
    if (std::abs(comb.coefficient_sum() -
                 (operator_norm(b) + operator_norm(c))) > 1e-9) {
      ok = false;
    }
  }
  report(9, "positive-combination decomposition", ok,
         "max reconstruction error " + fmt(worst));
}

// 10. Unitaries are the extreme points of the contraction set.
void criterion_extreme_points() {
  Rng rng(1010);
  bool ok = is_in_contraction_set(Matrix::identity(4));
  for (int trial = 0; trial < 100 && ok; ++trial) {
    const std::size_t dim = 2 + trial % 5;
    const Matrix v = testing::random_unitary(dim, rng);
    const Matrix w = testing::random_unitary(dim, rng);
    if (!is_in_contraction_set(v)) ok = false;
    if (midpoint_unitarity_check(v, w)) ok = false;       // distinct pairs
    if (!midpoint_unitarity_check(v, v)) ok = false;      // identical pairs
  }
  report(10, "extreme-point witness", ok, "");
}

// 11. DSL corpus: accept/reject with the advertised codes; byte-stable
// reports.
void criterion_dsl_corpus() {
  const fs::path root(DUALSIM_CIRCUIT_DIR);
  bool ok = true;
  std::string detail;

  std::vector<fs::path> valid, invalid;
  for (const auto& entry : fs::directory_iterator(root / "valid")) {
    valid.push_back(entry.path());
  }
  for (const auto& entry : fs::directory_iterator(root / "invalid")) {
    invalid.push_back(entry.path());
  }
  std::sort(valid.begin(), valid.end());
  std::sort(invalid.begin(), invalid.end());
  if (valid.size() < 20 || invalid.size() < 10) {
    ok = false;
    detail = "corpus too small";
  }

  const auto slurp = [](const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  };

  for (const fs::path& path : valid) {
    try {
      const Circuit circuit = parse_circuit(slurp(path));
      // Reports are byte-deterministic run-to-run.
      const std::string once = emit_json(run_circuit(circuit, Backend::pure));
      const std::string twice = emit_json(run_circuit(circuit, Backend::pure));
      if (once != twice) {
        ok = false;
        detail = path.filename().string() + ": bytes differ between runs";
      }
    } catch (const Error&) {
      ok = false;
      detail = path.filename().string() + ": unexpected rejection";
    }
  }

  for (const fs::path& path : invalid) {
    const std::string stem = path.stem().string();
    std::string expected = stem.substr(0, stem.find("__"));
    std::transform(expected.begin(), expected.end(), expected.begin(),
                   [](unsigned char ch) { return std::toupper(ch); });
    try {
      parse_circuit(slurp(path));
      ok = false;
      detail = path.filename().string() + ": accepted";
    } catch (const ParseError& e) {
      if (e.code() != expected) {
        ok = false;
        detail = path.filename().string() + ": got " + e.code();
      }
    }
  }

  report(11, "DSL corpus robustness", ok,
         detail.empty() ? std::to_string(valid.size()) + " valid / " +
                              std::to_string(invalid.size()) + " invalid"
                        : detail);
}

}  // namespace
}  // namespace dualsim

int main() {
  using namespace dualsim;
  criterion_round_trip();
  criterion_isometry();
  criterion_pure_density_consistency();
  criterion_convex_average();
  criterion_paradox();
  criterion_measurement_scenarios();
  criterion_search_demo();
  criterion_zeno();
  criterion_decompose();
  criterion_extreme_points();
  criterion_dsl_corpus();
  if (g_failures == 0) {
    std::printf("all %d criteria passed\n", 11);
  } else {
    std::printf("%d criteria FAILED\n", g_failures);
  }
  return g_failures;
}
