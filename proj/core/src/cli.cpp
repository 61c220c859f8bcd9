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

#include "dualsim/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dualsim/errors.hpp"
#include "dualsim/json_io.hpp"
#include "dualsim/lcu.hpp"
#include "dualsim/report.hpp"
#include "dualsim/tolerances.hpp"

namespace dualsim {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

MeasurementScenario scenario_from_flags(const std::string& name, double eps) {
  if (name == "none") return MeasurementScenario::none();
  if (name == "ideal") return MeasurementScenario::ideal();
  return MeasurementScenario::renorm(eps);
}

int run_command(const std::string& file, const std::string& backend_name,
                const std::string& input_path, const std::string& out_path,
                std::ostream& out) {
  Circuit circuit = parse_circuit(read_file(file));
  std::optional<StateVector> input;
  if (!input_path.empty()) {
    input = parse_state_json(read_file(input_path));
  }
  const RunReport report =
      run_circuit(circuit, backend_from_name(backend_name), input);
  const std::string json = emit_json(report);
  if (!out_path.empty()) {
    std::ofstream sink(out_path, std::ios::binary);
    if (!sink) throw DomainError("cannot write file '" + out_path + "'");
    sink << json;
  } else {
    out << json;
  }
  return 0;
}

int decompose_command(const std::string& file, double tol, std::ostream& out) {
  const Matrix a = parse_matrix_json(read_file(file));
  const UnitaryCombination combination = decompose(a);
  const double error = frobenius_distance(reconstruct(combination), a);
  if (error > tol) {
    throw NumericalError("decompose: reconstruction error " +
                         json_number(error) + " exceeds tolerance " +
                         json_number(tol));
  }
  out << combination_to_json(combination) << "\n";
  return 0;
}

int search_command(std::size_t n, std::size_t target,
                   const std::string& scenario_name, double eps,
                   unsigned zeno_repeats, std::ostream& out) {
  std::optional<ZenoSchedule> zeno;
  if (zeno_repeats > 0) zeno = ZenoSchedule(zeno_repeats);
  const RunReport report = run_search_demo(
      n, target, scenario_from_flags(scenario_name, eps), zeno);
  out << emit_json(report);
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"duality-computer simulator"};
  app.require_subcommand(1);

  std::string run_file, run_backend = "pure", run_input, run_out;
  CLI::App* run = app.add_subcommand("run", "Execute a .dc circuit file");
  run->add_option("file", run_file, "circuit file")->required();
  run->add_option("--backend", run_backend, "execution semantics")
      ->check(CLI::IsMember({"pure", "density", "mixed"}));
  run->add_option("--input", run_input, "initial state JSON");
  run->add_option("--out", run_out, "write the report here instead of stdout");

  std::string decompose_file;
  double decompose_tol = TOL_RECON;
  CLI::App* dec = app.add_subcommand(
      "decompose", "Write a matrix as a positive combination of unitaries");
  dec->add_option("matrix", decompose_file, "matrix JSON")->required();
  dec->add_option("--tol", decompose_tol, "max reconstruction error");

  std::size_t search_n = 0, search_target = 0;
  std::string search_scenario = "renorm";
  double search_eps = 0.0;
  unsigned search_zeno = 0;
  CLI::App* search =
      app.add_subcommand("search", "One-query search demo circuit");
  search->add_option("--n", search_n, "database size (power of 2, <= 64)")
      ->required();
  search->add_option("--target", search_target, "marked index")->required();
  search->add_option("--scenario", search_scenario, "measurement scenario")
      ->check(CLI::IsMember({"none", "renorm", "ideal"}));
  search->add_option("--eps", search_eps, "renorm threshold");
  search->add_option("--zeno", search_zeno, "repeated-measurement count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (run->parsed()) {
      return run_command(run_file, run_backend, run_input, run_out, out);
    }
    if (dec->parsed()) {
      return decompose_command(decompose_file, decompose_tol, out);
    }
    return search_command(search_n, search_target, search_scenario,
                          search_eps, search_zeno, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace dualsim
