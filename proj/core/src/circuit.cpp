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

#include "dualsim/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <utility>

#include "dualsim/errors.hpp"
#include "dualsim/tolerances.hpp"

namespace dualsim {

namespace {

struct GateArity {
  std::size_t params;
  std::size_t targets;   // fixed target count
  bool variadic_targets; // ORACLE: 1+ basis indices
};

const std::map<std::string, GateArity>& gate_table() {
  static const std::map<std::string, GateArity> table = {
      {"I", {0, 0, false}},     {"X", {0, 1, false}},
      {"Y", {0, 1, false}},     {"Z", {0, 1, false}},
      {"H", {0, 1, false}},     {"S", {0, 1, false}},
      {"T", {0, 1, false}},     {"CNOT", {0, 2, false}},
      {"CZ", {0, 2, false}},    {"RX", {1, 1, false}},
      {"RY", {1, 1, false}},    {"RZ", {1, 1, false}},
      {"PHASE", {1, 0, false}}, {"NEG", {0, 0, false}},
      {"ORACLE", {0, 1, true}},
  };
  return table;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t') {
      if (!current.empty()) tokens.push_back(std::exchange(current, {}));
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::optional<double> parse_real(const std::string& token) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end != begin + token.size() || token.empty() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::optional<std::int64_t> parse_int(const std::string& token) {
  if (token.empty()) return std::nullopt;
  const char* begin = token.c_str();
  char* end = nullptr;
  const long long value = std::strtoll(begin, &end, 10);
  if (end != begin + token.size()) return std::nullopt;
  return value;
}

std::optional<std::size_t> parse_index(const std::string& token) {
  const auto value = parse_int(token);
  if (!value || *value < 0) return std::nullopt;
  return static_cast<std::size_t>(*value);
}

[[noreturn]] void fail(const char* code, int line, const std::string& detail) {
  throw ParseError(code, line, detail);
}

// One logical line of the file after comment stripping.
struct Line {
  int number;
  std::string text;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    ++number;
    if (const std::size_t hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t')) {
      line.pop_back();
    }
    std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string::npos) {
      lines.push_back({number, line.substr(first)});
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

GateStatement parse_statement(const std::string& text, std::size_t qubits,
                              int line) {
  const std::vector<std::string> tokens = tokenize(text);
  if (tokens.empty()) fail("E_SYNTAX", line, "empty gate statement");

  GateStatement stmt;
  stmt.name = tokens[0];
  const auto entry = gate_table().find(stmt.name);
  if (entry == gate_table().end()) {
    fail("E_UNKNOWN_GATE", line, "unknown gate '" + stmt.name + "'");
  }
  const GateArity& arity = entry->second;
  const std::size_t args = tokens.size() - 1;

  // On a one-qubit register the single target of X/Y/Z/H/S/T/RX/RY/RZ is
  // unambiguous and may be omitted.
  const bool target_omitted = !arity.variadic_targets && arity.targets == 1 &&
                              qubits == 1 && args == arity.params;
  if (arity.variadic_targets) {
    if (args < 1) {
      fail("E_BAD_ARITY", line, stmt.name + " needs at least one basis index");
    }
  } else if (args != arity.params + arity.targets && !target_omitted) {
    fail("E_BAD_ARITY", line,
         stmt.name + " expects " + std::to_string(arity.params) +
             " parameter(s) and " + std::to_string(arity.targets) +
             " target(s)");
  }

  std::size_t next = 1;
  for (std::size_t i = 0; i < arity.params; ++i, ++next) {
    const auto value = parse_real(tokens[next]);
    if (!value) fail("E_SYNTAX", line, "bad parameter '" + tokens[next] + "'");
    stmt.params.push_back(*value);
  }
  for (; next < tokens.size(); ++next) {
    const auto index = parse_index(tokens[next]);
    if (!index) fail("E_SYNTAX", line, "bad target '" + tokens[next] + "'");
    stmt.targets.push_back(*index);
  }
  if (target_omitted) stmt.targets.push_back(0);

  const std::size_t limit =
      arity.variadic_targets ? (std::size_t{1} << qubits) : qubits;
  for (std::size_t target : stmt.targets) {
    if (target >= limit) {
      fail("E_TARGET_RANGE", line,
           stmt.name + " target " + std::to_string(target) + " out of range");
    }
  }
  if (stmt.name == "CNOT" || stmt.name == "CZ") {
    if (stmt.targets[0] == stmt.targets[1]) {
      fail("E_TARGET_RANGE", line,
           stmt.name + " control and target must differ");
    }
  }
  return stmt;
}

MeasurementSpec parse_measure(const std::vector<std::string>& tokens,
                              int line) {
  // Grammar order: scenario, then optional eps, shots, seed, zeno.
  if (tokens.empty() || tokens[0].rfind("scenario=", 0) != 0) {
    fail("E_SYNTAX", line, "measure requires scenario=none|renorm|ideal");
  }
  const std::string scenario_value = tokens[0].substr(9);

  std::map<std::string, std::string> values;
  static const std::vector<std::string> order = {"eps", "shots", "seed",
                                                 "zeno"};
  std::size_t order_pos = 0;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const std::size_t eq = tokens[i].find('=');
    if (eq == std::string::npos) {
      fail("E_SYNTAX", line, "expected key=value, got '" + tokens[i] + "'");
    }
    const std::string key = tokens[i].substr(0, eq);
    while (order_pos < order.size() && order[order_pos] != key) ++order_pos;
    if (order_pos == order.size()) {
      fail("E_SYNTAX", line,
           "unknown or out-of-order measure key '" + key + "'");
    }
    values[key] = tokens[i].substr(eq + 1);
    ++order_pos;
  }

  MeasurementSpec spec;
  if (scenario_value == "none") {
    spec.scenario = MeasurementScenario::none();
    if (values.count("eps")) {
      fail("E_SYNTAX", line, "eps is only valid with scenario=renorm");
    }
  } else if (scenario_value == "ideal") {
    spec.scenario = MeasurementScenario::ideal();
    if (values.count("eps")) {
      fail("E_SYNTAX", line, "eps is only valid with scenario=renorm");
    }
  } else if (scenario_value == "renorm") {
    double eps = 0.0;
    if (values.count("eps")) {
      const auto value = parse_real(values["eps"]);
      if (!value || *value < 0.0) {
        fail("E_SYNTAX", line, "eps must be a nonnegative real");
      }
      eps = *value;
    }
    spec.scenario = MeasurementScenario::renorm(eps);
  } else {
    fail("E_SYNTAX", line, "unknown scenario '" + scenario_value + "'");
  }

  if (values.count("shots")) {
    const auto value = parse_int(values["shots"]);
    if (!value || *value < 0) fail("E_SYNTAX", line, "shots must be >= 0");
    spec.shots = static_cast<std::uint64_t>(*value);
  }
  if (values.count("seed")) {
    const auto value = parse_int(values["seed"]);
    if (!value) fail("E_SYNTAX", line, "seed must be an integer");
    spec.seed = *value;
  }
  if (values.count("zeno")) {
    const auto value = parse_int(values["zeno"]);
    if (!value || *value < 1) fail("E_SYNTAX", line, "zeno must be >= 1");
    spec.zeno = ZenoSchedule(static_cast<std::uint32_t>(*value));
  }
  return spec;
}

std::string format_real(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  const std::vector<Line> lines = significant_lines(text);
  std::size_t cursor = 0;
  const auto next_line = [&]() -> const Line& {
    if (cursor >= lines.size()) {
      fail("E_SYNTAX", lines.empty() ? 1 : lines.back().number,
           "unexpected end of file");
    }
    return lines[cursor++];
  };

  // qubits INT
  const Line& qubits_line = next_line();
  std::vector<std::string> tokens = tokenize(qubits_line.text);
  if (tokens.size() != 2 || tokens[0] != "qubits") {
    fail("E_SYNTAX", qubits_line.number, "expected 'qubits INT'");
  }
  const auto qubits = parse_index(tokens[1]);
  if (!qubits || *qubits < 1) {
    fail("E_SYNTAX", qubits_line.number, "qubit count must be >= 1");
  }
  if (*qubits > MAX_QUBITS) {
    fail("E_SYNTAX", qubits_line.number,
         "qubit count exceeds cap of " + std::to_string(MAX_QUBITS));
  }

  // divide REAL+
  const Line& divide_line = next_line();
  tokens = tokenize(divide_line.text);
  if (tokens.empty() || tokens[0] != "divide") {
    fail("E_SYNTAX", divide_line.number, "expected 'divide REAL+'");
  }
  if (tokens.size() < 2) {
    fail("E_SYNTAX", divide_line.number, "divide needs at least one weight");
  }
  std::vector<double> weights;
  double weight_sum = 0.0;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const auto value = parse_real(tokens[i]);
    if (!value) {
      fail("E_SYNTAX", divide_line.number, "bad weight '" + tokens[i] + "'");
    }
    if (*value < 0.0) {
      fail("E_NEG_WEIGHT", divide_line.number, "weights must be >= 0");
    }
    weights.push_back(*value);
    weight_sum += *value;
  }
  if (weights.size() > MAX_BRANCHES) {
    fail("E_SYNTAX", divide_line.number,
         "branch count exceeds cap of " + std::to_string(MAX_BRANCHES));
  }
  if (std::abs(weight_sum - 1.0) > TOL_PROB_SUM) {
    fail("E_PROB_SUM", divide_line.number, "divide weights must sum to 1");
  }
  const std::size_t n_paths = weights.size();

  // path INT: stmt (; stmt)*   -- until 'combine'
  std::vector<std::optional<std::vector<GateStatement>>> paths(n_paths);
  bool saw_combine = false;
  while (cursor < lines.size()) {
    const Line& line = lines[cursor];
    tokens = tokenize(line.text);
    if (!tokens.empty() && tokens[0] == "combine") {
      if (tokens.size() != 1) {
        fail("E_SYNTAX", line.number, "combine takes no arguments");
      }
      saw_combine = true;
      ++cursor;
      break;
    }
    if (tokens.empty() || tokens[0] != "path") {
      fail("E_SYNTAX", line.number, "expected 'path INT:' or 'combine'");
    }
    const std::size_t colon = line.text.find(':');
    if (colon == std::string::npos) {
      fail("E_SYNTAX", line.number, "path line is missing ':'");
    }
    const std::vector<std::string> head =
        tokenize(line.text.substr(0, colon));
    if (head.size() != 2) {
      fail("E_SYNTAX", line.number, "expected 'path INT:'");
    }
    const auto index = parse_index(head[1]);
    if (!index) fail("E_SYNTAX", line.number, "bad path index '" + head[1] + "'");
    if (*index >= n_paths) {
      fail("E_PATH_COUNT", line.number,
           "path index " + std::to_string(*index) + " outside 0.." +
               std::to_string(n_paths - 1));
    }
    if (paths[*index]) {
      fail("E_PATH_COUNT", line.number,
           "duplicate path index " + std::to_string(*index));
    }

    std::vector<GateStatement> statements;
    std::stringstream body(line.text.substr(colon + 1));
    std::string piece;
    while (std::getline(body, piece, ';')) {
      statements.push_back(parse_statement(piece, *qubits, line.number));
    }
    if (statements.empty()) {
      fail("E_SYNTAX", line.number, "path needs at least one statement");
    }
    paths[*index] = std::move(statements);
    ++cursor;
  }
  if (!saw_combine) {
    fail("E_SYNTAX", lines.empty() ? 1 : lines.back().number,
         "missing 'combine'");
  }
  for (std::size_t i = 0; i < n_paths; ++i) {
    if (!paths[i]) {
      fail("E_PATH_COUNT", lines.back().number,
           "missing path " + std::to_string(i));
    }
  }

  // measure kvpairs
  const Line& measure_line = next_line();
  tokens = tokenize(measure_line.text);
  if (tokens.empty() || tokens[0] != "measure") {
    fail("E_SYNTAX", measure_line.number, "expected 'measure ...'");
  }
  tokens.erase(tokens.begin());
  MeasurementSpec spec = parse_measure(tokens, measure_line.number);

  if (cursor < lines.size()) {
    fail("E_SYNTAX", lines[cursor].number, "unexpected content after measure");
  }

  std::vector<std::vector<GateStatement>> path_list;
  path_list.reserve(n_paths);
  for (auto& p : paths) path_list.push_back(std::move(*p));
  return Circuit{*qubits, BranchDistribution(std::move(weights)),
                 std::move(path_list), std::move(spec)};
}

std::string format_circuit(const Circuit& circuit) {
  std::string out = "qubits " + std::to_string(circuit.qubit_count) + "\n";
  out += "divide";
  for (double w : circuit.dist.weights()) out += " " + format_real(w);
  out += "\n";
  for (std::size_t i = 0; i < circuit.paths.size(); ++i) {
    out += "path " + std::to_string(i) + ":";
    for (std::size_t s = 0; s < circuit.paths[i].size(); ++s) {
      const GateStatement& stmt = circuit.paths[i][s];
      out += (s == 0 ? " " : "; ") + stmt.name;
      for (double param : stmt.params) out += " " + format_real(param);
      for (std::size_t target : stmt.targets) {
        out += " " + std::to_string(target);
      }
    }
    out += "\n";
  }
  out += "combine\n";
  out += "measure scenario=";
  switch (circuit.measure.scenario.mode()) {
    case ScenarioMode::no_renorm:
      out += "none";
      break;
    case ScenarioMode::renorm_threshold:
      out += "renorm eps=" + format_real(circuit.measure.scenario.epsilon());
      break;
    case ScenarioMode::renorm_ideal:
      out += "ideal";
      break;
  }
  if (circuit.measure.shots != 0) {
    out += " shots=" + std::to_string(circuit.measure.shots);
  }
  if (circuit.measure.seed != 0) {
    out += " seed=" + std::to_string(circuit.measure.seed);
  }
  if (circuit.measure.zeno) {
    out += " zeno=" + std::to_string(circuit.measure.zeno->repeats);
  }
  out += "\n";
  return out;
}

namespace {

Matrix single_qubit(const Matrix& gate, std::size_t qubit_count,
                    std::size_t target) {
  // Qubit 0 is the most significant bit.
  Matrix full = Matrix::identity(1);
  for (std::size_t q = 0; q < qubit_count; ++q) {
    full = tensor_product(full, q == target ? gate : Matrix::identity(2));
  }
  return full;
}

Matrix controlled_gate(std::size_t qubit_count, std::size_t control,
                       std::size_t target, bool is_cnot) {
  const std::size_t dim = std::size_t{1} << qubit_count;
  const std::size_t control_bit = std::size_t{1}
                                  << (qubit_count - 1 - control);
  const std::size_t target_bit = std::size_t{1} << (qubit_count - 1 - target);
  Matrix full(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    if ((col & control_bit) == 0) {
      full(col, col) = 1.0;
    } else if (is_cnot) {
      full(col ^ target_bit, col) = 1.0;
    } else {  // CZ
      full(col, col) = (col & target_bit) ? -1.0 : 1.0;
    }
  }
  return full;
}

}  // namespace

Matrix gate_matrix(const GateStatement& stmt, std::size_t qubit_count) {
  const std::size_t dim = std::size_t{1} << qubit_count;
  const Complex i(0.0, 1.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  if (stmt.name == "I") return Matrix::identity(dim);
  if (stmt.name == "NEG") return -1.0 * Matrix::identity(dim);
  if (stmt.name == "PHASE") {
    return std::polar(1.0, stmt.params[0]) * Matrix::identity(dim);
  }
  if (stmt.name == "ORACLE") {
    Matrix full = Matrix::identity(dim);
    for (std::size_t marked : stmt.targets) full(marked, marked) = -1.0;
    return full;
  }
  if (stmt.name == "CNOT" || stmt.name == "CZ") {
    return controlled_gate(qubit_count, stmt.targets[0], stmt.targets[1],
                           stmt.name == "CNOT");
  }

  Matrix g(2, 2);
  if (stmt.name == "X") {
    g(0, 1) = 1.0;
    g(1, 0) = 1.0;
  } else if (stmt.name == "Y") {
    g(0, 1) = -i;
    g(1, 0) = i;
  } else if (stmt.name == "Z") {
    g(0, 0) = 1.0;
    g(1, 1) = -1.0;
  } else if (stmt.name == "H") {
    g(0, 0) = inv_sqrt2;
    g(0, 1) = inv_sqrt2;
    g(1, 0) = inv_sqrt2;
    g(1, 1) = -inv_sqrt2;
  } else if (stmt.name == "S") {
    g(0, 0) = 1.0;
    g(1, 1) = i;
  } else if (stmt.name == "T") {
    g(0, 0) = 1.0;
    g(1, 1) = std::polar(1.0, std::numbers::pi / 4.0);
  } else if (stmt.name == "RX") {
    const double half = 0.5 * stmt.params[0];
    g(0, 0) = std::cos(half);
    g(0, 1) = -i * std::sin(half);
    g(1, 0) = -i * std::sin(half);
    g(1, 1) = std::cos(half);
  } else if (stmt.name == "RY") {
    const double half = 0.5 * stmt.params[0];
    g(0, 0) = std::cos(half);
    g(0, 1) = -std::sin(half);
    g(1, 0) = std::sin(half);
    g(1, 1) = std::cos(half);
  } else if (stmt.name == "RZ") {
    const double half = 0.5 * stmt.params[0];
    g(0, 0) = std::polar(1.0, -half);
    g(1, 1) = std::polar(1.0, half);
  } else {
    throw DomainError("gate_matrix: unknown gate '" + stmt.name + "'");
  }
  return single_qubit(g, qubit_count, stmt.targets[0]);
}

std::pair<BranchDistribution, DualityGate> lower(const Circuit& circuit) {
  std::vector<Matrix> unitaries;
  unitaries.reserve(circuit.paths.size());
  for (const std::vector<GateStatement>& path : circuit.paths) {
    Matrix composed = Matrix::identity(circuit.dim());
    // Source order is application order: U = last * ... * first.
    for (const GateStatement& stmt : path) {
      composed = matmul(gate_matrix(stmt, circuit.qubit_count), composed);
    }
    unitaries.push_back(std::move(composed));
  }
  return {circuit.dist, DualityGate(std::move(unitaries))};
}

}  // namespace dualsim
