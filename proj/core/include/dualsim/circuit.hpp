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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dualsim/duality.hpp"
#include "dualsim/measurement.hpp"

namespace dualsim {

// The .dc circuit format. Line-oriented; '#' starts a comment; blank lines
// are skipped. Sections appear in fixed order:
//
//   qubits INT
//   divide REAL+                      # branch weights, sum 1
//   path INT: STMT (; STMT)*          # one line per branch, indices 0..n-1
//   combine
//   measure scenario=none|renorm|ideal [eps=REAL] [shots=INT] [seed=INT]
//           [zeno=INT]                # eps only with scenario=renorm
//
// Statements name a gate followed by its parameters then its targets:
//
//   I                                 # identity on the whole register
//   X|Y|Z|H|S|T qubit
//   CNOT|CZ control target
//   RX|RY|RZ theta qubit
//   PHASE theta                       # global phase e^{i theta}
//   NEG                               # exact global sign flip
//   ORACLE idx+                       # phase flip of listed basis states
//
// Within a path, statements apply left to right (the composed unitary is
// last * ... * first). Qubit 0 is the most significant bit of a basis
// index. Rejections carry a stable E_* code plus the offending line.

struct GateStatement {
  std::string name;
  std::vector<double> params;
  std::vector<std::size_t> targets;

  bool operator==(const GateStatement&) const = default;
};

struct MeasurementSpec {
  MeasurementScenario scenario = MeasurementScenario::none();
  std::uint64_t shots = 0;  // 0: report the exact distribution only
  std::int64_t seed = 0;
  std::optional<ZenoSchedule> zeno;
};

struct Circuit {
  std::size_t qubit_count;
  BranchDistribution dist;
  std::vector<std::vector<GateStatement>> paths;
  MeasurementSpec measure;

  std::size_t dim() const { return std::size_t{1} << qubit_count; }
};

/// Parses .dc text; throws ParseError with one of E_SYNTAX, E_PROB_SUM,
/// E_NEG_WEIGHT, E_UNKNOWN_GATE, E_BAD_ARITY, E_TARGET_RANGE, E_PATH_COUNT.
Circuit parse_circuit(std::string_view text);

/// Canonical text form; parse(format_circuit(c)) reproduces c.
std::string format_circuit(const Circuit& circuit);

/// Full-register matrix for one statement.
Matrix gate_matrix(const GateStatement& stmt, std::size_t qubit_count);

/// Composes each path into one unitary of dimension 2^qubits.
std::pair<BranchDistribution, DualityGate> lower(const Circuit& circuit);

}  // namespace dualsim
