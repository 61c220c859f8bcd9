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

#include "dualsim/lcu.hpp"
#include "dualsim/matrix.hpp"

namespace dualsim {

// Wire formats. Inputs are parsed leniently (any standard JSON layout);
// outputs are emitted with a fixed key order and floats printed to 17
// significant digits so that reports are byte-deterministic.
//
//   matrix: {"rows": R, "cols": C, "entries": [[re, im], ...]}  (row-major)
//   state:  [[re, im], ...]                                     (amplitudes)

/// Parses the matrix wire format; throws ParseError on malformed input.
Matrix parse_matrix_json(const std::string& text);

/// Parses the state wire format; throws ParseError on malformed input.
StateVector parse_state_json(const std::string& text);

/// Formats a double with 17 significant digits (round-trip exact).
std::string json_number(double value);

/// Matrix in the wire format above, deterministic bytes.
std::string matrix_to_json(const Matrix& m);

/// Amplitude array in the wire format above, deterministic bytes.
std::string state_to_json(const StateVector& v);

/// Array of {"coefficient": c, "unitary": <matrix>} terms.
std::string combination_to_json(const UnitaryCombination& combination);

}  // namespace dualsim
