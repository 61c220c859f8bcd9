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

#include "dualsim/json_io.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

#include "dualsim/errors.hpp"

namespace dualsim {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text, const char* what) {
  json parsed = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded()) {
    throw ParseError("E_SYNTAX", 0, std::string(what) + ": malformed JSON");
  }
  return parsed;
}

Complex entry_to_complex(const json& pair, const char* what) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
      !pair[1].is_number()) {
    throw ParseError("E_SYNTAX", 0,
                     std::string(what) + ": entries must be [re, im] pairs");
  }
  return Complex(pair[0].get<double>(), pair[1].get<double>());
}

}  // namespace

Matrix parse_matrix_json(const std::string& text) {
  const json parsed = parse_or_throw(text, "matrix");
  if (!parsed.is_object() || !parsed.contains("rows") ||
      !parsed.contains("cols") || !parsed.contains("entries")) {
    throw ParseError("E_SYNTAX", 0,
                     "matrix: expected {rows, cols, entries} object");
  }
  if (!parsed["rows"].is_number_unsigned() ||
      !parsed["cols"].is_number_unsigned() || !parsed["entries"].is_array()) {
    throw ParseError("E_SYNTAX", 0, "matrix: bad field types");
  }
  const std::size_t rows = parsed["rows"].get<std::size_t>();
  const std::size_t cols = parsed["cols"].get<std::size_t>();
  const json& entries = parsed["entries"];
  if (rows == 0 || cols == 0 || entries.size() != rows * cols) {
    throw ParseError("E_SYNTAX", 0,
                     "matrix: entries length must equal rows*cols");
  }
  std::vector<Complex> values;
  values.reserve(entries.size());
  for (const json& pair : entries) {
    values.push_back(entry_to_complex(pair, "matrix"));
  }
  try {
    return Matrix(rows, cols, std::move(values));
  } catch (const Error& e) {
    throw ParseError("E_SYNTAX", 0, std::string("matrix: ") + e.what());
  }
}

StateVector parse_state_json(const std::string& text) {
  const json parsed = parse_or_throw(text, "state");
  if (!parsed.is_array() || parsed.empty()) {
    throw ParseError("E_SYNTAX", 0,
                     "state: expected a non-empty array of [re, im] pairs");
  }
  std::vector<Complex> amplitudes;
  amplitudes.reserve(parsed.size());
  for (const json& pair : parsed) {
    amplitudes.push_back(entry_to_complex(pair, "state"));
  }
  try {
    return StateVector(std::move(amplitudes));
  } catch (const Error& e) {
    throw ParseError("E_SYNTAX", 0, std::string("state: ") + e.what());
  }
}

std::string json_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string matrix_to_json(const Matrix& m) {
  std::string out = "{\"rows\": " + std::to_string(m.rows()) +
                    ", \"cols\": " + std::to_string(m.cols()) +
                    ", \"entries\": [";
  for (std::size_t i = 0; i < m.entries().size(); ++i) {
    if (i != 0) out += ", ";
    const Complex& v = m.entries()[i];
    out += "[" + json_number(v.real()) + ", " + json_number(v.imag()) + "]";
  }
  out += "]}";
  return out;
}

std::string state_to_json(const StateVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i != 0) out += ", ";
    out += "[" + json_number(v[i].real()) + ", " + json_number(v[i].imag()) +
           "]";
  }
  out += "]";
  return out;
}

std::string combination_to_json(const UnitaryCombination& combination) {
  std::string out = "[";
  for (std::size_t i = 0; i < combination.terms().size(); ++i) {
    if (i != 0) out += ", ";
    const WeightedUnitary& term = combination.terms()[i];
    out += "{\"coefficient\": " + json_number(term.coefficient) +
           ", \"unitary\": " + matrix_to_json(term.unitary) + "}";
  }
  out += "]";
  return out;
}

}  // namespace dualsim
