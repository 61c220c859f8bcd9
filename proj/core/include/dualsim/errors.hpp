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

#include <stdexcept>
#include <string>

namespace dualsim {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch between operands (rows/cols/branch counts).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value violates a precondition or type invariant (non-finite entry,
/// weight out of range, non-Hermitian input, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative routine failed to converge or a result left its numerical
/// contract (materially negative eigenvalue, efficiency above one, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Rejection of a circuit file or other structured input. `code` is one of
/// the stable E_* identifiers; `line` is 1-based (0 when no source line
/// applies).
class ParseError : public Error {
 public:
  ParseError(std::string code, int line, const std::string& detail)
      : Error(format(code, line, detail)), code_(std::move(code)), line_(line) {}

  const std::string& code() const { return code_; }
  int line() const { return line_; }

 private:
  static std::string format(const std::string& code, int line,
                            const std::string& detail) {
    if (line > 0) {
      return code + " (line " + std::to_string(line) + "): " + detail;
    }
    return code + ": " + detail;
  }

  std::string code_;
  int line_;
};

}  // namespace dualsim
