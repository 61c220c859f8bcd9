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

#include <iosfwd>

namespace dualsim {

/// Entry point behind the `dualsim` binary; split out so tests can drive
/// it in-process. Subcommands:
///
///   run <file.dc> [--backend pure|density|mixed] [--input state.json]
///       [--out report.json]
///   decompose <matrix.json> [--tol 1e-8]
///   search --n N --target T [--scenario none|renorm|ideal] [--eps E]
///       [--zeno R]
///
/// Exit codes: 0 success, 1 usage error, 2 parse/validation error (the
/// message names the E_* code and line), 3 numerical failure.
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace dualsim
