// Copyright 2026 The coherence-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "coherence/io.hpp"

namespace coherence::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kParse = 2, kInvalid = 3, kUsage = 4 };

/// Named columns of scalar JSON cells (numbers, strings, booleans).
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

/// Numbers are printed with 9 significant digits.
std::string to_csv(const Table& table);
/// Array of objects with keys in column order.
std::string to_json(const Table& table);

/// α grid of the Rényi comparison artifact.
inline constexpr double kFig1AlphaMax = 4.0;
inline constexpr double kFig1AlphaStep = 0.02;

Table classify_table(const KrausChannel& ch, double tol);
Table monotones_table(const DensityMatrix& rho, const std::vector<std::string>& names);
Table reproduce_example();
Table reproduce_fig1();
Table reproduce_cp_threshold();
Table reproduce_qubit_formulas(std::uint64_t seed, int samples);

/// Entry point of the coherence-kit executable; args excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coherence::cli
