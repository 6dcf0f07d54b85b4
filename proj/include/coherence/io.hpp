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

#include <string>

#include "json.hpp"

#include "coherence/channels.hpp"
#include "coherence/errors.hpp"
#include "coherence/monotones.hpp"
#include "coherence/states.hpp"
#include "coherence/transforms.hpp"

namespace coherence {

using Json = nlohmann::json;

/// Malformed JSON or a document missing required fields.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Matrices are row-major nested arrays of [re, im] pairs.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, int rows, int cols);

/// {"dim", "mat"}.
Json state_to_json(const DensityMatrix& rho);
/// {"dim", "amps"}.
Json state_to_json(const PureState& psi);
/// Accepts either form; pure states become |ψ⟩⟨ψ|.
DensityMatrix density_from_json(const Json& j);
/// Requires "amps".
PureState pure_from_json(const Json& j);
bool is_pure_json(const Json& j);

/// {"din", "dout", "kraus"}.
Json channel_to_json(const KrausMap& map);
Json channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const Json& j);

/// {name, value, method[, witness]}; infinite values become the string "inf".
Json report_to_json(const MonotoneReport& report, bool with_witness = false);
/// {verdict[, witness][, violation][, blocks]}.
Json decision_to_json(const TransformDecision& decision, bool with_witness = true);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace coherence
