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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coherence/channels.hpp"
#include "coherence/numerics.hpp"
#include "coherence/states.hpp"

namespace coherence {

/// Why a transformation was refused: a monotone that would increase
/// (monotone, lhs = input value, rhs = target value) or the first partial
/// sum index k (1-based) at which majorization fails.
struct ViolationRecord {
  std::string monotone;
  double lhs = 0.0;
  double rhs = 0.0;
  int failing_k = 0;
};

/// Index block of the source support mapped onto the target support.
struct PioBlock {
  std::vector<int> source;  // source[l] pairs with target[l]
  std::vector<int> target;
  double weight = 0.0;  // c_B² in ψ = Σ_B c_B U_B φ
};

struct TransformDecision {
  bool verdict = false;
  std::optional<KrausChannel> witness;
  std::optional<ViolationRecord> violation;
  std::vector<PioBlock> blocks;  // pio_pure_decide only
};

struct MajorizationResult {
  bool holds = false;
  int failing_k = 0;  // 1-based; 0 when holds
};

/// source ≺ target: Σ_{i≤k} source_i ≤ Σ_{i≤k} target_i for every k, with
/// zero padding and 1e-12 slack.
MajorizationResult majorizes(const SchmidtVector& target, const SchmidtVector& source);

/// Doubly stochastic D with source = D·target, both sorted nonincreasing and
/// of equal length, built from T-transforms. Throws PreconditionError
/// unless source ≺ target.
RealMatrix majorization_matrix(const RealVector& source, const RealVector& target);

/// Pure states are compared after zero padding to a common dimension; the
/// witness acts on that dimension.
TransformDecision sio_pure_decide(const PureState& psi, const PureState& phi);
KrausChannel sio_pure_construct(const PureState& psi, const PureState& phi);

/// τ(ψ) ≺ Σ_i p_i τ(φ_i). Throws PreconditionError on invalid weights.
bool multi_outcome_decide(const PureState& psi, const std::vector<std::pair<double, PureState>>& ensemble);

/// min_k Σ_{i≥k} ψ_i↓ / Σ_{i≥k} φ_i↓.
double max_conversion_probability(const PureState& psi, const PureState& phi);

/// Qubit with populations p to the pure qudit Σ √q_y |y⟩. Throws
/// PreconditionError when q has fewer than three entries or a zero entry.
TransformDecision mio_qubit_pure_decide(const RealVector& p, const RealVector& q);
/// MIO channel mapping |+⟩ to Σ √q_y |y⟩. Requires Σ √q_y ≤ √2.
KrausChannel mio_qubit_pure_construct(const RealVector& q);
/// Same decision on states; the witness is wrapped in diagonal unitaries so
/// that it maps ψ to φ including phases.
TransformDecision mio_qubit_pure_decide(const PureState& psi, const PureState& phi);

/// Decided by C_R and C_Δ,R on the standard forms.
TransformDecision qubit_decide(const DensityMatrix& rho, const DensityMatrix& sigma);
/// SIO channel mapping ρ to σ. Throws PreconditionError if the robustness
/// conditions fail by more than 1e-9.
KrausChannel qubit_construct(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Partition search over the support of ψ; the witness is a PIO channel
/// mapping ψ to φ.
TransformDecision pio_pure_decide(const PureState& psi, const PureState& phi);

/// Zero-pads a pure state to dimension d.
PureState pad_state(const PureState& psi, int d);

}  // namespace coherence
