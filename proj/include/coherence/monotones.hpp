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

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "coherence/numerics.hpp"
#include "coherence/states.hpp"

namespace coherence {

// All values are in bits.

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Method { kClosedForm, kCuttingPlane, kEigenvalue };

const char* method_name(Method m);

struct MonotoneReport {
  std::string name;
  double value = 0.0;
  Method method = Method::kClosedForm;
  /// Optimal diagonal majorant (c_r), optimal vector (c_delta_r) or optimal
  /// incoherent state (monotone_from_divergence).
  std::optional<ComplexMatrix> witness;
  int iterations = 0;
};

/// S_α(p) = log₂(Σ p_i^α)/(1−α); α = 1 gives Shannon entropy and
/// α = kInfinity gives −log₂ max p_i. Zero entries are dropped.
double renyi(const RealVector& p, double alpha);
double renyi(const SchmidtVector& p, double alpha);

double von_neumann_entropy(const ComplexMatrix& rho);

/// (α/(α−1))·log₂ Σ_x ⟨x|ρ^α|x⟩^{1/α} for α ∈ [0,2]; α = 1 is c_rel and
/// α = 0 the analytic limit.
MonotoneReport c_alpha(const DensityMatrix& rho, double alpha);

/// S(Δρ) − S(ρ).
MonotoneReport c_rel(const DensityMatrix& rho);

/// Σ_{j≠k} |ρ_jk|.
MonotoneReport c_l1(const DensityMatrix& rho);

/// S_γ(p) with γ = α/(2α−1), α ∈ [1/2, ∞].
MonotoneReport c_q_alpha_pure(const PureState& psi, double alpha);

enum class Side { kRight, kLeft };

/// Right: log₂ Tr[ρ^α (Δρ)^{1−α}]/(α−1). Left swaps ρ and Δρ and is
/// infinite for α ≥ 1 when supp Δρ ⊄ supp ρ.
MonotoneReport c_delta_alpha(const DensityMatrix& rho, double alpha, Side side = Side::kRight);

/// ‖ρ − Δρ‖₁.
MonotoneReport trace_norm_coherence(const DensityMatrix& rho);

/// Robustness of coherence min{Σd − 1 : diag(d) ⪰ ρ}. Uses closed forms for
/// pure states, qubits and entrywise nonnegative states, else the solver.
MonotoneReport c_r(const DensityMatrix& rho);
/// Cutting-plane solver without fast paths. Throws SolverError after 500
/// iterations.
MonotoneReport c_r_solver(const DensityMatrix& rho);

/// λ_max(Δρ^{−1/2} ρ Δρ^{−1/2}) − 1 on the support of Δρ.
MonotoneReport c_delta_r(const DensityMatrix& rho);

/// log₂(1 + c_delta_r).
MonotoneReport log_robustness_dephasing(const DensityMatrix& rho);

enum class Divergence { kTraceDistance };
enum class ReferenceSet { kIncoherentSet, kDephasedSingleton };

/// min over the reference set of ‖ρ − σ‖₁.
MonotoneReport monotone_from_divergence(const DensityMatrix& rho, Divergence divergence,
                                        ReferenceSet reference);

/// Shannon entropy of |ψ_i|².
double distillation_rate_pure(const PureState& psi);
/// H(|ψ_i|²)/H(|φ_i|²). Throws PreconditionError when φ is incoherent.
double dilution_ratio(const PureState& psi, const PureState& phi);

/// Names accepted by monotone_by_name, in panel order.
const std::vector<std::string>& monotone_names();
/// Evaluates one named measure (c_alpha_2, c_rel, c_l1, c_r, c_delta_r,
/// r_d, trace_norm, c_delta_alpha_2, ...).
MonotoneReport monotone_by_name(const DensityMatrix& rho, const std::string& name);

}  // namespace coherence
