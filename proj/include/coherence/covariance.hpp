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

#include "coherence/channels.hpp"
#include "coherence/numerics.hpp"
#include "coherence/states.hpp"
#include "coherence/transforms.hpp"

namespace coherence {

/// Q with q_xx = min(σ_xx/ρ_xx, 1) and q_xx' = σ_xx'/ρ_xx'. Throws
/// PreconditionError when some ρ_xx' has modulus ≤ 1e-12 or ρ_xx = 0.
ComplexMatrix n_q_matrix(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Channel commuting with every diagonal unitary, in the form
///   E(|x⟩⟨x'|) = h_xx'|x⟩⟨x'| (x ≠ x'),  E(|x⟩⟨x|) = Σ_y r_{y|x}|y⟩⟨y|.
struct NCovariantSpec {
  ComplexMatrix h;  // PSD, diag(h) = diag(r)
  RealMatrix r;     // column stochastic, r(y, x) = r_{y|x}
};

/// Diagonal Kraus operators from the Gram factorization of h plus
/// √r_{y|x}·|y⟩⟨x| for y ≠ x.
KrausChannel n_covariant_channel(const NCovariantSpec& spec);

/// Verdict is Q ⪰ 0 (tolerance 1e-9); the witness comes from n_construct.
TransformDecision n_feasible(const DensityMatrix& rho, const DensityMatrix& sigma);
/// Throws PreconditionError when Q is not PSD.
KrausChannel n_construct(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Choi sparsity test: E(|x⟩⟨x'|) ∝ |x⟩⟨x'| for x ≠ x' and E(|x⟩⟨x|) diagonal.
bool is_n_covariant(const KrausChannel& ch, double tol = tol::kPredicate);
/// Commutation with `samples` random diagonal unitaries (Choi distance).
bool commutes_with_diagonal_unitaries(const KrausChannel& ch, int samples, Rng& rng,
                                      double tol = tol::kPredicate);

NCovariantSpec random_n_covariant_spec(int d, Rng& rng);

/// (1 + t)Δ(m) − m.
ComplexMatrix phi_t(const ComplexMatrix& m, double t);
/// d − 1.
double phi_t_threshold(int d);
/// Choi matrix (1+t)Σ|jj⟩⟨jj| − Σ|jj⟩⟨kk| is PSD within `tol`.
bool is_phi_t_cp(int d, double t, double tol = 1e-12);
/// Smallest t in [lo, hi] with is_phi_t_cp, by bisection to `precision`.
double bisect_phi_t_threshold(int d, double lo = 0.0, double hi = 10.0, double precision = 1e-9);

}  // namespace coherence
