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

#include "coherence/numerics.hpp"

namespace coherence {

/// Validated density operator in the incoherent (index) basis.
class DensityMatrix {
 public:
  /// Throws ValidationError unless `mat` is Hermitian, unit-trace and PSD
  /// within `tol`. The stored matrix is the Hermitian part of the input.
  explicit DensityMatrix(const ComplexMatrix& mat, double tol = tol::kState);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const ComplexMatrix& mat() const { return mat_; }

 private:
  ComplexMatrix mat_;
};

class PureState {
 public:
  /// Throws ValidationError unless ‖amps‖ = 1 within tol::kState.
  explicit PureState(ComplexVector amps);

  /// Normalizes a nonzero vector.
  static PureState normalized(const ComplexVector& v);
  /// Σ √p_i |i⟩ for a probability vector p.
  static PureState from_probabilities(const RealVector& p);

  int dim() const { return static_cast<int>(amps_.size()); }
  const ComplexVector& amps() const { return amps_; }
  /// |ψ_i|² in index order.
  RealVector probabilities() const;
  DensityMatrix density() const;

 private:
  ComplexVector amps_;
};

/// Probability vector sorted in nonincreasing order.
class SchmidtVector {
 public:
  /// Sorts `probs`; throws ValidationError on negative entries or a sum
  /// differing from one by more than tol::kState.
  explicit SchmidtVector(RealVector probs);

  int size() const { return static_cast<int>(probs_.size()); }
  const RealVector& probs() const { return probs_; }
  double operator[](int i) const { return i < size() ? probs_[i] : 0.0; }

 private:
  RealVector probs_;
};

struct QubitStandardForm {
  double p = 1.0;
  double r = 0.0;
  /// Incoherent unitary with gauge·ρ·gauge† = [[p, r], [r, 1−p]].
  ComplexMatrix gauge;
};

/// Off-diagonal entries zeroed.
ComplexMatrix diagonal_part(const ComplexMatrix& m);

DensityMatrix dephase(const DensityMatrix& rho);

/// (1−λ)ρ + λΔ(ρ). Throws PreconditionError unless λ ∈ [0,1].
DensityMatrix partial_dephase(const DensityMatrix& rho, double lambda);

bool is_incoherent(const DensityMatrix& rho, double tol = tol::kPredicate);

/// Throws PreconditionError unless dim = 2.
QubitStandardForm qubit_standard_form(const DensityMatrix& rho);

/// [[p, r], [r, 1−p]].
DensityMatrix qubit_state(double p, double r);

/// d²-dimensional state with ρ_xy placed at (xx, yy).
DensityMatrix mc_embed(const DensityMatrix& rho);

SchmidtVector schmidt_vector(const PureState& psi);

/// GG†/Tr(GG†) for a d×d Ginibre G.
DensityMatrix random_density(int d, std::uint64_t seed);
/// Normalized complex Gaussian vector.
PureState random_pure(int d, std::uint64_t seed);

DensityMatrix random_density(int d, Rng& rng);
PureState random_pure(int d, Rng& rng);

}  // namespace coherence
