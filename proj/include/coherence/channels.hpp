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
#include <optional>
#include <vector>

#include "coherence/numerics.hpp"
#include "coherence/states.hpp"

namespace coherence {

/// Completely positive map ρ ↦ Σ K_j ρ K_j†, not necessarily trace preserving.
struct KrausMap {
  int din = 0;
  int dout = 0;
  std::vector<ComplexMatrix> ops;  // each dout×din
};

/// Kraus representation with Σ K_j†K_j = I checked at construction.
class KrausChannel {
 public:
  /// Throws ValidationError on shape mismatch, empty list or a trace
  /// preservation residual above `tol`.
  KrausChannel(int din, int dout, std::vector<ComplexMatrix> ops, double tol = tol::kCptp);
  explicit KrausChannel(KrausMap map, double tol = tol::kCptp);

  int din() const { return map_.din; }
  int dout() const { return map_.dout; }
  const std::vector<ComplexMatrix>& ops() const { return map_.ops; }
  std::size_t size() const { return map_.ops.size(); }
  const KrausMap& map() const { return map_; }

 private:
  KrausMap map_;
};

/// J = Σ_{jk} |j⟩⟨k| ⊗ E(|j⟩⟨k|); entry (j·dout + a, k·dout + b).
struct ChoiMatrix {
  int din = 0;
  int dout = 0;
  ComplexMatrix mat;
};

/// max-abs entry of Σ K_j†K_j − I.
double tp_residual(const KrausMap& map);

ComplexMatrix apply_map(const KrausMap& map, const ComplexMatrix& m);
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

ChoiMatrix choi(const KrausMap& map);
ChoiMatrix choi(const KrausChannel& ch);

/// Kraus operators √λ·v from the eigendecomposition of a PSD Choi matrix.
/// No trace-preservation check.
KrausMap cp_map_from_choi(const ChoiMatrix& j);
/// Throws ValidationError unless `j` is PSD and trace preserving (tol::kCptp).
KrausChannel channel_from_choi(const ChoiMatrix& j);

/// max-abs distance between Choi matrices.
double choi_distance(const KrausMap& a, const KrausMap& b);

/// second ∘ first.
KrausChannel compose(const KrausChannel& second, const KrausChannel& first);

KrausChannel identity_channel(int d);
KrausChannel unitary_channel(const ComplexMatrix& u);
KrausChannel dephasing_channel(int d);
/// (1−λ)·id + λ·Δ.
KrausChannel partial_dephasing_channel(int d, double lambda);
/// Three-operator qubit → qutrit MIO channel sending |+⟩ to
/// √(8/9)|0⟩ + √(1/18)|1⟩ + √(1/18)|2⟩; not IO as given, not DIO.
KrausChannel qutrit_mio_example_channel();

// Class predicates. MIO and DIO are decided on the channel; the remaining
// classes are decided on the given Kraus representation.

bool is_mio(const KrausChannel& ch, double tol = tol::kPredicate);
bool is_dio(const KrausChannel& ch, double tol = tol::kPredicate);
/// ‖Δ(E(B)) − E(Δ(B))‖₁ ≤ tol on every matrix unit B.
bool is_covariant_under_dephasing(const KrausChannel& ch, double tol = tol::kPredicate);
bool is_io_rep(const KrausChannel& ch, double tol = tol::kPredicate);
bool is_sio_rep(const KrausChannel& ch, double tol = tol::kPredicate);
bool is_sio_special_rep(const KrausChannel& ch, double tol = tol::kPredicate);
bool is_pio_rep(const KrausChannel& ch, double tol = tol::kPredicate);

/// Kraus list {K_j†}.
KrausMap dual_map(const KrausMap& map);

/// Weights of ρ ↦ q1·ρ + q2/(d−1)·(I − Δρ) + q3/(d−1)·(dΔρ − ρ).
struct GCovariantParams {
  double q1 = 1.0;
  double q2 = 0.0;
  double q3 = 0.0;
  int d = 2;
};

/// Throws PreconditionError if d < 2 or the weights do not sum to one,
/// ValidationError if the resulting map is not completely positive.
KrausChannel g_covariant_channel(const GCovariantParams& params);

/// Recovers the weights from E(|0⟩⟨0|) and E(|0⟩⟨1|); nullopt when the
/// channel is not of the covariant form within `tol`.
std::optional<GCovariantParams> fit_g_covariant(const KrausChannel& ch, double tol = tol::kPredicate);

/// Same channel in a representation passing is_io_rep. Throws
/// PreconditionError for non-qubit or non-MIO input and
/// SolverError(kNotRepresentable) when no such representation exists.
KrausChannel qubit_mio_to_io(const KrausChannel& ch);

/// Random qubit MIO channel from alternating projections on the Choi matrix.
KrausChannel sample_mio_qubit_channel(std::uint64_t seed);

// Samplers used by tests and the harness.

/// Σ_j K_j with K_j = D_j·Π_j, D_j diagonal; columns normalized jointly.
KrausChannel random_sio_channel(int d, int num_ops, Rng& rng);
/// Convex mixture of incoherent projective instruments followed by
/// phase-permutations.
KrausChannel random_pio_channel(int d, Rng& rng);
/// Kraus operators with one nonzero per column.
KrausChannel random_io_channel(int din, int dout, int num_ops, Rng& rng);
/// Random CPTP map from a Stinespring isometry.
KrausChannel random_channel(int din, int dout, int num_ops, Rng& rng);
GCovariantParams random_g_covariant_params(int d, Rng& rng);

}  // namespace coherence
