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

#include <cmath>

#include "coherence/channels.hpp"
#include "coherence/errors.hpp"

namespace coherence {
namespace {

constexpr int kMaxIterations = 10000;
constexpr int kMaxRestarts = 20;
constexpr double kResidual = 1e-9;

// Orthogonal projection onto the qubit MIO + trace-preserving affine set.
// In Choi index 2x + y the constraints touch disjoint entries:
// J01 = J23 = 0, J00 + J11 = 1, J22 + J33 = 1, J02 + J13 = 0.
ComplexMatrix project_affine(const ComplexMatrix& j) {
  ComplexMatrix out = j;
  out(0, 1) = out(1, 0) = 0.0;
  out(2, 3) = out(3, 2) = 0.0;
  const double s0 = (1.0 - j(0, 0).real() - j(1, 1).real()) / 2.0;
  out(0, 0) = j(0, 0).real() + s0;
  out(1, 1) = j(1, 1).real() + s0;
  const double s1 = (1.0 - j(2, 2).real() - j(3, 3).real()) / 2.0;
  out(2, 2) = j(2, 2).real() + s1;
  out(3, 3) = j(3, 3).real() + s1;
  const Complex shift = (j(0, 2) + j(1, 3)) / 2.0;
  out(0, 2) = j(0, 2) - shift;
  out(1, 3) = j(1, 3) - shift;
  out(2, 0) = std::conj(out(0, 2));
  out(3, 1) = std::conj(out(1, 3));
  return out;
}

ComplexMatrix project_psd(const ComplexMatrix& j) {
  const auto e = eig_hermitian(hermitian_part(j));
  const RealVector clipped = e.values.cwiseMax(0.0);
  return e.vectors * clipped.cast<Complex>().asDiagonal() * e.vectors.adjoint();
}

bool try_sample(Rng& rng, ComplexMatrix& result) {
  const ComplexMatrix g = rng.ginibre(4, 4);
  ComplexMatrix j = g * g.adjoint();
  j *= 2.0 / j.trace().real();

  for (int it = 0; it < kMaxIterations; ++it) {
    const ComplexMatrix affine = project_affine(j);
    j = project_psd(affine);
    if (max_abs(project_affine(j) - j) > kResidual) continue;

    // Land exactly on the affine set, then mix in the depolarizing Choi
    // matrix I/2 (itself MIO and TP) until the point is PSD.
    const ComplexMatrix exact = project_affine(j);
    const double lambda_min = min_eigenvalue(exact);
    ComplexMatrix out = exact;
    if (lambda_min < 0.0) {
      const double eps = std::min(1.0, 4.0 * -lambda_min / (0.5 - lambda_min));
      out = (1.0 - eps) * exact + eps * 0.5 * ComplexMatrix::Identity(4, 4);
    }
    result = out;
    return true;
  }
  return false;
}

}  // namespace

KrausChannel sample_mio_qubit_channel(std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
    ComplexMatrix j;
    if (try_sample(rng, j)) return channel_from_choi({2, 2, j});
  }
  throw SolverError(SolverError::Kind::kNoConvergence,
                    "sample_mio_qubit_channel: alternating projections did not converge");
}

}  // namespace coherence
