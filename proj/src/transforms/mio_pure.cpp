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

// Qubit → qudit pure-state conversion by MIO.
//
// Kraus operators M_j (d'×2) are described by the vectors
// (v_y)_j = ⟨y|M_j|0⟩ and (u_y)_j = ⟨y|M_j|1⟩ in C^{d'+1}. With
// S = Σ_y √q_y and r_y = √q_y / S the choice
//   v_y = √r_y e_y,   u_y = √(2q_y) c − v_y,
//   c_y = q_y^{1/4} √S / √2 (y < d'),   c_{d'} = √(1 − S²/2)
// makes {v_y} and {u_y} orthogonal families (MIO), keeps Σ M†M = I and
// sends |+⟩ to c_j·Σ_y √q_y |y⟩ under every M_j.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "coherence/errors.hpp"
#include "coherence/transforms.hpp"

namespace coherence {
namespace {

constexpr double kBoundary = 1e-12;

void require_target(const RealVector& q) {
  if (q.size() <= 2) {
    throw PreconditionError("mio_qubit_pure: target dimension must exceed 2; use qubit_decide");
  }
  if ((q.array() <= 0.0).any()) throw PreconditionError("mio_qubit_pure: target has a zero entry");
  if (std::abs(q.sum() - 1.0) > tol::kState) throw PreconditionError("mio_qubit_pure: target is not normalized");
}

}  // namespace

TransformDecision mio_qubit_pure_decide(const RealVector& p, const RealVector& q) {
  if (p.size() != 2 || (p.array() < 0.0).any() || std::abs(p.sum() - 1.0) > tol::kState) {
    throw PreconditionError("mio_qubit_pure_decide: source is not a qubit distribution");
  }
  require_target(q);
  const double s = q.cwiseSqrt().sum();
  TransformDecision out;
  if (std::abs(p[0] - 0.5) > kBoundary) {
    out.violation = ViolationRecord{"balanced_source", p[0], 0.5, 0};
    return out;
  }
  if (s > std::numbers::sqrt2 + kBoundary) {
    out.violation = ViolationRecord{"sum_sqrt_target", std::numbers::sqrt2, s, 0};
    return out;
  }
  out.verdict = true;
  out.witness = mio_qubit_pure_construct(q);
  return out;
}

KrausChannel mio_qubit_pure_construct(const RealVector& q) {
  require_target(q);
  const int dp = static_cast<int>(q.size());
  const double s = q.cwiseSqrt().sum();
  double radicand = 1.0 - s * s / 2.0;
  if (radicand < -kBoundary) {
    throw PreconditionError("mio_qubit_pure_construct: sum of square roots exceeds sqrt(2)");
  }
  radicand = std::max(0.0, radicand);

  RealVector c(dp + 1);
  for (int y = 0; y < dp; ++y) c[y] = std::pow(q[y], 0.25) * std::sqrt(s / 2.0);
  c[dp] = std::sqrt(radicand);

  std::vector<ComplexMatrix> ops;
  for (int j = 0; j <= dp; ++j) {
    ComplexMatrix m = ComplexMatrix::Zero(dp, 2);
    for (int y = 0; y < dp; ++y) {
      const double v = (j == y) ? std::sqrt(std::sqrt(q[y]) / s) : 0.0;
      m(y, 0) = v;
      m(y, 1) = std::sqrt(2.0 * q[y]) * c[j] - v;
    }
    // At the boundary the completing operator vanishes.
    if (m.cwiseAbs().maxCoeff() > 0.0) ops.push_back(std::move(m));
  }
  return KrausChannel(2, dp, std::move(ops));
}

TransformDecision mio_qubit_pure_decide(const PureState& psi, const PureState& phi) {
  if (psi.dim() != 2) throw PreconditionError("mio_qubit_pure_decide: source must be a qubit");
  TransformDecision out = mio_qubit_pure_decide(psi.probabilities(), phi.probabilities());
  if (!out.witness) return out;
  const auto phases = [](const ComplexVector& v) {
    ComplexMatrix u = ComplexMatrix::Identity(v.size(), v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (std::abs(v[i]) > 0.0) u(i, i) = v[i] / std::abs(v[i]);
    }
    return u;
  };
  const ComplexMatrix pre = phases(psi.amps()).adjoint();
  const ComplexMatrix post = phases(phi.amps());
  std::vector<ComplexMatrix> ops;
  for (const auto& k : out.witness->ops()) ops.push_back(post * k * pre);
  out.witness = KrausChannel(2, phi.dim(), std::move(ops));
  return out;
}

}  // namespace coherence
