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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "coherence/errors.hpp"
#include "coherence/transforms.hpp"

namespace coherence {
namespace {

// Incoherent unitary U with U·v = |v|↓ (real, nonincreasing).
ComplexMatrix sorting_unitary(const ComplexVector& v) {
  const int n = static_cast<int>(v.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return std::abs(v[a]) > std::abs(v[b]); });
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const Complex z = v[order[i]];
    u(i, order[i]) = std::abs(z) > 0.0 ? std::conj(z) / std::abs(z) : Complex(1.0);
  }
  return u;
}

}  // namespace

TransformDecision sio_pure_decide(const PureState& psi, const PureState& phi) {
  TransformDecision out;
  const MajorizationResult m = majorizes(schmidt_vector(phi), schmidt_vector(psi));
  out.verdict = m.holds;
  if (m.holds) {
    out.witness = sio_pure_construct(psi, phi);
  } else {
    out.violation = ViolationRecord{"majorization", 0.0, 0.0, m.failing_k};
  }
  return out;
}

KrausChannel sio_pure_construct(const PureState& psi, const PureState& phi) {
  const int n = std::max(psi.dim(), phi.dim());
  const ComplexVector a = pad_state(psi, n).amps();
  const ComplexVector b = pad_state(phi, n).amps();
  if (!majorizes(schmidt_vector(phi), schmidt_vector(psi)).holds) {
    throw PreconditionError("sio_pure_construct: source is not majorized by target");
  }

  const ComplexMatrix u_src = sorting_unitary(a);
  const ComplexMatrix u_dst = sorting_unitary(b);
  const RealVector x = (u_src * a).real().cwiseAbs2();
  const RealVector y = (u_dst * b).real().cwiseAbs2();

  // x = D·y with D = Σ w_α P_α, so M_α(π_α(j), j) = √w_α·√(y_π(j)/x_j)
  // gives Σ M_α†M_α = I and M_α|√x⟩ = √w_α|√y⟩.
  const BirkhoffDecomposition bd = birkhoff_decompose(majorization_matrix(x, y));
  std::vector<ComplexMatrix> sorted_ops;
  for (const auto& term : bd.terms) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (int j = 0; j < n; ++j) {
      const int i = term.perm[j];
      // Columns outside supp ψ keep a unit amplitude so the map stays trace preserving.
      const double ratio = x[j] > 0.0 ? std::sqrt(y[i] / x[j]) : 1.0;
      m(i, j) = std::sqrt(term.weight) * ratio;
    }
    sorted_ops.push_back(std::move(m));
  }
  // Remove the decomposition's rounding from Σ M†M column by column.
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (const auto& m : sorted_ops) s += m.col(j).squaredNorm();
    if (s > 0.0) {
      for (auto& m : sorted_ops) m.col(j) /= std::sqrt(s);
    }
  }

  std::vector<ComplexMatrix> ops;
  for (const auto& m : sorted_ops) {
    if (m.cwiseAbs().maxCoeff() > 0.0) ops.push_back(u_dst.adjoint() * m * u_src);
  }
  return KrausChannel(n, n, std::move(ops));
}

}  // namespace coherence
