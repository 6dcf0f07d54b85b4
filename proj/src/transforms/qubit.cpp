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
#include <vector>

#include "coherence/errors.hpp"
#include "coherence/transforms.hpp"

namespace coherence {
namespace {

constexpr double kDecisionTol = 1e-9;

double delta_robustness(double p, double r) {
  const double v = p * (1.0 - p);
  return v > 0.0 ? r / std::sqrt(v) : 0.0;
}

// Largest off-diagonal reachable at population q from (p, r).
double max_offdiagonal(double p, double r, double q) {
  if (p >= q) return r;
  return r * std::sqrt(q * (1.0 - q) / (p * (1.0 - p)));
}

// {J, K} with J = diag(j0, j1), K = k0|1⟩⟨0| + k1|0⟩⟨1| taking (p, r) to
// (q, max_offdiagonal).
std::vector<ComplexMatrix> population_stage(double p, double q) {
  if (std::abs(p - q) <= 1e-15) return {ComplexMatrix::Identity(2, 2)};
  double j0sq, j1sq;
  if (p >= q) {
    j0sq = j1sq = (p + q - 1.0) / (2.0 * p - 1.0);
  } else {
    j0sq = (q / p) * (p + q - 1.0) / (2.0 * q - 1.0);
    j1sq = ((1.0 - q) / (1.0 - p)) * (p + q - 1.0) / (2.0 * q - 1.0);
  }
  j0sq = std::clamp(j0sq, 0.0, 1.0);
  j1sq = std::clamp(j1sq, 0.0, 1.0);
  ComplexMatrix j = ComplexMatrix::Zero(2, 2);
  j(0, 0) = std::sqrt(j0sq);
  j(1, 1) = std::sqrt(j1sq);
  ComplexMatrix k = ComplexMatrix::Zero(2, 2);
  k(1, 0) = std::sqrt(1.0 - j0sq);
  k(0, 1) = std::sqrt(1.0 - j1sq);
  return {j, k};
}

}  // namespace

TransformDecision qubit_decide(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != 2 || sigma.dim() != 2) throw PreconditionError("qubit_decide: states must be qubits");
  const QubitStandardForm a = qubit_standard_form(rho);
  const QubitStandardForm b = qubit_standard_form(sigma);
  TransformDecision out;
  const double cr_in = 2.0 * a.r, cr_out = 2.0 * b.r;
  if (cr_in < cr_out - kDecisionTol) {
    out.violation = ViolationRecord{"c_r", cr_in, cr_out, 0};
    return out;
  }
  const double cd_in = delta_robustness(a.p, a.r), cd_out = delta_robustness(b.p, b.r);
  if (cd_in < cd_out - kDecisionTol) {
    out.violation = ViolationRecord{"c_delta_r", cd_in, cd_out, 0};
    return out;
  }
  out.verdict = true;
  out.witness = qubit_construct(rho, sigma);
  return out;
}

KrausChannel qubit_construct(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != 2 || sigma.dim() != 2) throw PreconditionError("qubit_construct: states must be qubits");
  const QubitStandardForm a = qubit_standard_form(rho);
  const QubitStandardForm b = qubit_standard_form(sigma);
  if (2.0 * a.r < 2.0 * b.r - kDecisionTol ||
      delta_robustness(a.p, a.r) < delta_robustness(b.p, b.r) - kDecisionTol) {
    throw PreconditionError("qubit_construct: robustness conditions fail");
  }

  const std::vector<ComplexMatrix> first = population_stage(a.p, b.p);
  const double t_max = max_offdiagonal(a.p, a.r, b.p);

  // The pair diag(cosθ, sinθ), diag(sinθ, cosθ) keeps populations and scales
  // the off-diagonal by sin 2θ; θ = π/4 is the identity.
  std::vector<ComplexMatrix> second;
  if (t_max > 0.0 && b.r < t_max) {
    const double theta = 0.5 * std::asin(std::clamp(b.r / t_max, 0.0, 1.0));
    ComplexMatrix j1 = ComplexMatrix::Zero(2, 2), j2 = ComplexMatrix::Zero(2, 2);
    j1(0, 0) = std::cos(theta);
    j1(1, 1) = std::sin(theta);
    j2(0, 0) = std::sin(theta);
    j2(1, 1) = std::cos(theta);
    second = {j1, j2};
  } else {
    second = {ComplexMatrix::Identity(2, 2)};
  }

  std::vector<ComplexMatrix> ops;
  for (const auto& s : second) {
    for (const auto& f : first) {
      const ComplexMatrix k = b.gauge.adjoint() * s * f * a.gauge;
      if (k.cwiseAbs().maxCoeff() > 0.0) ops.push_back(k);
    }
  }
  return KrausChannel(2, 2, std::move(ops));
}

}  // namespace coherence
