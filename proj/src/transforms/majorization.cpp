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
#include <string>

#include "coherence/errors.hpp"
#include "coherence/transforms.hpp"

namespace coherence {
namespace {

constexpr double kSlack = 1e-12;

RealVector padded(const SchmidtVector& v, int n) {
  RealVector out = RealVector::Zero(n);
  out.head(v.size()) = v.probs();
  return out;
}

}  // namespace

PureState pad_state(const PureState& psi, int d) {
  if (d < psi.dim()) throw PreconditionError("pad_state: target dimension is smaller than the state");
  ComplexVector v = ComplexVector::Zero(d);
  v.head(psi.dim()) = psi.amps();
  return PureState(v);
}

MajorizationResult majorizes(const SchmidtVector& target, const SchmidtVector& source) {
  const int n = std::max(target.size(), source.size());
  double sum_target = 0.0;
  double sum_source = 0.0;
  for (int k = 0; k < n; ++k) {
    sum_target += target[k];
    sum_source += source[k];
    if (sum_source > sum_target + kSlack) return {false, k + 1};
  }
  return {true, 0};
}

RealMatrix majorization_matrix(const RealVector& source, const RealVector& target) {
  const Eigen::Index n = source.size();
  if (target.size() != n) throw PreconditionError("majorization_matrix: length mismatch");
  RealMatrix d = RealMatrix::Identity(n, n);
  RealVector y = target;
  const double eps = 1e-15;

  for (Eigen::Index step = 0; step < n; ++step) {
    Eigen::Index j = -1;
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      if (y[i] > source[i] + eps) {
        j = i;
        break;
      }
    }
    if (j < 0) break;
    Eigen::Index k = -1;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      if (y[i] < source[i] - eps) {
        k = i;
        break;
      }
    }
    if (k < 0) throw PreconditionError("majorization_matrix: source is not majorized by target");

    // T = λI + (1−λ)·(swap j,k) moves δ of weight from j to k.
    const double delta = std::min(y[j] - source[j], source[k] - y[k]);
    const double lambda = 1.0 - delta / (y[j] - y[k]);
    RealMatrix t = RealMatrix::Identity(n, n);
    t(j, j) = t(k, k) = lambda;
    t(j, k) = t(k, j) = 1.0 - lambda;
    y = t * y;
    d = t * d;
  }
  if ((d * target - source).cwiseAbs().maxCoeff() > 1e-10) {
    throw PreconditionError("majorization_matrix: source is not majorized by target");
  }
  return d;
}

bool multi_outcome_decide(const PureState& psi, const std::vector<std::pair<double, PureState>>& ensemble) {
  if (ensemble.empty()) throw PreconditionError("multi_outcome_decide: empty ensemble");
  int n = psi.dim();
  double total = 0.0;
  for (const auto& [p, phi] : ensemble) {
    if (!(p >= 0.0)) throw PreconditionError("multi_outcome_decide: negative weight");
    total += p;
    n = std::max(n, phi.dim());
  }
  if (std::abs(total - 1.0) > 1e-12) throw PreconditionError("multi_outcome_decide: weights do not sum to one");

  RealVector mixed = RealVector::Zero(n);
  for (const auto& [p, phi] : ensemble) mixed += p * padded(schmidt_vector(phi), n);
  mixed /= mixed.sum();
  return majorizes(SchmidtVector(mixed), schmidt_vector(psi)).holds;
}

double max_conversion_probability(const PureState& psi, const PureState& phi) {
  const int n = std::max(psi.dim(), phi.dim());
  const RealVector x = padded(schmidt_vector(psi), n);
  const RealVector y = padded(schmidt_vector(phi), n);
  double best = 1.0;
  for (int k = 0; k < n; ++k) {
    const double tail_y = y.tail(n - k).sum();
    if (tail_y <= 1e-15) continue;
    best = std::min(best, x.tail(n - k).sum() / tail_y);
  }
  return std::clamp(best, 0.0, 1.0);
}

}  // namespace coherence
