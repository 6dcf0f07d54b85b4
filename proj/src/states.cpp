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

#include "coherence/states.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "coherence/errors.hpp"

namespace coherence {

DensityMatrix::DensityMatrix(const ComplexMatrix& mat, double tol) {
  require_square(mat, "DensityMatrix");
  require_finite(mat, "DensityMatrix");
  if (!is_hermitian(mat, tol)) throw ValidationError("DensityMatrix: not Hermitian");
  mat_ = hermitian_part(mat);
  const double trace = mat_.trace().real();
  if (std::abs(trace - 1.0) > tol) {
    throw ValidationError("DensityMatrix: trace is " + std::to_string(trace));
  }
  if (!is_psd(mat_, tol)) throw ValidationError("DensityMatrix: not positive semidefinite");
}

PureState::PureState(ComplexVector amps) : amps_(std::move(amps)) {
  if (amps_.size() == 0) throw ValidationError("PureState: empty amplitude vector");
  if (!amps_.allFinite()) throw ValidationError("PureState: non-finite amplitudes");
  if (std::abs(amps_.norm() - 1.0) > tol::kState) {
    throw ValidationError("PureState: amplitudes are not unit norm");
  }
}

PureState PureState::normalized(const ComplexVector& v) {
  const double n = v.norm();
  if (!(n > 0.0)) throw ValidationError("PureState: zero vector");
  return PureState(v / n);
}

PureState PureState::from_probabilities(const RealVector& p) {
  if ((p.array() < 0.0).any()) throw ValidationError("PureState: negative probability");
  return PureState(p.cwiseSqrt().cast<Complex>());
}

RealVector PureState::probabilities() const { return amps_.cwiseAbs2(); }

DensityMatrix PureState::density() const { return DensityMatrix(amps_ * amps_.adjoint()); }

SchmidtVector::SchmidtVector(RealVector probs) : probs_(std::move(probs)) {
  if (probs_.size() == 0) throw ValidationError("SchmidtVector: empty");
  if ((probs_.array() < -tol::kState).any()) {
    throw ValidationError("SchmidtVector: negative entry");
  }
  if (std::abs(probs_.sum() - 1.0) > tol::kState) {
    throw ValidationError("SchmidtVector: entries do not sum to one");
  }
  probs_ = probs_.cwiseMax(0.0);
  std::sort(probs_.data(), probs_.data() + probs_.size(), std::greater<double>());
}

ComplexMatrix diagonal_part(const ComplexMatrix& m) {
  ComplexMatrix out = ComplexMatrix::Zero(m.rows(), m.cols());
  out.diagonal() = m.diagonal();
  return out;
}

DensityMatrix dephase(const DensityMatrix& rho) { return DensityMatrix(diagonal_part(rho.mat())); }

DensityMatrix partial_dephase(const DensityMatrix& rho, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw PreconditionError("partial_dephase: lambda must lie in [0,1]");
  }
  return DensityMatrix((1.0 - lambda) * rho.mat() + lambda * diagonal_part(rho.mat()));
}

bool is_incoherent(const DensityMatrix& rho, double tol) {
  return max_abs(rho.mat() - diagonal_part(rho.mat())) <= tol;
}

QubitStandardForm qubit_standard_form(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw PreconditionError("qubit_standard_form: state is not a qubit");
  const ComplexMatrix& m = rho.mat();

  ComplexMatrix perm = ComplexMatrix::Identity(2, 2);
  // Strict comparison keeps the identity at p = 1/2.
  if (m(1, 1).real() > m(0, 0).real()) {
    perm << 0, 1, 1, 0;
  }
  const ComplexMatrix swapped = perm * m * perm.adjoint();

  ComplexMatrix phase = ComplexMatrix::Identity(2, 2);
  const Complex off = swapped(0, 1);
  const double r = std::abs(off);
  if (r > 0.0) phase(1, 1) = off / r;  // conjugating by diag(1, e^{iφ}) multiplies (0,1) by e^{-iφ}

  QubitStandardForm out;
  out.gauge = phase * perm;
  out.p = swapped(0, 0).real();
  out.r = r;
  return out;
}

DensityMatrix qubit_state(double p, double r) {
  ComplexMatrix m(2, 2);
  m << p, r, r, 1.0 - p;
  return DensityMatrix(m);
}

DensityMatrix mc_embed(const DensityMatrix& rho) {
  const int d = rho.dim();
  ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y) out(x * d + x, y * d + y) = rho.mat()(x, y);
  }
  return DensityMatrix(out);
}

SchmidtVector schmidt_vector(const PureState& psi) { return SchmidtVector(psi.probabilities()); }

DensityMatrix random_density(int d, Rng& rng) {
  if (d < 1) throw PreconditionError("random_density: d must be at least 1");
  const ComplexMatrix g = rng.ginibre(d, d);
  const ComplexMatrix gg = g * g.adjoint();
  return DensityMatrix(gg / gg.trace().real());
}

PureState random_pure(int d, Rng& rng) {
  if (d < 1) throw PreconditionError("random_pure: d must be at least 1");
  ComplexVector v(d);
  for (int i = 0; i < d; ++i) v[i] = rng.complex_normal();
  return PureState::normalized(v);
}

DensityMatrix random_density(int d, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(d, rng);
}

PureState random_pure(int d, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(d, rng);
}

}  // namespace coherence
