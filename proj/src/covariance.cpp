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

#include "coherence/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "coherence/errors.hpp"

namespace coherence {
namespace {

constexpr double kOffDiagonalFloor = 1e-12;
constexpr double kQTol = 1e-9;

// Northwest-corner transport from surplus rows to deficit rows.
RealMatrix transport(const RealVector& supply, const RealVector& demand) {
  RealMatrix plan = RealMatrix::Zero(demand.size(), supply.size());
  RealVector s = supply, t = demand;
  Eigen::Index i = 0, j = 0;
  while (i < s.size() && j < t.size()) {
    const double m = std::min(s[i], t[j]);
    plan(j, i) += m;
    s[i] -= m;
    t[j] -= m;
    if (s[i] <= t[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return plan;
}

}  // namespace

ComplexMatrix n_q_matrix(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const int d = rho.dim();
  if (sigma.dim() != d) throw PreconditionError("n_q_matrix: dimension mismatch");
  const ComplexMatrix& a = rho.mat();
  const ComplexMatrix& b = sigma.mat();
  ComplexMatrix q(d, d);
  for (int x = 0; x < d; ++x) {
    if (a(x, x).real() <= 0.0) throw PreconditionError("n_q_matrix: source has a zero population");
    for (int y = 0; y < d; ++y) {
      if (x == y) {
        q(x, x) = std::min(b(x, x).real() / a(x, x).real(), 1.0);
      } else {
        if (std::abs(a(x, y)) <= kOffDiagonalFloor) {
          throw PreconditionError("n_q_matrix: every off-diagonal entry of the source must be nonzero");
        }
        q(x, y) = b(x, y) / a(x, y);
      }
    }
  }
  return hermitian_part(q);
}

KrausChannel n_covariant_channel(const NCovariantSpec& spec) {
  const auto d = static_cast<int>(spec.h.rows());
  const EigenDecomposition e = eig_hermitian(hermitian_part(spec.h));
  std::vector<ComplexMatrix> ops;
  // h_xx' = Σ_j a_jx·conj(a_jx') with a_jx = √λ_j V_xj.
  for (int j = 0; j < d; ++j) {
    const double lambda = e.values[j];
    if (lambda <= tol::kZeroEigenvalue) continue;
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (int x = 0; x < d; ++x) m(x, x) = std::sqrt(lambda) * e.vectors(x, j);
    ops.push_back(std::move(m));
  }
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y) {
      if (y == x || spec.r(y, x) <= 0.0) continue;
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(y, x) = std::sqrt(spec.r(y, x));
      ops.push_back(std::move(m));
    }
  }
  return KrausChannel(d, d, std::move(ops));
}

KrausChannel n_construct(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const ComplexMatrix q = n_q_matrix(rho, sigma);
  if (!is_psd(q, kQTol)) throw PreconditionError("n_construct: Q is not positive semidefinite");
  const int d = rho.dim();

  // Rows that gain population keep all of it; rows that lose keep the
  // fraction σ_yy/ρ_yy and ship the rest by the transport plan.
  std::vector<int> gain, lose;
  for (int x = 0; x < d; ++x) {
    (rho.mat()(x, x).real() <= sigma.mat()(x, x).real() ? gain : lose).push_back(x);
  }
  RealVector supply(lose.size()), demand(gain.size());
  for (std::size_t i = 0; i < lose.size(); ++i) {
    supply[i] = rho.mat()(lose[i], lose[i]).real() - sigma.mat()(lose[i], lose[i]).real();
  }
  for (std::size_t i = 0; i < gain.size(); ++i) {
    demand[i] = sigma.mat()(gain[i], gain[i]).real() - rho.mat()(gain[i], gain[i]).real();
  }
  // Traces agree, so only rounding separates the two totals.
  if (demand.sum() > 0.0) demand *= supply.sum() / demand.sum();
  const RealMatrix plan = transport(supply, demand);

  NCovariantSpec spec;
  spec.h = q;
  spec.r = RealMatrix::Zero(d, d);
  for (const int x : gain) spec.r(x, x) = 1.0;
  for (std::size_t i = 0; i < lose.size(); ++i) {
    const int y = lose[i];
    const double p = rho.mat()(y, y).real();
    spec.r(y, y) = q(y, y).real();
    for (std::size_t j = 0; j < gain.size(); ++j) spec.r(gain[j], y) = plan(j, i) / p;
  }
  for (int x = 0; x < d; ++x) spec.h(x, x) = spec.r(x, x);
  return n_covariant_channel(spec);
}

TransformDecision n_feasible(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const ComplexMatrix q = n_q_matrix(rho, sigma);
  TransformDecision out;
  const double mu = min_eigenvalue(q);
  if (mu < -kQTol) {
    out.violation = ViolationRecord{"q_matrix_min_eigenvalue", mu, 0.0, 0};
    return out;
  }
  out.verdict = true;
  out.witness = n_construct(rho, sigma);
  return out;
}

bool is_n_covariant(const KrausChannel& ch, double tol) {
  if (ch.din() != ch.dout()) return false;
  const int d = ch.din();
  const ChoiMatrix j = choi(ch);
  for (int x = 0; x < d; ++x) {
    for (int xp = 0; xp < d; ++xp) {
      for (int y = 0; y < d; ++y) {
        for (int yp = 0; yp < d; ++yp) {
          const bool allowed = (x == xp) ? (y == yp) : (y == x && yp == xp);
          if (!allowed && std::abs(j.mat(x * d + y, xp * d + yp)) > tol) return false;
        }
      }
    }
  }
  return true;
}

bool commutes_with_diagonal_unitaries(const KrausChannel& ch, int samples, Rng& rng, double tol) {
  if (ch.din() != ch.dout()) return false;
  const int d = ch.din();
  for (int s = 0; s < samples; ++s) {
    ComplexMatrix u = ComplexMatrix::Zero(d, d);
    for (int x = 0; x < d; ++x) u(x, x) = std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
    const KrausChannel conj = unitary_channel(u);
    if (choi_distance(compose(ch, conj).map(), compose(conj, ch).map()) > tol) return false;
  }
  return true;
}

NCovariantSpec random_n_covariant_spec(int d, Rng& rng) {
  NCovariantSpec spec;
  // Random rank, so singular Gram matrices are sampled too.
  const ComplexMatrix a = rng.ginibre(rng.uniform_int(1, d), d);
  spec.r = RealMatrix::Zero(d, d);
  RealVector keep(d);
  for (int x = 0; x < d; ++x) keep[x] = rng.uniform();
  // Columns rescaled so the Gram diagonal is `keep`.
  ComplexMatrix cols = a;
  for (int x = 0; x < d; ++x) cols.col(x) *= std::sqrt(keep[x]) / a.col(x).norm();
  spec.h = cols.adjoint() * cols;
  for (int x = 0; x < d; ++x) {
    spec.h(x, x) = keep[x];
    spec.r(x, x) = keep[x];
    const RealVector w = rng.simplex_point(d - 1);
    int k = 0;
    for (int y = 0; y < d; ++y) {
      if (y != x) spec.r(y, x) = (1.0 - keep[x]) * w[k++];
    }
  }
  return spec;
}

ComplexMatrix phi_t(const ComplexMatrix& m, double t) {
  if (t < 0.0) throw PreconditionError("phi_t: t must be nonnegative");
  return (1.0 + t) * diagonal_part(m) - m;
}

double phi_t_threshold(int d) {
  if (d < 1) throw PreconditionError("phi_t_threshold: dimension must be positive");
  return d - 1.0;
}

bool is_phi_t_cp(int d, double t, double tol) {
  const int n = d * d;
  ComplexMatrix j = ComplexMatrix::Zero(n, n);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) j(a * d + a, b * d + b) = (a == b) ? t : -1.0;
  }
  return is_psd(j, tol);
}

double bisect_phi_t_threshold(int d, double lo, double hi, double precision) {
  if (!is_phi_t_cp(d, hi)) throw SolverError(SolverError::Kind::kInfeasible, "bisect_phi_t_threshold: upper end not CP");
  if (is_phi_t_cp(d, lo)) return lo;
  while (hi - lo > precision) {
    const double mid = 0.5 * (lo + hi);
    (is_phi_t_cp(d, mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace coherence
