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

#include "coherence/errors.hpp"
#include "coherence/monotones.hpp"

namespace coherence {
namespace {

constexpr int kMaxCuttingPlaneIterations = 500;
constexpr double kFeasibility = 1e-9;
constexpr double kGap = 1e-11;

bool is_rank_one(const ComplexMatrix& rho) {
  const auto e = eig_hermitian(rho);
  const Eigen::Index n = e.values.size();
  return n == 1 || e.values[n - 2] <= 1e-12;
}

bool is_entrywise_nonnegative(const ComplexMatrix& rho) {
  for (Eigen::Index i = 0; i < rho.size(); ++i) {
    const Complex z = rho.data()[i];
    if (std::abs(z.imag()) > 1e-14 || z.real() < -1e-14) return false;
  }
  return true;
}

ComplexMatrix diag_matrix(const RealVector& d) { return d.cast<Complex>().asDiagonal(); }

}  // namespace

MonotoneReport c_r_solver(const DensityMatrix& rho) {
  const ComplexMatrix& r = rho.mat();
  const int n = rho.dim();

  // Lower bound: min Σd over finitely many cuts v†(diag(d) − ρ)v ≥ 0.
  // Upper bound: d shifted by the most negative eigenvalue of diag(d) − ρ.
  LinearProgram lp;
  lp.objective = RealVector::Ones(n);
  for (int i = 0; i < n; ++i) lp.cuts.push_back({RealVector::Unit(n, i), r(i, i).real()});

  MonotoneReport out{"c_r", 0.0, Method::kCuttingPlane, std::nullopt, 0};
  double previous = -kInfinity;
  int stagnant = 0;
  for (int it = 1; it <= kMaxCuttingPlaneIterations; ++it) {
    const LpSolution sol = solve_lp(lp);
    const auto e = eig_hermitian(diag_matrix(sol.x) - r);
    const double mu = e.values[0];
    out.iterations = it;

    const double lower = sol.value;
    const double upper = sol.value + n * std::max(0.0, -mu);
    stagnant = (lower - previous < 1e-10) ? stagnant + 1 : 0;
    previous = lower;
    if ((mu >= -kFeasibility && upper - lower <= kGap) || (mu >= -kFeasibility && stagnant >= 3)) {
      out.value = std::max(0.0, lower - 1.0);
      out.witness = diag_matrix(sol.x.array() + std::max(0.0, -mu));
      return out;
    }
    // One cut per negative eigenvector.
    for (Eigen::Index k = 0; k < e.values.size() && e.values[k] < 0.0; ++k) {
      const ComplexVector v = e.vectors.col(k);
      Cut cut{v.cwiseAbs2(), (v.adjoint() * r * v)(0, 0).real()};
      lp.cuts.push_back(std::move(cut));
    }
  }
  throw SolverError(SolverError::Kind::kNoConvergence, "c_r: cutting-plane iteration cap exceeded");
}

MonotoneReport c_r(const DensityMatrix& rho) {
  const ComplexMatrix& r = rho.mat();
  if (rho.dim() == 2) {
    return {"c_r", 2.0 * std::abs(r(0, 1)), Method::kClosedForm, std::nullopt, 0};
  }
  if (is_rank_one(r)) {
    const double s = r.diagonal().real().cwiseMax(0.0).cwiseSqrt().sum();
    return {"c_r", std::max(0.0, s * s - 1.0), Method::kClosedForm, std::nullopt, 0};
  }
  if (is_entrywise_nonnegative(r)) {
    MonotoneReport l1 = c_l1(rho);
    l1.name = "c_r";
    return l1;
  }
  return c_r_solver(rho);
}

MonotoneReport c_delta_r(const DensityMatrix& rho) {
  const ComplexMatrix& r = rho.mat();
  const int n = rho.dim();
  std::vector<int> support;
  for (int x = 0; x < n; ++x) {
    if (r(x, x).real() > tol::kZeroEigenvalue) {
      support.push_back(x);
    } else if (r.row(x).norm() > 1e-10) {
      throw ValidationError("c_delta_r: state has weight off a zero diagonal entry");
    }
  }
  const int k = static_cast<int>(support.size());
  ComplexMatrix m(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      m(i, j) = r(support[i], support[j]) /
                std::sqrt(r(support[i], support[i]).real() * r(support[j], support[j]).real());
    }
  }
  const auto e = eig_hermitian(m);
  ComplexVector phi = ComplexVector::Zero(n);
  for (int i = 0; i < k; ++i) {
    phi[support[i]] = e.vectors(i, k - 1) / std::sqrt(r(support[i], support[i]).real());
  }
  phi /= phi.norm();
  const double value = e.values[k - 1] - 1.0;
  return {"c_delta_r", (value < 0.0 && value > -1e-12) ? 0.0 : value, Method::kEigenvalue,
          ComplexMatrix(phi), 0};
}

MonotoneReport log_robustness_dephasing(const DensityMatrix& rho) {
  MonotoneReport r = c_delta_r(rho);
  r.name = "r_d";
  r.value = std::log2(1.0 + r.value);
  return r;
}

}  // namespace coherence
