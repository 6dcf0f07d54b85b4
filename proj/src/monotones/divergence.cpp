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
#include <string>

#include "coherence/errors.hpp"
#include "coherence/monotones.hpp"

namespace coherence {
namespace {

double distance_to_diagonal(const ComplexMatrix& rho, const RealVector& s) {
  ComplexMatrix diff = rho;
  for (Eigen::Index x = 0; x < s.size(); ++x) diff(x, x) -= s[x];
  return trace_norm(diff);
}

// Subgradient of s ↦ ‖ρ − diag(s)‖₁: minus the diagonal of the sign of ρ − diag(s).
RealVector distance_subgradient(const ComplexMatrix& rho, const RealVector& s) {
  ComplexMatrix diff = rho;
  for (Eigen::Index x = 0; x < s.size(); ++x) diff(x, x) -= s[x];
  const EigenDecomposition e = eig_hermitian(diff);
  RealVector g = RealVector::Zero(s.size());
  for (Eigen::Index k = 0; k < e.values.size(); ++k) {
    const double sign = e.values[k] > 0.0 ? 1.0 : (e.values[k] < 0.0 ? -1.0 : 0.0);
    g -= sign * e.vectors.col(k).cwiseAbs2();
  }
  return g;
}

constexpr int kMaxKelleyIterations = 2000;
constexpr double kKelleyGap = 1e-9;

}  // namespace

MonotoneReport monotone_from_divergence(const DensityMatrix& rho, Divergence divergence,
                                        ReferenceSet reference) {
  if (divergence != Divergence::kTraceDistance) {
    throw PreconditionError("monotone_from_divergence: unsupported divergence");
  }
  const ComplexMatrix& r = rho.mat();
  const int n = rho.dim();
  RealVector s = r.diagonal().real();
  double value = distance_to_diagonal(r, s);

  int iterations = 0;
  if (reference == ReferenceSet::kIncoherentSet) {
    // Kelley's method over (s, z): minimize z subject to Σs = 1 and the
    // linearizations z ≥ f(s_k) + g_k·(s − s_k).
    LinearProgram lp;
    lp.objective = RealVector::Zero(n + 1);
    lp.objective[n] = 1.0;
    RealVector sum = RealVector::Ones(n + 1);
    sum[n] = 0.0;
    lp.cuts.push_back({sum, 1.0});
    lp.cuts.push_back({-sum, -1.0});
    RealVector trial = s;
    for (iterations = 1; iterations <= kMaxKelleyIterations; ++iterations) {
      const RealVector g = distance_subgradient(r, trial);
      RealVector coeffs(n + 1);
      coeffs.head(n) = -g;
      coeffs[n] = 1.0;
      lp.cuts.push_back({coeffs, distance_to_diagonal(r, trial) - g.dot(trial)});
      const LpSolution sol = solve_lp(lp);
      trial = sol.x.head(n);
      const double f = distance_to_diagonal(r, trial);
      if (f < value) {
        value = f;
        s = trial;
      }
      if (value - sol.value <= kKelleyGap) break;
    }
    if (iterations > kMaxKelleyIterations) {
      throw SolverError(SolverError::Kind::kNoConvergence, "monotone_from_divergence: iteration cap exceeded");
    }
  }
  return {reference == ReferenceSet::kIncoherentSet ? "trace_distance_incoherent" : "trace_distance_dephased",
          value, reference == ReferenceSet::kIncoherentSet ? Method::kCuttingPlane : Method::kClosedForm,
          ComplexMatrix(s.cast<Complex>().asDiagonal()), iterations};
}

const std::vector<std::string>& monotone_names() {
  static const std::vector<std::string> names = {
      "c_rel", "c_l1", "c_r", "c_delta_r", "r_d", "trace_norm", "c_alpha_0.5", "c_alpha_2",
      "c_delta_alpha_0.5", "c_delta_alpha_2"};
  return names;
}

namespace {

double parse_order(const std::string& name, std::size_t prefix) {
  std::size_t used = 0;
  double alpha = 0.0;
  try {
    alpha = std::stod(name.substr(prefix), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != name.size() - prefix) throw PreconditionError("unknown monotone: " + name);
  return alpha;
}

}  // namespace

MonotoneReport monotone_by_name(const DensityMatrix& rho, const std::string& name) {
  MonotoneReport out;
  if (name == "c_rel") {
    out = c_rel(rho);
  } else if (name == "c_l1") {
    out = c_l1(rho);
  } else if (name == "c_r") {
    out = c_r(rho);
  } else if (name == "c_delta_r") {
    out = c_delta_r(rho);
  } else if (name == "r_d") {
    out = log_robustness_dephasing(rho);
  } else if (name == "trace_norm") {
    out = trace_norm_coherence(rho);
  } else if (name.rfind("c_alpha_", 0) == 0) {
    out = c_alpha(rho, parse_order(name, 8));
  } else if (name.rfind("c_delta_alpha_", 0) == 0) {
    out = c_delta_alpha(rho, parse_order(name, 14), Side::kRight);
  } else {
    throw PreconditionError("unknown monotone: " + name);
  }
  out.name = name;
  return out;
}

}  // namespace coherence
