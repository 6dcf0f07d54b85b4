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
#include "coherence/monotones.hpp"

namespace coherence {
namespace {

constexpr double kDrop = 1e-15;

// log₂ Σ exp(z_i) without overflow, z in natural-log units.
double log2_sum_exp(const std::vector<double>& z) {
  const double top = *std::max_element(z.begin(), z.end());
  if (!std::isfinite(top)) return top;
  double s = 0.0;
  for (double v : z) s += std::exp(v - top);
  return (top + std::log(s)) / std::log(2.0);
}

double shannon(const RealVector& p) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] > kDrop) h -= p[i] * std::log2(p[i]);
  }
  return h;
}

void require_alpha_range(double alpha, const char* what) {
  if (!(alpha >= 0.0 && alpha <= 2.0)) {
    throw PreconditionError(std::string(what) + ": alpha must lie in [0,2]");
  }
}

// Monotones are nonnegative; only round-off below zero is flushed.
double clamp_roundoff(double v) { return (v < 0.0 && v > -1e-12) ? 0.0 : v; }

// Largest diagonal entry of the projector onto supp(ρ).
double max_support_weight(const ComplexMatrix& rho) {
  return mat_power_psd(rho, 0.0).diagonal().real().maxCoeff();
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::kClosedForm:
      return "closed_form";
    case Method::kCuttingPlane:
      return "cutting_plane";
    case Method::kEigenvalue:
      return "eigenvalue";
  }
  return "unknown";
}

double renyi(const RealVector& p, double alpha) {
  if (!(alpha >= 0.0)) throw PreconditionError("renyi: alpha must be nonnegative");
  if ((p.array() < -tol::kState).any() || std::abs(p.sum() - 1.0) > tol::kState) {
    throw PreconditionError("renyi: input is not a probability vector");
  }
  if (alpha == 1.0) return shannon(p);
  if (std::isinf(alpha)) return -std::log2(p.maxCoeff());
  if (alpha == 0.0) {
    int support = 0;
    for (Eigen::Index i = 0; i < p.size(); ++i) support += p[i] > kDrop;
    return std::log2(static_cast<double>(support));
  }
  std::vector<double> z;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] > kDrop) z.push_back(alpha * std::log(p[i]));
  }
  return log2_sum_exp(z) / (1.0 - alpha);
}

double renyi(const SchmidtVector& p, double alpha) { return renyi(p.probs(), alpha); }

double von_neumann_entropy(const ComplexMatrix& rho) {
  const auto e = eig_hermitian(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < e.values.size(); ++i) {
    const double l = e.values[i];
    if (l > tol::kZeroEigenvalue) s -= l * std::log2(l);
  }
  return s;
}

MonotoneReport c_alpha(const DensityMatrix& rho, double alpha) {
  require_alpha_range(alpha, "c_alpha");
  if (alpha == 1.0) {
    MonotoneReport r = c_rel(rho);
    r.name = "c_alpha";
    return r;
  }
  MonotoneReport out{"c_alpha", 0.0, Method::kClosedForm, std::nullopt, 0};
  if (alpha == 0.0) {
    out.value = -std::log2(std::min(1.0, max_support_weight(rho.mat())));
    return out;
  }
  const RealVector diag = mat_power_psd(rho.mat(), alpha).diagonal().real();
  std::vector<double> z;
  for (Eigen::Index x = 0; x < diag.size(); ++x) {
    if (diag[x] > kDrop) z.push_back(std::log(diag[x]) / alpha);
  }
  out.value = clamp_roundoff(alpha / (alpha - 1.0) * log2_sum_exp(z));
  return out;
}

MonotoneReport c_rel(const DensityMatrix& rho) {
  const double value = von_neumann_entropy(diagonal_part(rho.mat())) - von_neumann_entropy(rho.mat());
  return {"c_rel", clamp_roundoff(value), Method::kClosedForm, std::nullopt, 0};
}

MonotoneReport c_l1(const DensityMatrix& rho) {
  const ComplexMatrix off = rho.mat() - diagonal_part(rho.mat());
  return {"c_l1", off.cwiseAbs().sum(), Method::kClosedForm, std::nullopt, 0};
}

MonotoneReport c_q_alpha_pure(const PureState& psi, double alpha) {
  if (!(alpha >= 0.5)) throw PreconditionError("c_q_alpha_pure: alpha must be at least 1/2");
  double gamma;
  if (std::isinf(alpha)) {
    gamma = 0.5;
  } else if (alpha == 0.5) {
    gamma = kInfinity;
  } else {
    gamma = alpha / (2.0 * alpha - 1.0);
  }
  return {"c_q_alpha", renyi(psi.probabilities(), gamma), Method::kClosedForm, std::nullopt, 0};
}

MonotoneReport c_delta_alpha(const DensityMatrix& rho, double alpha, Side side) {
  require_alpha_range(alpha, "c_delta_alpha");
  const ComplexMatrix& r = rho.mat();
  const RealVector delta = r.diagonal().real();
  MonotoneReport out{side == Side::kRight ? "c_delta_alpha_right" : "c_delta_alpha_left", 0.0,
                     Method::kClosedForm, std::nullopt, 0};

  if (side == Side::kRight) {
    if (alpha == 1.0) {
      out.value = c_rel(rho).value;
      return out;
    }
    // Tr[ρ^α (Δρ)^{1−α}] = Σ_x (ρ^α)_xx δ_x^{1−α} on supp Δρ.
    const RealVector powered = mat_power_psd(r, alpha).diagonal().real();
    double t = 0.0;
    for (Eigen::Index x = 0; x < delta.size(); ++x) {
      if (delta[x] > tol::kZeroEigenvalue) t += powered[x] * std::pow(delta[x], 1.0 - alpha);
    }
    out.value = clamp_roundoff(std::log2(t) / (alpha - 1.0));
    return out;
  }

  // Left variant needs ρ^{1−α} on supp Δρ; for α ≥ 1 that requires
  // supp Δρ ⊆ supp ρ.
  const double leak = 1.0 - (mat_power_psd(r, 0.0) * diagonal_part(r)).trace().real();
  if (alpha >= 1.0 && leak > 1e-10) {
    out.value = kInfinity;
    return out;
  }
  if (alpha == 1.0) {
    // Tr Δρ (log Δρ − log ρ).
    const ComplexMatrix dr = diagonal_part(r);
    out.value = clamp_roundoff(-von_neumann_entropy(dr) - (dr * log2_psd_on_support(r)).trace().real());
    return out;
  }
  ComplexMatrix delta_pow = ComplexMatrix::Zero(r.rows(), r.cols());
  for (Eigen::Index x = 0; x < delta.size(); ++x) {
    if (delta[x] > tol::kZeroEigenvalue) delta_pow(x, x) = std::pow(delta[x], alpha);
  }
  const double t = (delta_pow * mat_power_psd(r, 1.0 - alpha)).trace().real();
  out.value = clamp_roundoff(std::log2(t) / (alpha - 1.0));
  return out;
}

MonotoneReport trace_norm_coherence(const DensityMatrix& rho) {
  return {"trace_norm", trace_norm(rho.mat() - diagonal_part(rho.mat())), Method::kEigenvalue,
          std::nullopt, 0};
}

double distillation_rate_pure(const PureState& psi) { return shannon(psi.probabilities()); }

double dilution_ratio(const PureState& psi, const PureState& phi) {
  const double denom = shannon(phi.probabilities());
  if (denom <= 1e-15) throw PreconditionError("dilution_ratio: target state is incoherent");
  return shannon(psi.probabilities()) / denom;
}

}  // namespace coherence
