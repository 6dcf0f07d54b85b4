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
#include "coherence/numerics.hpp"

namespace coherence {
namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm2(const ComplexMatrix& a) {
  double s = 0.0;
  const Eigen::Index n = a.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return s;
}

// Zeroes a(p,q) by A ← G†AG with G = diag(1, e^{-iφ})·R(θ) on the (p,q) plane.
void rotate(ComplexMatrix& a, ComplexMatrix& v, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double b = std::abs(apq);
  if (b == 0.0) return;
  const Complex phase = apq / b;  // e^{iφ}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * b);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  // G = [[c, s], [-s e^{-iφ}, c e^{-iφ}]]
  const Complex conj_phase = std::conj(phase);
  const Complex g00 = c;
  const Complex g01 = s;
  const Complex g10 = -s * conj_phase;
  const Complex g11 = c * conj_phase;

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * g00 + akq * g10;
    a(k, q) = akp * g01 + akq * g11;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(g00) * apk + std::conj(g10) * aqk;
    a(q, k) = std::conj(g01) * apk + std::conj(g11) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * g00 + vkq * g10;
    v(k, q) = vkp * g01 + vkq * g11;
  }
}

}  // namespace

EigenDecomposition eig_hermitian(const ComplexMatrix& m) {
  require_square(m, "eig_hermitian");
  require_finite(m, "eig_hermitian");
  if (!is_hermitian(m, tol::kHermitian)) {
    throw PreconditionError("eig_hermitian: matrix is not Hermitian within tolerance");
  }
  const Eigen::Index n = m.rows();
  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix v = ComplexMatrix::Identity(n, n);

  const double total = a.squaredNorm();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal_norm2(a);
    if (off <= 1e-30 * std::max(total, 1e-300)) break;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
  }

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

double min_eigenvalue(const ComplexMatrix& m) { return eig_hermitian(m).values[0]; }

double max_eigenvalue(const ComplexMatrix& m) {
  const auto e = eig_hermitian(m);
  return e.values[e.values.size() - 1];
}

bool is_psd(const ComplexMatrix& m, double tol) {
  require_square(m, "is_psd");
  return min_eigenvalue(m) >= -tol;
}

ComplexMatrix mat_power_psd(const ComplexMatrix& m, double alpha) {
  const auto e = eig_hermitian(m);
  if (e.values[0] < -tol::kHermitian) {
    throw PreconditionError("mat_power_psd: matrix has a negative eigenvalue");
  }
  const Eigen::Index n = m.rows();
  RealVector powered(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lambda = e.values[i];
    powered[i] = lambda <= tol::kZeroEigenvalue ? 0.0 : std::pow(lambda, alpha);
  }
  return e.vectors * powered.cast<Complex>().asDiagonal() * e.vectors.adjoint();
}

ComplexMatrix log2_psd_on_support(const ComplexMatrix& m) {
  const auto e = eig_hermitian(m);
  const Eigen::Index n = m.rows();
  RealVector logs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lambda = e.values[i];
    logs[i] = lambda <= tol::kZeroEigenvalue ? 0.0 : std::log2(lambda);
  }
  return e.vectors * logs.cast<Complex>().asDiagonal() * e.vectors.adjoint();
}

double trace_norm(const ComplexMatrix& m) {
  require_square(m, "trace_norm");
  if (is_hermitian(m, tol::kHermitian)) {
    return eig_hermitian(m).values.cwiseAbs().sum();
  }
  // Singular values are square roots of the eigenvalues of M†M.
  const auto e = eig_hermitian(m.adjoint() * m);
  double s = 0.0;
  for (Eigen::Index i = 0; i < e.values.size(); ++i) s += std::sqrt(std::max(0.0, e.values[i]));
  return s;
}

}  // namespace coherence
