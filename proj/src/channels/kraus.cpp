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

#include "coherence/channels.hpp"
#include "coherence/errors.hpp"

namespace coherence {
namespace {

void check_shapes(const KrausMap& map) {
  if (map.din < 1 || map.dout < 1) throw ValidationError("KrausChannel: dimensions must be positive");
  if (map.ops.empty()) throw ValidationError("KrausChannel: empty Kraus list");
  for (std::size_t j = 0; j < map.ops.size(); ++j) {
    const auto& k = map.ops[j];
    if (k.rows() != map.dout || k.cols() != map.din) {
      throw ValidationError("KrausChannel: operator " + std::to_string(j) + " has shape " +
                            std::to_string(k.rows()) + "x" + std::to_string(k.cols()));
    }
    require_finite(k, "KrausChannel");
  }
}

}  // namespace

KrausChannel::KrausChannel(int din, int dout, std::vector<ComplexMatrix> ops, double tol)
    : KrausChannel(KrausMap{din, dout, std::move(ops)}, tol) {}

KrausChannel::KrausChannel(KrausMap map, double tol) : map_(std::move(map)) {
  check_shapes(map_);
  const double residual = tp_residual(map_);
  if (residual > tol) {
    throw ValidationError("KrausChannel: not trace preserving (residual " + std::to_string(residual) +
                          ")");
  }
}

double tp_residual(const KrausMap& map) {
  ComplexMatrix s = ComplexMatrix::Zero(map.din, map.din);
  for (const auto& k : map.ops) s += k.adjoint() * k;
  return max_abs(s - ComplexMatrix::Identity(map.din, map.din));
}

ComplexMatrix apply_map(const KrausMap& map, const ComplexMatrix& m) {
  if (m.rows() != map.din || m.cols() != map.din) {
    throw PreconditionError("apply: input dimension " + std::to_string(m.rows()) +
                            " does not match channel input dimension " + std::to_string(map.din));
  }
  ComplexMatrix out = ComplexMatrix::Zero(map.dout, map.dout);
  for (const auto& k : map.ops) out += k * m * k.adjoint();
  return out;
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  return DensityMatrix(apply_map(ch.map(), rho.mat()), tol::kCptp);
}

ChoiMatrix choi(const KrausMap& map) {
  const int n = map.din * map.dout;
  ChoiMatrix j{map.din, map.dout, ComplexMatrix::Zero(n, n)};
  for (const auto& k : map.ops) {
    // Column-stacked vec(K): index x·dout + y holds K(y, x).
    const Eigen::Map<const ComplexVector> v(k.data(), n);
    j.mat.noalias() += v * v.adjoint();
  }
  return j;
}

ChoiMatrix choi(const KrausChannel& ch) { return choi(ch.map()); }

KrausMap cp_map_from_choi(const ChoiMatrix& j) {
  const int n = j.din * j.dout;
  if (j.mat.rows() != n || j.mat.cols() != n) {
    throw ValidationError("channel_from_choi: Choi matrix has the wrong shape");
  }
  const auto e = eig_hermitian(j.mat);
  const double scale = std::max(1.0, std::abs(e.values[n - 1]));
  if (e.values[0] < -tol::kCptp * scale) {
    throw ValidationError("channel_from_choi: Choi matrix is not positive semidefinite");
  }
  KrausMap map{j.din, j.dout, {}};
  // Largest eigenvalues first so the dominant operator leads the list.
  for (int i = n - 1; i >= 0; --i) {
    const double lambda = e.values[i];
    if (lambda <= tol::kKrausRank * scale) continue;
    ComplexVector v = e.vectors.col(i);
    Eigen::Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    v *= std::abs(v[arg]) / v[arg];
    v *= std::sqrt(lambda);
    map.ops.emplace_back(Eigen::Map<const ComplexMatrix>(v.data(), j.dout, j.din));
  }
  if (map.ops.empty()) map.ops.push_back(ComplexMatrix::Zero(j.dout, j.din));
  return map;
}

KrausChannel channel_from_choi(const ChoiMatrix& j) { return KrausChannel(cp_map_from_choi(j)); }

double choi_distance(const KrausMap& a, const KrausMap& b) {
  if (a.din != b.din || a.dout != b.dout) {
    throw PreconditionError("choi_distance: channels have different shapes");
  }
  return max_abs(choi(a).mat - choi(b).mat);
}

KrausChannel compose(const KrausChannel& second, const KrausChannel& first) {
  if (second.din() != first.dout()) throw PreconditionError("compose: dimension mismatch");
  std::vector<ComplexMatrix> ops;
  ops.reserve(second.size() * first.size());
  for (const auto& b : second.ops()) {
    for (const auto& a : first.ops()) ops.push_back(b * a);
  }
  return KrausChannel(first.din(), second.dout(), std::move(ops));
}

KrausChannel identity_channel(int d) {
  return KrausChannel(d, d, {ComplexMatrix::Identity(d, d)});
}

KrausChannel unitary_channel(const ComplexMatrix& u) {
  require_square(u, "unitary_channel");
  return KrausChannel(static_cast<int>(u.rows()), static_cast<int>(u.rows()), {u});
}

KrausChannel dephasing_channel(int d) { return partial_dephasing_channel(d, 1.0); }

KrausChannel partial_dephasing_channel(int d, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw PreconditionError("partial_dephasing_channel: lambda must lie in [0,1]");
  }
  std::vector<ComplexMatrix> ops;
  if (lambda < 1.0) ops.push_back(std::sqrt(1.0 - lambda) * ComplexMatrix::Identity(d, d));
  if (lambda > 0.0) {
    for (int x = 0; x < d; ++x) {
      ComplexMatrix p = ComplexMatrix::Zero(d, d);
      p(x, x) = std::sqrt(lambda);
      ops.push_back(std::move(p));
    }
  }
  return KrausChannel(d, d, std::move(ops));
}

KrausChannel qutrit_mio_example_channel() {
  ComplexMatrix m1(3, 2), m2(3, 2), m3(3, 2);
  m1 << 3, 1, 0, 1, 0, 1;
  m2 << 0, 4, 3, -2, 0, 1;
  m3 << 0, 4, 0, 1, 3, -2;
  m1 *= std::sqrt(2.0) / (3.0 * std::sqrt(3.0));
  m2 /= 3.0 * std::sqrt(6.0);
  m3 /= 3.0 * std::sqrt(6.0);
  return KrausChannel(2, 3, {m1, m2, m3});
}

KrausMap dual_map(const KrausMap& map) {
  KrausMap out{map.dout, map.din, {}};
  out.ops.reserve(map.ops.size());
  for (const auto& k : map.ops) out.ops.push_back(k.adjoint());
  return out;
}

}  // namespace coherence
