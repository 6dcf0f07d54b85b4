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
#include <functional>

#include "coherence/errors.hpp"
#include "coherence/numerics.hpp"

namespace coherence {
namespace {

constexpr double kStochasticTol = 1e-9;
constexpr double kEntryFloor = 1e-13;

// Kuhn's augmenting paths restricted to entries ≥ threshold.
// Returns row→column assignment, or empty if no perfect matching exists.
Permutation perfect_matching(const RealMatrix& m, double threshold) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> col_owner(n, -1);
  std::vector<char> seen;

  std::function<bool(int)> augment = [&](int row) {
    for (int c = 0; c < n; ++c) {
      if (m(row, c) < threshold || seen[c]) continue;
      seen[c] = 1;
      if (col_owner[c] < 0 || augment(col_owner[c])) {
        col_owner[c] = row;
        return true;
      }
    }
    return false;
  };

  for (int r = 0; r < n; ++r) {
    seen.assign(n, 0);
    if (!augment(r)) return {};
  }
  Permutation perm(n);
  for (int c = 0; c < n; ++c) perm[col_owner[c]] = c;
  return perm;
}

// Matching whose smallest entry is as large as possible.
Permutation bottleneck_matching(const RealMatrix& m) {
  std::vector<double> levels;
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (m.data()[i] > kEntryFloor) levels.push_back(m.data()[i]);
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  Permutation best;
  std::size_t lo = 0;
  std::size_t hi = levels.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    Permutation p = perfect_matching(m, levels[mid]);
    if (!p.empty()) {
      best = std::move(p);
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return best;
}

}  // namespace

RealMatrix permutation_matrix(const Permutation& perm) {
  const int n = static_cast<int>(perm.size());
  RealMatrix p = RealMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) p(i, perm[i]) = 1.0;
  return p;
}

RealMatrix BirkhoffDecomposition::reconstruct(int n) const {
  RealMatrix out = RealMatrix::Zero(n, n);
  for (const auto& term : terms) out += term.weight * permutation_matrix(term.perm);
  return out;
}

BirkhoffDecomposition birkhoff_decompose(const RealMatrix& d) {
  if (d.rows() != d.cols() || d.rows() == 0) {
    throw PreconditionError("birkhoff_decompose: expected a non-empty square matrix");
  }
  const int n = static_cast<int>(d.rows());
  if (!d.allFinite() || d.minCoeff() < -kStochasticTol ||
      (d.rowwise().sum().array() - 1.0).abs().maxCoeff() > kStochasticTol ||
      (d.colwise().sum().array() - 1.0).abs().maxCoeff() > kStochasticTol) {
    throw PreconditionError("birkhoff_decompose: matrix is not doubly stochastic");
  }

  RealMatrix residual = d.cwiseMax(0.0);
  BirkhoffDecomposition out;
  double remaining = 1.0;
  // Each extraction zeroes at least one entry, so n² + 1 rounds suffice.
  for (int round = 0; round <= n * n && remaining > kStochasticTol; ++round) {
    Permutation perm = bottleneck_matching(residual);
    if (perm.empty()) break;
    double weight = residual(0, perm[0]);
    for (int i = 1; i < n; ++i) weight = std::min(weight, residual(i, perm[i]));
    weight = std::min(weight, remaining);
    for (int i = 0; i < n; ++i) {
      residual(i, perm[i]) -= weight;
      if (residual(i, perm[i]) < kEntryFloor) residual(i, perm[i]) = 0.0;
    }
    remaining -= weight;
    out.terms.push_back({weight, std::move(perm)});
  }

  // Rounding leftovers go to the heaviest term so weights sum to one.
  if (!out.terms.empty() && remaining > 0.0) {
    auto heaviest = std::max_element(out.terms.begin(), out.terms.end(),
                                     [](const auto& a, const auto& b) { return a.weight < b.weight; });
    heaviest->weight += remaining;
  }
  return out;
}

}  // namespace coherence
