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
#include <vector>

#include "coherence/errors.hpp"
#include "coherence/transforms.hpp"

namespace coherence {
namespace {

constexpr double kSupport = 1e-12;
constexpr double kModulusTol = 1e-9;

struct Search {
  std::vector<double> src_mod;  // |ψ_i|, indexed by position in src_order
  std::vector<int> src_order;   // supp ψ, moduli nonincreasing
  std::vector<double> tgt_mod;
  std::vector<int> tgt_order;   // supp φ, moduli nonincreasing
  std::vector<bool> used;
  std::vector<PioBlock> blocks;

  bool run() {
    int head = -1;
    for (std::size_t i = 0; i < used.size(); ++i) {
      if (!used[i]) {
        head = static_cast<int>(i);
        break;
      }
    }
    if (head < 0) return true;
    const double scale = src_mod[head] / tgt_mod[0];
    PioBlock block;
    block.source.push_back(src_order[head]);
    block.target.push_back(tgt_order[0]);
    used[head] = true;
    if (fill(block, scale, 1)) return true;
    used[head] = false;
    return false;
  }

  bool fill(PioBlock& block, double scale, std::size_t l) {
    if (l == tgt_order.size()) {
      double w = 0.0;
      for (const int s : block.source) {
        const auto pos = std::find(src_order.begin(), src_order.end(), s) - src_order.begin();
        w += src_mod[pos] * src_mod[pos];
      }
      block.weight = w;
      blocks.push_back(block);
      if (run()) return true;
      blocks.pop_back();
      return false;
    }
    const double want = scale * tgt_mod[l];
    double last_tried = -1.0;
    for (std::size_t i = 0; i < used.size(); ++i) {
      if (used[i] || std::abs(src_mod[i] - want) > kModulusTol) continue;
      // Indices with the same modulus are interchangeable.
      if (last_tried >= 0.0 && std::abs(src_mod[i] - last_tried) <= kSupport) continue;
      last_tried = src_mod[i];
      used[i] = true;
      block.source.push_back(src_order[i]);
      block.target.push_back(tgt_order[l]);
      if (fill(block, scale, l + 1)) return true;
      block.source.pop_back();
      block.target.pop_back();
      used[i] = false;
    }
    return false;
  }
};

std::vector<int> support_sorted(const ComplexVector& v) {
  std::vector<int> idx;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > kSupport) idx.push_back(static_cast<int>(i));
  }
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return std::abs(v[a]) > std::abs(v[b]); });
  return idx;
}

Complex unit_phase(Complex z) { return z / std::abs(z); }

}  // namespace

TransformDecision pio_pure_decide(const PureState& psi, const PureState& phi) {
  const int n = std::max(psi.dim(), phi.dim());
  const ComplexVector a = pad_state(psi, n).amps();
  const ComplexVector b = pad_state(phi, n).amps();

  Search search;
  search.src_order = support_sorted(a);
  search.tgt_order = support_sorted(b);
  for (const int i : search.src_order) search.src_mod.push_back(std::abs(a[i]));
  for (const int i : search.tgt_order) search.tgt_mod.push_back(std::abs(b[i]));
  search.used.assign(search.src_order.size(), false);

  TransformDecision out;
  const auto ns = static_cast<int>(search.src_order.size());
  const auto nt = static_cast<int>(search.tgt_order.size());
  if (ns % nt != 0 || !search.run()) {
    out.violation = ViolationRecord{"pio_partition", static_cast<double>(ns), static_cast<double>(nt), 0};
    return out;
  }

  // K_B sends |s_l⟩ to a phase times |t_l⟩ so that K_B ψ = c_B φ.
  std::vector<ComplexMatrix> ops;
  std::vector<bool> covered(n, false);
  for (const auto& block : search.blocks) {
    ComplexMatrix k = ComplexMatrix::Zero(n, n);
    for (std::size_t l = 0; l < block.source.size(); ++l) {
      const int s = block.source[l], t = block.target[l];
      k(t, s) = unit_phase(b[t]) * std::conj(unit_phase(a[s]));
      covered[s] = true;
    }
    ops.push_back(std::move(k));
  }
  ComplexMatrix rest = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (!covered[i]) rest(i, i) = 1.0;
  }
  if (rest.cwiseAbs().maxCoeff() > 0.0) ops.push_back(std::move(rest));

  out.verdict = true;
  out.blocks = search.blocks;
  out.witness = KrausChannel(n, n, std::move(ops));
  return out;
}

}  // namespace coherence
