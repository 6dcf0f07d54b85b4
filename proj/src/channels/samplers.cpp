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
#include <numbers>

#include "coherence/channels.hpp"
#include "coherence/errors.hpp"

namespace coherence {

KrausChannel random_sio_channel(int d, int num_ops, Rng& rng) {
  if (d < 1 || num_ops < 1) throw PreconditionError("random_sio_channel: bad size");
  std::vector<Permutation> perms;
  ComplexMatrix coeff(num_ops, d);
  for (int j = 0; j < num_ops; ++j) {
    perms.push_back(rng.permutation(d));
    for (int x = 0; x < d; ++x) coeff(j, x) = rng.complex_normal();
  }
  // Normalize every column jointly over the operators.
  for (int x = 0; x < d; ++x) coeff.col(x) /= coeff.col(x).norm();

  std::vector<ComplexMatrix> ops;
  for (int j = 0; j < num_ops; ++j) {
    ComplexMatrix k = ComplexMatrix::Zero(d, d);
    for (int x = 0; x < d; ++x) k(perms[j][x], x) = coeff(j, x);
    ops.push_back(std::move(k));
  }
  return KrausChannel(d, d, std::move(ops));
}

KrausChannel random_pio_channel(int d, Rng& rng) {
  if (d < 1) throw PreconditionError("random_pio_channel: bad size");
  const int groups = rng.uniform_int(1, 3);
  const RealVector w = rng.simplex_point(groups);
  std::vector<ComplexMatrix> ops;
  for (int g = 0; g < groups; ++g) {
    // Random partition: label each basis index with a block id.
    const int blocks = rng.uniform_int(1, d);
    std::vector<int> label(d);
    const Permutation order = rng.permutation(d);
    for (int i = 0; i < d; ++i) label[order[i]] = i < blocks ? i : rng.uniform_int(0, blocks - 1);
    for (int b = 0; b < blocks; ++b) {
      ComplexMatrix p = ComplexMatrix::Zero(d, d);
      for (int x = 0; x < d; ++x) {
        if (label[x] == b) p(x, x) = 1.0;
      }
      ops.push_back(std::sqrt(w[g]) * rng.incoherent_unitary(d) * p);
    }
  }
  return KrausChannel(d, d, std::move(ops));
}

KrausChannel random_io_channel(int din, int dout, int num_ops, Rng& rng) {
  if (din < 1 || dout < 1 || num_ops < 1) throw PreconditionError("random_io_channel: bad size");
  // Each layer collapses groups of columns onto single rows. A group of size
  // s is split over s operators with Fourier phases so the cross terms of
  // Σ K†K cancel; layer weights sum to one per column.
  RealMatrix layer_weight(num_ops, din);
  for (int x = 0; x < din; ++x) layer_weight.col(x) = rng.simplex_point(num_ops);

  std::vector<ComplexMatrix> ops;
  for (int l = 0; l < num_ops; ++l) {
    std::vector<int> row_of(din);
    for (int x = 0; x < din; ++x) row_of[x] = rng.uniform_int(0, dout - 1);
    for (int y = 0; y < dout; ++y) {
      std::vector<int> group;
      for (int x = 0; x < din; ++x) {
        if (row_of[x] == y) group.push_back(x);
      }
      const int s = static_cast<int>(group.size());
      if (s == 0) continue;
      std::vector<Complex> amp(s);
      for (int i = 0; i < s; ++i) {
        amp[i] = std::polar(std::sqrt(layer_weight(l, group[i])), rng.uniform(0.0, 2.0 * std::numbers::pi));
      }
      for (int m = 0; m < s; ++m) {
        ComplexMatrix k = ComplexMatrix::Zero(dout, din);
        for (int i = 0; i < s; ++i) {
          const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi * m * i / s);
          k(y, group[i]) = omega * amp[i] / std::sqrt(static_cast<double>(s));
        }
        ops.push_back(std::move(k));
      }
    }
  }
  return KrausChannel(din, dout, std::move(ops));
}

KrausChannel random_channel(int din, int dout, int num_ops, Rng& rng) {
  if (din < 1 || dout < 1 || num_ops < 1 || num_ops * dout < din) {
    throw PreconditionError("random_channel: bad size");
  }
  const ComplexMatrix g = rng.ginibre(num_ops * dout, din);
  const ComplexMatrix q = g.householderQr().householderQ() * ComplexMatrix::Identity(num_ops * dout, din);
  std::vector<ComplexMatrix> ops;
  for (int j = 0; j < num_ops; ++j) ops.push_back(q.block(j * dout, 0, dout, din));
  return KrausChannel(din, dout, std::move(ops));
}

}  // namespace coherence
