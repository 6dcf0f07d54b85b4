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

// Qubit MIO channel → IO Kraus representation.
//
// First pass: pairwise unitary mixing of Kraus operators that put weight on
// both output rows of one input column. Mixing is only applied to pairs
// whose other column already has a compatible shape, so a cleaned column is
// never disturbed again.
//
// The mixing pass can stall with two operators whose coherent contributions
// cancel only jointly. In Choi coordinates (index 2x + y) an IO operator is
// supported on one of the pairs {0,3}, {1,2}, {0,2}, {1,3}; these form the
// 4-cycle 0-2-1-3-0, so the fallback splits the Choi matrix into 2×2 PSD
// blocks along that cycle. The split is a one-parameter family; when no
// member is PSD the channel has no IO representation.

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "coherence/channels.hpp"
#include "coherence/errors.hpp"

namespace coherence {
namespace {

constexpr double kMixTol = 1e-13;
constexpr double kIoTol = 1e-9;

// Column shape of a 2×2 operator: 0 = row 0 only, 1 = row 1 only,
// 2 = zero, 3 = both rows.
int column_shape(const ComplexMatrix& k, int x) {
  const bool top = std::abs(k(0, x)) > kMixTol;
  const bool bottom = std::abs(k(1, x)) > kMixTol;
  if (top && bottom) return 3;
  if (top) return 0;
  if (bottom) return 1;
  return 2;
}

bool shapes_compatible(int a, int b) { return a == 2 || b == 2 || a == b; }

// Replaces (M_a, M_b) with (u00 M_a + u01 M_b, −ū01 M_a + ū00 M_b) so the
// first has a zero in row 0 of column x.
void mix_pair(std::vector<ComplexMatrix>& ops, int a, int b, int x) {
  const Complex ma = ops[a](0, x);
  const Complex mb = ops[b](0, x);
  const double norm = std::sqrt(std::norm(ma) + std::norm(mb));
  const Complex u00 = -mb / norm;
  const Complex u01 = ma / norm;
  const ComplexMatrix first = u00 * ops[a] + u01 * ops[b];
  const ComplexMatrix second = -std::conj(u01) * ops[a] + std::conj(u00) * ops[b];
  ops[a] = first;
  ops[b] = second;
  ops[a](0, x) = 0.0;
}

void clean_column(std::vector<ComplexMatrix>& ops, int x) {
  const int other = 1 - x;
  const int m = static_cast<int>(ops.size());
  for (int guard = 0; guard < 4 * m * m + 4; ++guard) {
    bool mixed = false;
    for (int a = 0; a < m && !mixed; ++a) {
      if (column_shape(ops[a], x) != 3) continue;
      for (int b = a + 1; b < m && !mixed; ++b) {
        if (column_shape(ops[b], x) != 3) continue;
        if (!shapes_compatible(column_shape(ops[a], other), column_shape(ops[b], other))) continue;
        mix_pair(ops, a, b, x);
        mixed = true;
      }
    }
    if (!mixed) return;
  }
}

bool io_shaped(const std::vector<ComplexMatrix>& ops) {
  for (const auto& k : ops) {
    for (int x = 0; x < 2; ++x) {
      if (std::abs(k(0, x)) > kIoTol && std::abs(k(1, x)) > kIoTol) return false;
    }
  }
  return true;
}

struct CycleSplit {
  double slack = -std::numeric_limits<double>::infinity();
  std::array<double, 5> diag{};  // a0, b2, rest2 → c1, rest1 → e3, rest3
};

// Given the share a0 of J00 on block {0,2}, greedily assigns the smallest
// admissible diagonal shares around the cycle and returns the slack of the
// closing block {3,0}.
CycleSplit split_cycle(const ComplexMatrix& j, double a0) {
  CycleSplit s;
  auto need = [](double off2, double avail) -> double {
    if (off2 <= 0.0) return 0.0;
    if (avail <= 0.0) return std::numeric_limits<double>::infinity();
    return off2 / avail;
  };
  const double j00 = j(0, 0).real(), j11 = j(1, 1).real(), j22 = j(2, 2).real(), j33 = j(3, 3).real();
  const double b2 = need(std::norm(j(0, 2)), a0);
  if (b2 > j22) return s;
  const double c1 = need(std::norm(j(1, 2)), j22 - b2);
  if (c1 > j11) return s;
  const double e3 = need(std::norm(j(1, 3)), j11 - c1);
  if (e3 > j33) return s;
  s.diag = {a0, b2, c1, e3, 0.0};
  s.slack = (j33 - e3) * (j00 - a0) - std::norm(j(0, 3));
  return s;
}

void append_block(KrausMap& map, const ComplexMatrix& j, int p, int q, double dp, double dq) {
  ComplexMatrix block(2, 2);
  block << dp, j(p, q), j(q, p), dq;
  const auto e = eig_hermitian(block);
  for (int i = 0; i < 2; ++i) {
    if (e.values[i] <= 0.0) continue;
    ComplexVector v = ComplexVector::Zero(4);
    v[p] = e.vectors(0, i) * std::sqrt(e.values[i]);
    v[q] = e.vectors(1, i) * std::sqrt(e.values[i]);
    map.ops.emplace_back(Eigen::Map<const ComplexMatrix>(v.data(), 2, 2));
  }
}

KrausMap cycle_decomposition(const ComplexMatrix& j) {
  const double j00 = j(0, 0).real();
  constexpr int kGrid = 4000;
  double best_a0 = 0.0;
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kGrid; ++i) {
    const double a0 = j00 * i / kGrid;
    const double slack = split_cycle(j, a0).slack;
    if (slack > best) {
      best = slack;
      best_a0 = a0;
    }
  }
  // Golden-section refinement around the best grid point.
  double lo = std::max(0.0, best_a0 - j00 / kGrid);
  double hi = std::min(j00, best_a0 + j00 / kGrid);
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double m1 = hi - phi * (hi - lo);
    const double m2 = lo + phi * (hi - lo);
    if (split_cycle(j, m1).slack < split_cycle(j, m2).slack) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  const double refined = 0.5 * (lo + hi);
  if (split_cycle(j, refined).slack > best) best_a0 = refined;

  const CycleSplit s = split_cycle(j, best_a0);
  const double scale = std::max(1.0, j.cwiseAbs().maxCoeff());
  if (!(s.slack >= -1e-12 * scale)) {
    throw SolverError(SolverError::Kind::kNotRepresentable,
                      "qubit_mio_to_io: channel has no IO Kraus representation (cycle slack " +
                          std::to_string(s.slack) + ")");
  }
  const double a0 = s.diag[0], b2 = s.diag[1], c1 = s.diag[2], e3 = s.diag[3];
  KrausMap map{2, 2, {}};
  append_block(map, j, 0, 2, a0, b2);
  append_block(map, j, 2, 1, j(2, 2).real() - b2, c1);
  append_block(map, j, 1, 3, j(1, 1).real() - c1, e3);
  append_block(map, j, 3, 0, j(3, 3).real() - e3, j(0, 0).real() - a0);
  return map;
}

}  // namespace

KrausChannel qubit_mio_to_io(const KrausChannel& ch) {
  if (ch.din() != 2 || ch.dout() != 2) throw PreconditionError("qubit_mio_to_io: channel is not a qubit channel");
  if (!is_mio(ch)) throw PreconditionError("qubit_mio_to_io: channel is not MIO");

  std::vector<ComplexMatrix> ops = ch.ops();
  clean_column(ops, 0);
  clean_column(ops, 1);
  if (io_shaped(ops)) {
    std::vector<ComplexMatrix> kept;
    for (auto& k : ops) {
      if (max_abs(k) > kMixTol) {
        // Flush residual round-off in the cleaned positions.
        for (int x = 0; x < 2; ++x) {
          if (std::abs(k(0, x)) <= kIoTol && std::abs(k(1, x)) > kIoTol) k(0, x) = 0.0;
          if (std::abs(k(1, x)) <= kIoTol && std::abs(k(0, x)) > kIoTol) k(1, x) = 0.0;
        }
        kept.push_back(k);
      }
    }
    KrausMap candidate{2, 2, kept};
    if (choi_distance(candidate, ch.map()) <= tol::kChoiRoundtrip) return KrausChannel(candidate);
  }

  KrausMap map = cycle_decomposition(choi(ch).mat);
  if (choi_distance(map, ch.map()) > tol::kChoiRoundtrip) {
    throw SolverError(SolverError::Kind::kNotRepresentable,
                      "qubit_mio_to_io: IO representation does not reproduce the channel");
  }
  return KrausChannel(std::move(map));
}

}  // namespace coherence
