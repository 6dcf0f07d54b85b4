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
#include <numeric>

#include "coherence/channels.hpp"
#include "coherence/errors.hpp"

namespace coherence {
namespace {

ComplexMatrix unit(int d, int j, int k) {
  ComplexMatrix e = ComplexMatrix::Zero(d, d);
  e(j, k) = 1.0;
  return e;
}

// Row of the single nonzero entry in column x, -1 for a zero column,
// -2 when the column has several nonzero entries.
int column_row(const ComplexMatrix& k, int x, double tol) {
  int row = -1;
  for (int y = 0; y < k.rows(); ++y) {
    if (std::abs(k(y, x)) <= tol) continue;
    if (row >= 0) return -2;
    row = y;
  }
  return row;
}

bool one_per_column(const ComplexMatrix& k, double tol) {
  for (int x = 0; x < k.cols(); ++x) {
    if (column_row(k, x, tol) == -2) return false;
  }
  return true;
}

bool one_per_row(const ComplexMatrix& k, double tol) {
  for (int y = 0; y < k.rows(); ++y) {
    int count = 0;
    for (int x = 0; x < k.cols(); ++x) count += std::abs(k(y, x)) > tol;
    if (count > 1) return false;
  }
  return true;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool is_mio(const KrausChannel& ch, double tol) {
  for (int x = 0; x < ch.din(); ++x) {
    const ComplexMatrix out = apply_map(ch.map(), unit(ch.din(), x, x));
    if (max_abs(out - diagonal_part(out)) > tol) return false;
  }
  return true;
}

bool is_dio(const KrausChannel& ch, double tol) {
  if (!is_mio(ch, tol)) return false;
  for (int x = 0; x < ch.din(); ++x) {
    for (int xp = 0; xp < ch.din(); ++xp) {
      if (x == xp) continue;
      const ComplexMatrix out = apply_map(ch.map(), unit(ch.din(), x, xp));
      if (out.diagonal().cwiseAbs().maxCoeff() > tol) return false;
    }
  }
  return true;
}

bool is_covariant_under_dephasing(const KrausChannel& ch, double tol) {
  const int d = ch.din();
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      const ComplexMatrix b = unit(d, j, k);
      const ComplexMatrix lhs = diagonal_part(apply_map(ch.map(), b));
      const ComplexMatrix rhs = apply_map(ch.map(), diagonal_part(b));
      if (trace_norm(lhs - rhs) > tol) return false;
    }
  }
  return true;
}

bool is_io_rep(const KrausChannel& ch, double tol) {
  return std::all_of(ch.ops().begin(), ch.ops().end(),
                     [&](const ComplexMatrix& k) { return one_per_column(k, tol); });
}

bool is_sio_rep(const KrausChannel& ch, double tol) {
  if (ch.din() != ch.dout()) throw PreconditionError("is_sio_rep: channel is not square");
  return std::all_of(ch.ops().begin(), ch.ops().end(), [&](const ComplexMatrix& k) {
    return one_per_column(k, tol) && one_per_row(k, tol);
  });
}

bool is_sio_special_rep(const KrausChannel& ch, double tol) {
  if (!is_io_rep(ch, tol)) return false;
  const int din = ch.din();
  const int dout = ch.dout();
  const int m = static_cast<int>(ch.size());

  // rows[a][x]: target row of column x under operator a (-1 if zero).
  std::vector<std::vector<int>> rows(m, std::vector<int>(din));
  for (int a = 0; a < m; ++a) {
    for (int x = 0; x < din; ++x) rows[a][x] = column_row(ch.ops()[a], x, tol);
  }

  // Columns sharing a row in any operator must share a level set of f.
  UnionFind uf(din);
  for (int a = 0; a < m; ++a) {
    for (int x = 0; x < din; ++x) {
      for (int xp = x + 1; xp < din; ++xp) {
        if (rows[a][x] >= 0 && rows[a][x] == rows[a][xp]) uf.join(x, xp);
      }
    }
  }
  // Within a class every operator must send its nonzero columns to one row.
  std::vector<int> classes;
  for (int x = 0; x < din; ++x) {
    if (uf.find(x) == x) classes.push_back(x);
  }
  const int nc = static_cast<int>(classes.size());
  // signature[c][a]: the common row of class c under operator a, or -1.
  std::vector<std::vector<int>> signature(nc, std::vector<int>(m, -1));
  for (int c = 0; c < nc; ++c) {
    for (int x = 0; x < din; ++x) {
      if (uf.find(x) != classes[c]) continue;
      for (int a = 0; a < m; ++a) {
        if (rows[a][x] < 0) continue;
        if (signature[c][a] >= 0 && signature[c][a] != rows[a][x]) return false;
        signature[c][a] = rows[a][x];
      }
    }
  }
  if (nc <= dout) return true;

  // More classes than output levels: merge classes whose rows agree
  // wherever both are defined and that never share a row otherwise.
  std::vector<std::vector<int>> groups;
  std::function<bool(int)> place = [&](int c) {
    if (c == nc) return true;
    auto compatible = [&](const std::vector<int>& sig_a, const std::vector<int>& sig_b) {
      for (int a = 0; a < m; ++a) {
        if (sig_a[a] >= 0 && sig_b[a] >= 0 && sig_a[a] != sig_b[a]) return false;
      }
      return true;
    };
    for (auto& g : groups) {
      bool ok = true;
      for (int member : g) {
        if (!compatible(signature[member], signature[c])) ok = false;
      }
      if (!ok) continue;
      g.push_back(c);
      if (place(c + 1)) return true;
      g.pop_back();
    }
    if (static_cast<int>(groups.size()) < dout) {
      groups.push_back({c});
      if (place(c + 1)) return true;
      groups.pop_back();
    }
    return false;
  };
  return place(0);
}

bool is_pio_rep(const KrausChannel& ch, double tol) {
  if (ch.din() != ch.dout()) throw PreconditionError("is_pio_rep: channel is not square");
  const int d = ch.din();
  const int m = static_cast<int>(ch.size());
  if (d > 8 || m > 12) throw PreconditionError("is_pio_rep: search limited to d <= 8, 12 operators");

  // Each operator must be √w times a partial phase-permutation.
  std::vector<double> modulus(m, 0.0);
  std::vector<unsigned> support(m, 0u);
  for (int a = 0; a < m; ++a) {
    const ComplexMatrix& k = ch.ops()[a];
    if (!one_per_column(k, tol) || !one_per_row(k, tol)) return false;
    double mod = -1.0;
    for (int x = 0; x < d; ++x) {
      const int y = column_row(k, x, tol);
      if (y < 0) continue;
      const double v = std::abs(k(y, x));
      if (mod < 0.0) {
        mod = v;
      } else if (std::abs(v - mod) > tol) {
        return false;
      }
      support[a] |= 1u << x;
    }
    modulus[a] = std::max(mod, 0.0);
  }

  const unsigned full = (1u << d) - 1u;
  std::vector<char> used(m, 0);
  // Zero operators contribute nothing and may join any group.
  for (int a = 0; a < m; ++a) {
    if (support[a] == 0u) used[a] = 1;
  }

  // Exact cover: each group uses one modulus and its supports partition the basis.
  std::function<bool()> next_group;
  std::function<bool(double, unsigned, int)> extend = [&](double mod, unsigned covered, int from) {
    if (covered == full) return next_group();
    for (int a = from; a < m; ++a) {
      if (used[a] || (support[a] & covered) || std::abs(modulus[a] - mod) > tol) continue;
      used[a] = 1;
      if (extend(mod, covered | support[a], a + 1)) return true;
      used[a] = 0;
    }
    return false;
  };
  next_group = [&]() {
    const auto it = std::find(used.begin(), used.end(), 0);
    if (it == used.end()) return true;
    const int a = static_cast<int>(it - used.begin());
    used[a] = 1;
    const bool ok = extend(modulus[a], support[a], a + 1);
    if (!ok) used[a] = 0;
    return ok;
  };
  return next_group();
}

}  // namespace coherence
