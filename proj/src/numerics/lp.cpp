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

// The primal program  min cᵀx, Ax ≥ b, x ≥ 0  is solved through its dual
//   max bᵀy,  Aᵀy ≤ c,  y ≥ 0
// which has one row per primal variable. Cutting-plane callers add many cuts
// to a handful of variables, so the dual tableau stays short and wide.
// The primal point is recovered from the optimal dual basis.

#include <cmath>
#include <limits>
#include <string>

#include "coherence/errors.hpp"
#include "coherence/numerics.hpp"

namespace coherence {
namespace {

constexpr double kPivotEps = 1e-11;
constexpr int kMaxPivots = 200000;

enum class SimplexStatus { kOptimal, kUnbounded };

// Minimizes cost·z subject to the equality system held in `t`:
// rows 0..rows-1 store [E | g], basis[r] is the basic column of row r.
// `allowed` masks columns that may enter.
class Tableau {
 public:
  Tableau(RealMatrix body, std::vector<int> basis)
      : t_(std::move(body)), basis_(std::move(basis)) {}

  int rows() const { return static_cast<int>(t_.rows()); }
  int cols() const { return static_cast<int>(t_.cols()) - 1; }
  const std::vector<int>& basis() const { return basis_; }
  double rhs(int r) const { return t_(r, cols()); }
  double at(int r, int c) const { return t_(r, c); }

  SimplexStatus minimize(const RealVector& cost, const std::vector<bool>& allowed) {
    for (int iter = 0; iter < kMaxPivots; ++iter) {
      // Reduced costs: cost_j − c_Bᵀ column_j.
      int entering = -1;
      for (int j = 0; j < cols(); ++j) {
        if (!allowed[j] || is_basic(j)) continue;
        double reduced = cost[j];
        for (int r = 0; r < rows(); ++r) reduced -= cost[basis_[r]] * t_(r, j);
        if (reduced < -kPivotEps * std::max(1.0, std::abs(cost[j]))) {
          entering = j;  // Bland: lowest index
          break;
        }
      }
      if (entering < 0) return SimplexStatus::kOptimal;

      int leaving_row = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int r = 0; r < rows(); ++r) {
        const double a = t_(r, entering);
        if (a <= kPivotEps) continue;
        const double ratio = rhs(r) / a;
        if (ratio < best_ratio - 1e-14 ||
            (std::abs(ratio - best_ratio) <= 1e-14 && leaving_row >= 0 &&
             basis_[r] < basis_[leaving_row])) {
          best_ratio = ratio;
          leaving_row = r;
        }
      }
      if (leaving_row < 0) return SimplexStatus::kUnbounded;
      pivot(leaving_row, entering);
    }
    throw SolverError(SolverError::Kind::kNoConvergence, "solve_lp: pivot limit exceeded");
  }

  void pivot(int row, int col) {
    t_.row(row) /= t_(row, col);
    for (int r = 0; r < rows(); ++r) {
      if (r == row) continue;
      const double f = t_(r, col);
      if (f != 0.0) t_.row(r) -= f * t_.row(row);
    }
    basis_[row] = col;
  }

  bool is_basic(int col) const {
    for (int b : basis_) {
      if (b == col) return true;
    }
    return false;
  }

 private:
  RealMatrix t_;
  std::vector<int> basis_;
};

struct DualResult {
  SimplexStatus status;
  std::vector<int> basis;
};

// Solves max bᵀy, Aᵀy ≤ c, y ≥ 0 in equality form over columns [y | slack].
// Returns status of phase 2, or throws kInfeasible-style markers through
// `dual_infeasible`.
DualResult solve_dual(const RealMatrix& at, const RealVector& b, const RealVector& c,
                      bool& dual_infeasible) {
  const int n = static_cast<int>(at.rows());  // primal variables
  const int m = static_cast<int>(at.cols());  // cuts
  const int structural = m + n;

  std::vector<int> artificial_rows;
  for (int j = 0; j < n; ++j) {
    if (c[j] < 0) artificial_rows.push_back(j);
  }
  const int total = structural + static_cast<int>(artificial_rows.size());

  RealMatrix body = RealMatrix::Zero(n, total + 1);
  std::vector<int> basis(n);
  int next_artificial = structural;
  for (int j = 0; j < n; ++j) {
    const double sign = c[j] < 0 ? -1.0 : 1.0;
    body.block(j, 0, 1, m) = sign * at.row(j);
    body(j, m + j) = sign;
    body(j, total) = sign * c[j];
    if (c[j] < 0) {
      body(j, next_artificial) = 1.0;
      basis[j] = next_artificial++;
    } else {
      basis[j] = m + j;
    }
  }
  Tableau tab(std::move(body), basis);

  dual_infeasible = false;
  if (!artificial_rows.empty()) {
    RealVector phase1 = RealVector::Zero(total);
    phase1.tail(total - structural).setOnes();
    std::vector<bool> all(total, true);
    tab.minimize(phase1, all);
    double infeasibility = 0.0;
    for (int r = 0; r < n; ++r) {
      if (tab.basis()[r] >= structural) infeasibility += tab.rhs(r);
    }
    if (infeasibility > 1e-9 * std::max(1.0, c.cwiseAbs().maxCoeff())) {
      dual_infeasible = true;
      return {SimplexStatus::kOptimal, {}};
    }
    // Drive zero-level artificials out of the basis.
    for (int r = 0; r < n; ++r) {
      if (tab.basis()[r] < structural) continue;
      int col = -1;
      double best = kPivotEps;
      for (int j = 0; j < structural; ++j) {
        if (std::abs(tab.at(r, j)) > best && !tab.is_basic(j)) {
          best = std::abs(tab.at(r, j));
          col = j;
        }
      }
      if (col >= 0) tab.pivot(r, col);
    }
  }

  RealVector phase2 = RealVector::Zero(total);
  phase2.head(m) = -b;
  std::vector<bool> structural_only(total, false);
  for (int j = 0; j < structural; ++j) structural_only[j] = true;
  const SimplexStatus status = tab.minimize(phase2, structural_only);
  return {status, tab.basis()};
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const int n = static_cast<int>(lp.objective.size());
  const int m = static_cast<int>(lp.cuts.size());
  if (n == 0) throw PreconditionError("solve_lp: empty objective");

  RealMatrix at(n, m);  // Aᵀ
  RealVector b(m);
  for (int i = 0; i < m; ++i) {
    if (lp.cuts[i].coeffs.size() != n) {
      throw PreconditionError("solve_lp: cut " + std::to_string(i) + " has wrong length");
    }
    at.col(i) = lp.cuts[i].coeffs;
    b[i] = lp.cuts[i].bound;
  }
  const RealVector& c = lp.objective;

  bool dual_infeasible = false;
  const DualResult dual = solve_dual(at, b, c, dual_infeasible);
  if (dual_infeasible) {
    // Primal is unbounded or infeasible; decide with a zero objective.
    bool homogeneous_infeasible = false;
    const DualResult probe = solve_dual(at, b, RealVector::Zero(n), homogeneous_infeasible);
    if (probe.status == SimplexStatus::kUnbounded) {
      throw SolverError(SolverError::Kind::kInfeasible, "solve_lp: constraints are infeasible");
    }
    throw SolverError(SolverError::Kind::kUnbounded, "solve_lp: objective is unbounded below");
  }
  if (dual.status == SimplexStatus::kUnbounded) {
    throw SolverError(SolverError::Kind::kInfeasible, "solve_lp: constraints are infeasible");
  }

  // x_j = c_B B^{-1} on the original (unsigned) columns [Aᵀ | I].
  RealMatrix basis_matrix(n, n);
  RealVector basis_cost(n);
  for (int r = 0; r < n; ++r) {
    const int col = dual.basis[r];
    if (col < m) {
      basis_matrix.col(r) = at.col(col);
      basis_cost[r] = b[col];
    } else {
      basis_matrix.col(r) = RealVector::Unit(n, col - m);
      basis_cost[r] = 0.0;
    }
  }
  LpSolution sol;
  sol.x = basis_matrix.transpose().partialPivLu().solve(basis_cost);
  for (int j = 0; j < n; ++j) sol.x[j] = std::max(0.0, sol.x[j]);
  sol.value = c.dot(sol.x);
  return sol;
}

}  // namespace coherence
