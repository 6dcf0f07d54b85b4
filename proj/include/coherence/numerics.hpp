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

#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace coherence {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Tolerance ladder shared by every module.
namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kReconstruction = 1e-9;
inline constexpr double kState = 1e-10;
inline constexpr double kCptp = 1e-9;
inline constexpr double kPredicate = 1e-9;
inline constexpr double kChoiRoundtrip = 1e-8;
inline constexpr double kZeroEigenvalue = 1e-12;
inline constexpr double kKrausRank = 1e-10;
}  // namespace tol

// ---------------------------------------------------------------------------
// Basic matrix helpers

void require_square(const ComplexMatrix& m, const char* what);
void require_finite(const ComplexMatrix& m, const char* what);

double max_abs(const ComplexMatrix& m);

/// True when ‖M − M†‖_max ≤ tol·max(1, ‖M‖_max).
bool is_hermitian(const ComplexMatrix& m, double tol = tol::kHermitian);

/// (M + M†)/2.
ComplexMatrix hermitian_part(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// ---------------------------------------------------------------------------
// Hermitian eigenproblem

struct EigenDecomposition {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // column j pairs with values[j]
};

/// Cyclic complex Jacobi. Throws PreconditionError if `m` is not square or
/// not Hermitian within tol::kHermitian (relative to its largest entry).
EigenDecomposition eig_hermitian(const ComplexMatrix& m);

double min_eigenvalue(const ComplexMatrix& m);
double max_eigenvalue(const ComplexMatrix& m);

bool is_psd(const ComplexMatrix& m, double tol);

/// Support-restricted power of a PSD matrix: eigenvalues below
/// tol::kZeroEigenvalue are mapped to zero for every exponent.
ComplexMatrix mat_power_psd(const ComplexMatrix& m, double alpha);

/// Σ f(λ_i)|v_i⟩⟨v_i| over eigenvalues above tol::kZeroEigenvalue; used for
/// matrix logarithms on the support.
ComplexMatrix log2_psd_on_support(const ComplexMatrix& m);

/// Sum of singular values.
double trace_norm(const ComplexMatrix& m);

// ---------------------------------------------------------------------------
// Linear programming

/// One constraint aᵀx ≥ b.
struct Cut {
  RealVector coeffs;
  double bound = 0.0;
};

/// minimize cᵀx subject to every cut and x ≥ 0.
struct LinearProgram {
  RealVector objective;
  std::vector<Cut> cuts;
};

struct LpSolution {
  RealVector x;
  double value = 0.0;
};

/// Dense simplex with Bland's rule. Throws SolverError (kInfeasible or
/// kUnbounded).
LpSolution solve_lp(const LinearProgram& lp);

// ---------------------------------------------------------------------------
// Birkhoff–von Neumann

/// perm[i] is the column holding the single one in row i.
using Permutation = std::vector<int>;

RealMatrix permutation_matrix(const Permutation& perm);

struct BirkhoffTerm {
  double weight = 0.0;
  Permutation perm;
};

struct BirkhoffDecomposition {
  std::vector<BirkhoffTerm> terms;

  RealMatrix reconstruct(int n) const;
};

/// Greedy bottleneck-matching extraction. Throws PreconditionError when `d`
/// is not doubly stochastic within 1e-9.
BirkhoffDecomposition birkhoff_decompose(const RealMatrix& d);

// ---------------------------------------------------------------------------
// Seeded randomness

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0);
  double normal();
  int uniform_int(int lo, int hi);  // inclusive bounds
  Complex complex_normal();

  /// Entries i.i.d. standard complex Gaussian.
  ComplexMatrix ginibre(int rows, int cols);
  Permutation permutation(int n);
  /// π·u with π a uniform permutation and u uniform diagonal phases.
  ComplexMatrix incoherent_unitary(int d);
  /// Point drawn uniformly from the probability simplex.
  RealVector simplex_point(int n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace coherence
