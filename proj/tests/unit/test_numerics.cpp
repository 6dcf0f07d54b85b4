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
#include <functional>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "coherence/errors.hpp"
#include "coherence/numerics.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace coherence;
using coherence::testing::distance;

namespace {

ComplexMatrix random_unitary(int n, Rng& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(rng.ginibre(n, n));
  return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

// Spectrum known by construction: H = U diag(λ) U†.
ComplexMatrix with_spectrum(const RealVector& lambda, Rng& rng) {
  const ComplexMatrix u = random_unitary(static_cast<int>(lambda.size()), rng);
  return u * lambda.cast<Complex>().asDiagonal() * u.adjoint();
}

// Minimum of cᵀx over the vertices of {aᵀx ≥ b, x ≥ 0}.
double vertex_enumeration(const LinearProgram& lp) {
  const auto n = lp.objective.size();
  std::vector<Cut> rows = lp.cuts;
  for (Eigen::Index i = 0; i < n; ++i) rows.push_back({RealVector::Unit(n, i), 0.0});
  const int m = static_cast<int>(rows.size());
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> pick(n);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n) {
      RealMatrix a(n, n);
      RealVector b(n);
      for (int k = 0; k < n; ++k) {
        a.row(k) = rows[pick[k]].coeffs.transpose();
        b[k] = rows[pick[k]].bound;
      }
      Eigen::FullPivLU<RealMatrix> lu(a);
      if (lu.rank() < n) return;
      const RealVector x = lu.solve(b);
      for (const auto& r : rows) {
        if (r.coeffs.dot(x) < r.bound - 1e-9) return;
      }
      best = std::min(best, lp.objective.dot(x));
      return;
    }
    for (int i = start; i < m; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace

TEST_CASE("eigenvalues match a spectrum fixed by construction") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 7;
    RealVector lambda(n);
    for (int i = 0; i < n; ++i) lambda[i] = rng.uniform(-3.0, 3.0);
    if (trial % 5 == 0 && n > 2) lambda[1] = lambda[0];  // degenerate pair
    const ComplexMatrix h = with_spectrum(lambda, rng);
    const EigenDecomposition e = eig_hermitian(h);
    std::sort(lambda.data(), lambda.data() + n);
    CHECK((e.values - lambda).cwiseAbs().maxCoeff() < 1e-11);
    CHECK(distance(e.vectors.adjoint() * e.vectors, ComplexMatrix::Identity(n, n)) < 1e-11);
    CHECK(distance(h * e.vectors, e.vectors * e.values.cast<Complex>().asDiagonal()) < 1e-10);
  }
}

TEST_CASE("eigenvalues agree with a library solver on random Hermitian matrices") {
  Rng rng(12);
  for (int n = 2; n <= 9; ++n) {
    const ComplexMatrix g = rng.ginibre(n, n);
    const ComplexMatrix h = hermitian_part(g);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> ref(h);
    CHECK((eig_hermitian(h).values - ref.eigenvalues()).cwiseAbs().maxCoeff() < 1e-11);
  }
}

TEST_CASE("eigensolver rejects non-Hermitian input") {
  ComplexMatrix m(2, 2);
  m << 1, 2, 0, 1;
  CHECK_THROWS_AS(eig_hermitian(m), PreconditionError);
  CHECK_THROWS_AS(eig_hermitian(ComplexMatrix::Zero(2, 3)), PreconditionError);
}

TEST_CASE("psd helpers") {
  Rng rng(13);
  const ComplexMatrix g = rng.ginibre(4, 2);
  const ComplexMatrix p = g * g.adjoint();  // rank 2
  CHECK(is_psd(p, 1e-12));
  CHECK_FALSE(is_psd(-p, 1e-12));
  const ComplexMatrix root = mat_power_psd(p, 0.5);
  CHECK(distance(root * root, p) < 1e-10);
  // Support-restricted inverse is the pseudo-inverse.
  const ComplexMatrix inv = mat_power_psd(p, -1.0);
  CHECK(distance(p * inv * p, p) < 1e-9);
  const ComplexMatrix m = p - ComplexMatrix::Identity(4, 4);
  CHECK(trace_norm(m) == doctest::Approx(m.jacobiSvd().singularValues().sum()));
}

TEST_CASE("kron and max_abs") {
  ComplexMatrix a(2, 2), b(1, 2);
  a << 1, 2, 3, 4;
  b << 0, Complex(0, 1);
  const ComplexMatrix k = kron(a, b);
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 4);
  CHECK(k(1, 3) == Complex(0, 4));
  CHECK(max_abs(k) == doctest::Approx(4.0));
}

TEST_CASE("simplex matches vertex enumeration on bounded programs") {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 3;
    const int m = 1 + trial % 4;
    LinearProgram lp;
    lp.objective = RealVector(n);
    for (int i = 0; i < n; ++i) lp.objective[i] = rng.uniform(0.1, 2.0);
    for (int k = 0; k < m; ++k) {
      RealVector a(n);
      for (int i = 0; i < n; ++i) a[i] = rng.uniform(-0.5, 1.5);
      lp.cuts.push_back({a, rng.uniform(-1.0, 2.0)});
    }
    const double oracle = vertex_enumeration(lp);
    if (std::isinf(oracle)) {
      CHECK_THROWS_AS(solve_lp(lp), SolverError);
      continue;
    }
    const LpSolution sol = solve_lp(lp);
    CHECK(sol.value == doctest::Approx(oracle).epsilon(1e-9));
    CHECK(lp.objective.dot(sol.x) == doctest::Approx(sol.value).epsilon(1e-9));
    for (const auto& c : lp.cuts) CHECK(c.coeffs.dot(sol.x) >= c.bound - 1e-9);
    CHECK(sol.x.minCoeff() >= -1e-12);
  }
}

TEST_CASE("simplex reports infeasible and unbounded programs") {
  LinearProgram infeasible{RealVector::Ones(1), {{RealVector::Constant(1, 1.0), 1.0}, {RealVector::Constant(1, -1.0), 0.0}}};
  try {
    solve_lp(infeasible);
    FAIL("expected SolverError");
  } catch (const SolverError& e) {
    CHECK(e.kind() == SolverError::Kind::kInfeasible);
  }
  LinearProgram unbounded{RealVector::Constant(1, -1.0), {{RealVector::Constant(1, 1.0), 1.0}}};
  try {
    solve_lp(unbounded);
    FAIL("expected SolverError");
  } catch (const SolverError& e) {
    CHECK(e.kind() == SolverError::Kind::kUnbounded);
  }
}

TEST_CASE("Birkhoff decomposition of generated doubly stochastic matrices") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 6;
    const int k = 1 + trial % 5;
    const RealVector w = rng.simplex_point(k);
    RealMatrix d = RealMatrix::Zero(n, n);
    for (int j = 0; j < k; ++j) d += w[j] * permutation_matrix(rng.permutation(n));
    const BirkhoffDecomposition bd = birkhoff_decompose(d);
    CHECK((bd.reconstruct(n) - d).cwiseAbs().maxCoeff() < 1e-12);
    double total = 0.0;
    for (const auto& t : bd.terms) {
      CHECK(t.weight > 0.0);
      total += t.weight;
      std::vector<int> sorted = t.perm;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> iota(n);
      std::iota(iota.begin(), iota.end(), 0);
      CHECK(sorted == iota);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(static_cast<int>(bd.terms.size()) <= std::max(1, n * n - 2 * n + 2));
  }
}

TEST_CASE("Birkhoff decomposition rejects non doubly stochastic input") {
  RealMatrix d(2, 2);
  d << 0.7, 0.3, 0.4, 0.6;
  CHECK_THROWS_AS(birkhoff_decompose(d), PreconditionError);
}

TEST_CASE("seeded generator is deterministic") {
  Rng a(5), b(5);
  CHECK(distance(a.ginibre(3, 3), b.ginibre(3, 3)) == 0.0);
  const RealVector p = a.simplex_point(5);
  CHECK(p.sum() == doctest::Approx(1.0));
  CHECK(p.minCoeff() >= 0.0);
  const ComplexMatrix u = a.incoherent_unitary(4);
  CHECK(distance(u.adjoint() * u, ComplexMatrix::Identity(4, 4)) < 1e-14);
  for (int i = 0; i < 4; ++i) CHECK((u.row(i).array().abs() > 0.5).count() == 1);
}
