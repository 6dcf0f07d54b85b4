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

#include "coherence/errors.hpp"
#include "coherence/states.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace coherence;
using coherence::testing::distance;

namespace {

DensityMatrix plus_state() { return PureState::from_probabilities(RealVector::Constant(2, 0.5)).density(); }

}  // namespace

TEST_CASE("density matrix validation") {
  ComplexMatrix m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  CHECK_NOTHROW(DensityMatrix{m});
  m(0, 1) = 0.6;
  CHECK_THROWS_AS(DensityMatrix{m}, ValidationError);  // not Hermitian
  m << 0.6, 0.0, 0.0, 0.6;
  CHECK_THROWS_AS(DensityMatrix{m}, ValidationError);  // trace
  m << 1.2, 0.0, 0.0, -0.2;
  CHECK_THROWS_AS(DensityMatrix{m}, ValidationError);  // negative eigenvalue
  CHECK_THROWS_AS(PureState(ComplexVector::Ones(2)), ValidationError);
}

TEST_CASE("dephasing") {
  const DensityMatrix plus = plus_state();
  CHECK(distance(dephase(plus).mat(), 0.5 * ComplexMatrix::Identity(2, 2)) < 1e-15);
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    const DensityMatrix rho = random_density(1 + i % 5, rng);
    const DensityMatrix d1 = dephase(rho);
    CHECK(distance(dephase(d1).mat(), d1.mat()) == 0.0);
    CHECK(distance(d1.mat().diagonal(), rho.mat().diagonal()) == 0.0);
    CHECK(is_incoherent(d1));
    CHECK(distance(partial_dephase(rho, 0.0).mat(), rho.mat()) < 1e-15);
    CHECK(distance(partial_dephase(rho, 1.0).mat(), d1.mat()) < 1e-15);
    const double a = rng.uniform(), b = rng.uniform();
    CHECK(distance(partial_dephase(partial_dephase(rho, a), b).mat(),
                   partial_dephase(partial_dephase(rho, b), a).mat()) < 1e-12);
  }
  ComplexMatrix half(2, 2);
  half << 0.5, 0.25, 0.25, 0.5;
  CHECK(distance(partial_dephase(plus, 0.5).mat(), half) < 1e-15);
  CHECK_THROWS_AS(partial_dephase(plus, 1.5), PreconditionError);
  CHECK_FALSE(is_incoherent(plus));
}

TEST_CASE("qubit standard form") {
  const QubitStandardForm a = qubit_standard_form(plus_state());
  CHECK(a.p == doctest::Approx(0.5));
  CHECK(a.r == doctest::Approx(0.5));
  CHECK(distance(a.gauge, ComplexMatrix::Identity(2, 2)) < 1e-15);

  ComplexMatrix m(2, 2);
  m << 0.3, Complex(0, 0.1), Complex(0, -0.1), 0.7;
  const DensityMatrix rho(m);
  const QubitStandardForm b = qubit_standard_form(rho);
  CHECK(b.p == doctest::Approx(0.7));
  CHECK(b.r == doctest::Approx(0.1));
  CHECK(distance(b.gauge * m * b.gauge.adjoint(), qubit_state(0.7, 0.1).mat()) < 1e-15);

  const QubitStandardForm c = qubit_standard_form(qubit_state(0.5, 0.0));
  CHECK(c.r == 0.0);
  CHECK(distance(c.gauge, ComplexMatrix::Identity(2, 2)) == 0.0);

  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const DensityMatrix r = random_density(2, rng);
    const QubitStandardForm f = qubit_standard_form(r);
    CHECK(f.p >= 0.5);
    CHECK(f.r * f.r <= f.p * (1 - f.p) + 1e-12);
    CHECK(distance(f.gauge * r.mat() * f.gauge.adjoint(), qubit_state(f.p, f.r).mat()) < 1e-14);
    // The gauge maps diagonal states to diagonal states.
    const ComplexMatrix g = f.gauge * diagonal_part(r.mat()) * f.gauge.adjoint();
    CHECK(distance(g, diagonal_part(g)) == 0.0);
  }
  CHECK_THROWS_AS(qubit_standard_form(random_density(3, 1)), PreconditionError);
}

TEST_CASE("maximally correlated embedding") {
  const DensityMatrix e = mc_embed(plus_state());
  ComplexVector bell = ComplexVector::Zero(4);
  bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
  CHECK(distance(e.mat(), bell * bell.adjoint()) < 1e-15);
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    const DensityMatrix rho = random_density(3, rng);
    const DensityMatrix m = mc_embed(rho);
    CHECK((m.mat() * m.mat()).trace().real() == doctest::Approx((rho.mat() * rho.mat()).trace().real()));
    const DensityMatrix md = mc_embed(dephase(rho));
    CHECK(distance(md.mat(), diagonal_part(md.mat())) == 0.0);
  }
}

TEST_CASE("Schmidt vectors") {
  RealVector p(3);
  p << 0.2, 0.3, 0.5;
  const SchmidtVector s = schmidt_vector(PureState::from_probabilities(p));
  CHECK(s[0] == doctest::Approx(0.5));
  CHECK(s[1] == doctest::Approx(0.3));
  CHECK(s[2] == doctest::Approx(0.2));
  CHECK(s[7] == 0.0);
  CHECK_THROWS_AS(SchmidtVector(RealVector::Constant(2, 0.4)), ValidationError);
}

TEST_CASE("random states are deterministic and valid") {
  CHECK(distance(random_density(4, 9).mat(), random_density(4, 9).mat()) == 0.0);
  CHECK(distance(random_pure(4, 9).amps(), random_pure(4, 9).amps()) == 0.0);
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const DensityMatrix rho = random_density(2, rng);
    CHECK(min_eigenvalue(rho.mat()) >= -1e-12);
    CHECK(rho.mat().trace().real() == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(random_density(0, 1), PreconditionError);
}
