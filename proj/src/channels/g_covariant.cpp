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

#include "coherence/channels.hpp"
#include "coherence/errors.hpp"

namespace coherence {
namespace {

ChoiMatrix covariant_choi(const GCovariantParams& p) {
  const int d = p.d;
  const int n = d * d;
  ComplexMatrix j = ComplexMatrix::Zero(n, n);
  const double s = 1.0 / (d - 1);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      // Ω = Σ |aa⟩⟨bb| from the identity and the −ρ part of dΔρ − ρ.
      j(a * d + a, b * d + b) += p.q1 - p.q3 * s;
      // Tr(ρ)·I − Δρ on |a⟩⟨a| leaves I − |a⟩⟨a|.
      if (a != b) j(a * d + b, a * d + b) += p.q2 * s;
    }
    j(a * d + a, a * d + a) += p.q3 * s * d;
  }
  return {d, d, j};
}

}  // namespace

KrausChannel g_covariant_channel(const GCovariantParams& params) {
  if (params.d < 2) throw PreconditionError("g_covariant_channel: d must be at least 2");
  if (std::abs(params.q1 + params.q2 + params.q3 - 1.0) > 1e-12) {
    throw PreconditionError("g_covariant_channel: weights must sum to one");
  }
  return channel_from_choi(covariant_choi(params));
}

std::optional<GCovariantParams> fit_g_covariant(const KrausChannel& ch, double tol) {
  if (ch.din() != ch.dout() || ch.din() < 2) return std::nullopt;
  const int d = ch.din();
  ComplexMatrix e00 = ComplexMatrix::Zero(d, d);
  e00(0, 0) = 1.0;
  ComplexMatrix e01 = ComplexMatrix::Zero(d, d);
  e01(0, 1) = 1.0;
  const double a = apply_map(ch.map(), e00)(0, 0).real();
  const Complex c_full = apply_map(ch.map(), e01)(0, 1);
  if (std::abs(c_full.imag()) > tol) return std::nullopt;
  const double c = c_full.real();
  if (c > a + tol || c < -a / (d - 1) - tol || a > 1.0 + tol) return std::nullopt;

  GCovariantParams p;
  p.d = d;
  p.q1 = (a + c * (d - 1)) / d;
  p.q2 = 1.0 - a;
  p.q3 = (a - c) * (d - 1) / d;
  if (max_abs(covariant_choi(p).mat - choi(ch).mat) > tol) return std::nullopt;
  return p;
}

GCovariantParams random_g_covariant_params(int d, Rng& rng) {
  const RealVector q = rng.simplex_point(3);
  return {q[0], q[1], q[2], d};
}

}  // namespace coherence
