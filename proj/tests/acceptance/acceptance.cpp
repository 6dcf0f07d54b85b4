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

// Acceptance run: one line per criterion, "PASS"/"FAIL", id, runtime and a
// short detail. `acceptance N` runs criterion N only. Exit status is the
// number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "coherence/cli.hpp"
#include "coherence/covariance.hpp"
#include "coherence/errors.hpp"
#include "coherence/harness.hpp"
#include "coherence/monotones.hpp"
#include "coherence/transforms.hpp"

using namespace coherence;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) { return 0.5 * trace_norm(a - b); }

ComplexVector plus_vector(int d) { return ComplexVector::Constant(d, 1.0 / std::sqrt(double(d))); }

RealVector fig1_target() {
  RealVector q(3);
  q << 8.0 / 9.0, 1.0 / 18.0, 1.0 / 18.0;
  return q;
}

// (a, b, b) with a² + 2b² = 1 and a + 2b = s.
RealVector target_with_sqrt_sum(double s) {
  const double b = (4.0 * s - std::sqrt(24.0 - 8.0 * s * s)) / 12.0;
  const double a = s - 2.0 * b;
  RealVector q(3);
  q << a * a, b * b, b * b;
  return q;
}

std::pair<PureState, PureState> majorized_pair(int d, Rng& rng) {
  const PureState phi = random_pure(d, rng);
  RealMatrix dmat = RealMatrix::Zero(d, d);
  const RealVector w = rng.simplex_point(3);
  for (int k = 0; k < 3; ++k) dmat += w[k] * permutation_matrix(rng.permutation(d));
  const RealVector p = dmat * phi.probabilities();
  ComplexVector a(d);
  for (int i = 0; i < d; ++i) a[i] = std::polar(std::sqrt(p[i]), rng.uniform(0.0, 2.0 * std::numbers::pi));
  return {PureState::normalized(a), phi};
}

DensityMatrix dense_state(int d, Rng& rng) {
  for (;;) {
    const DensityMatrix rho = random_density(d, rng);
    bool ok = true;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) ok = ok && std::abs(rho.mat()(i, j)) > 1e-3;
    }
    if (ok) return rho;
  }
}

Outcome example_channel() {
  const KrausChannel ch = qutrit_mio_example_channel();
  ComplexMatrix sum = ComplexMatrix::Zero(2, 2);
  for (const auto& m : ch.ops()) sum += m.adjoint() * m;
  const double completeness = (sum - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff();
  ComplexVector t(3);
  t << 4.0, 1.0, 1.0;
  t.normalize();
  double prop = 0.0;
  for (const auto& m : ch.ops()) {
    const ComplexVector v = m * plus_vector(2);
    prop = std::max(prop, (v - t.dot(v) * t).norm());
  }
  const bool mio = is_mio(ch), io = is_io_rep(ch), dio = is_dio(ch);
  return {completeness <= 1e-10 && prop <= 1e-10 && mio && !io && !dio,
          fmt("completeness %.1e, proportionality %.1e", completeness, prop) + ", mio " + (mio ? "yes" : "no") +
              ", io_rep " + (io ? "yes" : "no") + ", dio " + (dio ? "yes" : "no")};
}

Outcome renyi_crossing() {
  const RealVector p = RealVector::Constant(2, 0.5), q = fig1_target();
  bool ok = true;
  int points = 0;
  const int steps = static_cast<int>(std::lround(cli::kFig1AlphaMax / cli::kFig1AlphaStep));
  for (int i = 0; i <= steps; ++i) {
    const double a = i * cli::kFig1AlphaStep;
    const double sq = renyi(q, a);
    ok = ok && std::abs(renyi(p, a) - 1.0) <= 1e-12;
    if (i * 2 < steps / cli::kFig1AlphaMax) ok = ok && sq > 1.0;  // α < 1/2
    if (i * 2 > steps / cli::kFig1AlphaMax) ok = ok && sq < 1.0;
    ++points;
  }
  const double mid = std::abs(renyi(q, 0.5) - 1.0);
  return {ok && mid <= 1e-9, fmt("%g grid points, |S_1/2(q) - 1| = %.1e", points, mid)};
}

Outcome mio_pure_boundary() {
  const RealVector p = RealVector::Constant(2, 0.5);
  const RealVector q = fig1_target();
  const TransformDecision yes = mio_qubit_pure_decide(p, q);
  double err = kInfinity, tp = kInfinity;
  bool mio = false;
  if (yes.verdict && yes.witness) {
    const PureState plus(plus_vector(2));
    tp = tp_residual(yes.witness->map());
    mio = is_mio(*yes.witness);
    err = trace_distance(apply(*yes.witness, plus.density()).mat(), PureState::from_probabilities(q).density().mat());
  }
  const RealVector over = target_with_sqrt_sum(std::numbers::sqrt2 + 1e-3);
  const bool refused = !mio_qubit_pure_decide(p, over).verdict;
  return {yes.verdict && tp <= 1e-9 && mio && err <= 1e-8 && refused,
          fmt("boundary: tp %.1e, output %.1e", tp, err) + (mio ? ", mio" : ", not mio") +
              (refused ? "; perturbed refused" : "; perturbed accepted")};
}

Outcome qubit_formulas() {
  Rng rng(20240501);
  double worst_r = 0.0, worst_d = 0.0;
  for (int i = 0; i < 500; ++i) {
    const DensityMatrix rho = random_density(2, rng);
    const ComplexMatrix& m = rho.mat();
    const double r = std::abs(m(0, 1)), p = m(0, 0).real();
    worst_r = std::max(worst_r, std::abs(c_r_solver(rho).value - 2.0 * r));
    worst_d = std::max(worst_d, std::abs(c_delta_r(rho).value - r / std::sqrt(p * (1.0 - p))));
  }
  return {worst_r <= 1e-8 && worst_d <= 1e-8, fmt("max |C_R - 2r| %.1e, max |C_dR - closed form| %.1e", worst_r, worst_d)};
}

Outcome pure_robustness() {
  Rng rng(20240502);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const PureState psi = random_pure(2 + i % 5, rng);
    const double s = psi.probabilities().cwiseSqrt().sum();
    worst = std::max(worst, std::abs(c_r_solver(psi.density()).value - (s * s - 1.0)));
  }
  double worst_u = 0.0, worst_rd = 0.0;
  for (int n = 1; n <= 6; ++n) {
    const DensityMatrix u = PureState(plus_vector(n)).density();
    worst_u = std::max(worst_u, std::abs(c_delta_r(u).value - (n - 1.0)));
    worst_rd = std::max(worst_rd, std::abs(log_robustness_dephasing(u).value - std::log2(double(n))));
  }
  return {worst <= 1e-6 && worst_u <= 1e-8 && worst_rd <= 1e-8,
          fmt("solver vs (sum sqrt p)^2 - 1: %.1e; uniform C_dR %.1e, R_D %.1e", worst, worst_u, worst_rd)};
}

Outcome cp_threshold() {
  double worst = 0.0;
  for (int d = 2; d <= 8; ++d) worst = std::max(worst, std::abs(bisect_phi_t_threshold(d) - (d - 1.0)));
  return {worst <= 1e-6, fmt("max |t* - (d-1)| = %.1e over d = 2..8", worst)};
}

Outcome qubit_transforms() {
  Rng rng(20240503);
  int constructed = 0, refused = 0;
  bool ok = true;
  double worst = 0.0;
  for (int i = 0; i < 300; ++i) {
    const DensityMatrix rho = random_density(2, rng);
    // Every third target is a partial dephasing of ρ, so both branches occur.
    const DensityMatrix sigma = (i % 3 == 0) ? partial_dephase(rho, rng.uniform()) : random_density(2, rng);
    const auto cr = [](const DensityMatrix& s) { return 2.0 * std::abs(s.mat()(0, 1)); };
    const auto cd = [](const DensityMatrix& s) {
      const double p = s.mat()(0, 0).real();
      return std::abs(s.mat()(0, 1)) / std::sqrt(p * (1.0 - p));
    };
    const TransformDecision d = qubit_decide(rho, sigma);
    if (d.verdict) {
      ++constructed;
      const KrausChannel w = qubit_construct(rho, sigma);
      const double err = trace_distance(apply(w, rho).mat(), sigma.mat());
      worst = std::max(worst, err);
      ok = ok && is_sio_rep(w) && tp_residual(w.map()) <= 1e-9 && err <= 1e-8;
    } else {
      ++refused;
      ok = ok && (cr(rho) < cr(sigma) - 1e-9 || cd(rho) < cd(sigma) - 1e-9);
    }
  }
  return {ok && constructed > 0 && refused > 0,
          fmt("%g constructed (worst output %.1e), %g refused with a violated robustness", constructed, worst, refused)};
}

Outcome sio_majorization() {
  Rng rng(20240504);
  bool ok = true;
  double worst_tp = 0.0, worst_fid = 0.0;
  for (int i = 0; i < 300; ++i) {
    const auto [psi, phi] = majorized_pair(2 + i % 4, rng);
    const KrausChannel w = sio_pure_construct(psi, phi);
    worst_tp = std::max(worst_tp, tp_residual(w.map()));
    const ComplexMatrix out = apply(w, psi.density()).mat();
    const double fid = (phi.amps().adjoint() * out * phi.amps())(0, 0).real();
    worst_fid = std::max(worst_fid, 1.0 - fid);
    ok = ok && is_sio_rep(w);  // checked operator by operator
  }
  ok = ok && worst_tp <= 1e-8 && worst_fid <= 1e-8;
  int refusals = 0;
  while (refusals < 300) {
    const PureState psi = random_pure(2 + refusals % 4, rng), phi = random_pure(2 + (refusals / 4) % 4, rng);
    const TransformDecision d = sio_pure_decide(psi, phi);
    if (d.verdict) continue;
    ++refusals;
    if (!d.violation) {
      ok = false;
      continue;
    }
    // k must be the first index whose partial sum of ψ exceeds that of φ.
    const SchmidtVector s = schmidt_vector(psi), t = schmidt_vector(phi);
    const int k = d.violation->failing_k;
    double ps = 0.0, pt = 0.0;
    for (int j = 1; j <= std::max(s.size(), t.size()); ++j) {
      ps += s[j - 1];
      pt += t[j - 1];
      if (j < k) ok = ok && ps <= pt + 1e-12;
      if (j == k) ok = ok && ps > pt + 1e-12;
    }
    ok = ok && k >= 1;
  }
  return {ok, fmt("300 witnesses: tp %.1e, 1 - fidelity %.1e; %g refusals with valid k", worst_tp, worst_fid, refusals)};
}

Outcome conversion_probability() {
  Rng rng(20240505);
  bool ok = true;
  int multi = 0;
  for (int i = 0; i < 300; ++i) {
    const PureState psi = random_pure(2 + i % 4, rng), phi = random_pure(2 + (i / 4) % 4, rng);
    const double p = max_conversion_probability(psi, phi);
    const bool major = majorizes(schmidt_vector(phi), schmidt_vector(psi)).holds;
    ok = ok && ((p >= 1.0 - 1e-12) == major);
    if (multi < 100 && p < 1.0 - 2e-3) {
      ++multi;
      const int n = std::max(psi.dim(), phi.dim());
      const PureState target = pad_state(phi, n), ground(ComplexVector::Unit(n, 0));
      ok = ok && multi_outcome_decide(psi, {{p, target}, {1.0 - p, ground}});
      ok = ok && !multi_outcome_decide(psi, {{p + 1e-3, target}, {1.0 - p - 1e-3, ground}});
    }
  }
  while (multi < 100) {
    const PureState psi = random_pure(4, rng), phi = random_pure(3, rng);
    const double p = max_conversion_probability(psi, phi);
    if (p >= 1.0 - 2e-3) continue;
    ++multi;
    const PureState target = pad_state(phi, 4), ground(ComplexVector::Unit(4, 0));
    ok = ok && multi_outcome_decide(psi, {{p, target}, {1.0 - p, ground}});
    ok = ok && !multi_outcome_decide(psi, {{p + 1e-3, target}, {1.0 - p - 1e-3, ground}});
  }
  return {ok, fmt("300 pairs p* = 1 iff majorized; %g ensembles at p* and p* + 1e-3", multi)};
}

Outcome n_covariance() {
  Rng rng(20240506);
  double worst_q = kInfinity;
  for (int i = 0; i < 300; ++i) {
    const int d = 3 + i % 2;
    const DensityMatrix rho = dense_state(d, rng);
    const DensityMatrix sigma = apply(n_covariant_channel(random_n_covariant_spec(d, rng)), rho);
    worst_q = std::min(worst_q, min_eigenvalue(n_q_matrix(rho, sigma)));
  }
  bool ok = worst_q >= -1e-9;
  double worst_out = 0.0;
  for (int i = 0; i < 300; ++i) {
    const int d = 3 + i % 2;
    const DensityMatrix rho = dense_state(d, rng);
    const DensityMatrix sigma = apply(n_covariant_channel(random_n_covariant_spec(d, rng)), rho);
    const TransformDecision dec = n_feasible(rho, sigma);
    if (!dec.verdict || !dec.witness) {
      ok = false;
      continue;
    }
    worst_out = std::max(worst_out, trace_distance(apply(*dec.witness, rho).mat(), sigma.mat()));
    ok = ok && is_n_covariant(*dec.witness) && tp_residual(dec.witness->map()) <= 1e-9;
  }
  return {ok && worst_out <= 1e-8, fmt("forward min eig(Q) %.1e; witness output error %.1e", worst_q, worst_out)};
}

Outcome qubit_io_equals_mio() {
  int converted = 0, refused = 0, wrong = 0;
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const KrausChannel ch = sample_mio_qubit_channel(sample_seed(20240507, i));
    try {
      const KrausChannel io = qubit_mio_to_io(ch);
      const double dist = choi_distance(io.map(), ch.map());
      worst = std::max(worst, dist);
      if (dist <= 1e-8 && is_io_rep(io)) {
        ++converted;
      } else {
        ++wrong;
      }
    } catch (const SolverError&) {
      ++refused;
    }
  }
  return {converted == 500, fmt("%g of 500 converted (worst Choi distance %.1e), %g not IO-representable",
                                converted, worst, refused) +
                                (wrong ? fmt(", %g incorrect", wrong) : std::string())};
}

Outcome harness_suites() {
  bool ok = true;
  std::ostringstream detail;
  for (const Suite s : {Suite::kMonotonicity, Suite::kInclusions, Suite::kRoundtrips}) {
    HarnessOptions opt;
    opt.suite = s;
    opt.samples = 200;
    opt.seed = 20240508;
    const HarnessSummary sum = run_harness(opt);
    ok = ok && sum.passed();
    detail << suite_name(s) << " " << sum.checks - sum.failed << "/" << sum.checks << ", ";
  }
  // Rényi witness: the example channel raises S_α for α below 1/2.
  const DensityMatrix out = apply(qutrit_mio_example_channel(), PureState(plus_vector(2)).density());
  const RealVector pop = out.mat().diagonal().real();
  const double gain = renyi(pop, 0.25) - renyi(RealVector::Constant(2, 0.5), 0.25);
  ok = ok && gain > 0.0;
  detail << fmt("S_0.25 gain %.3f", gain);
  return {ok, detail.str()};
}

Outcome g_covariance() {
  Rng rng(20240509);
  double worst_comm = 0.0, worst_fit = 0.0, worst_pio = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int d = 2 + i % 3;
    const GCovariantParams params = random_g_covariant_params(d, rng);
    const KrausChannel g = g_covariant_channel(params);
    for (int k = 0; k < 100; ++k) {
      const KrausChannel u = unitary_channel(rng.incoherent_unitary(d));
      worst_comm = std::max(worst_comm, choi_distance(compose(g, u).map(), compose(u, g).map()));
    }
    const auto fit = fit_g_covariant(g);
    worst_fit = fit ? std::max({worst_fit, std::abs(fit->q1 - params.q1), std::abs(fit->q2 - params.q2),
                                std::abs(fit->q3 - params.q3)})
                    : kInfinity;
    const double q1 = rng.uniform(1.0 / d, 1.0);
    const KrausChannel g0 = g_covariant_channel({q1, 0.0, 1.0 - q1, d});
    const KrausChannel pio = random_pio_channel(d, rng);
    worst_pio = std::max(worst_pio, choi_distance(compose(g0, pio).map(), compose(pio, g0).map()));
  }
  return {worst_comm <= 1e-9 && worst_fit <= 1e-9 && worst_pio <= 1e-9,
          fmt("commutation %.1e, fit %.1e, q2 = 0 vs PIO %.1e", worst_comm, worst_fit, worst_pio)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "example channel", 1, example_channel},
      {2, "Renyi crossing sweep", 1, renyi_crossing},
      {3, "MIO qubit-to-qudit boundary", 1, mio_pure_boundary},
      {4, "qubit robustness formulas", 10, qubit_formulas},
      {5, "pure-state robustness", 30, pure_robustness},
      {6, "Phi_t CP threshold", 5, cp_threshold},
      {7, "qubit transformation criterion", 30, qubit_transforms},
      {8, "SIO majorization", 30, sio_majorization},
      {9, "conversion probability", 10, conversion_probability},
      {10, "N-covariance both directions", 60, n_covariance},
      {11, "qubit MIO to IO canonicalization", 60, qubit_io_equals_mio},
      {12, "monotonicity and inclusion harness", 120, harness_suites},
      {13, "G-covariance", 30, g_covariance},
  };
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("%s %2d %-36s %7.3fs (limit %gs)%s  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_seconds, in_time ? "" : " TIMEOUT", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
