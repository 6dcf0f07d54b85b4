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

#include "coherence/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <thread>

#include "coherence/covariance.hpp"
#include "coherence/monotones.hpp"
#include "coherence/transforms.hpp"

namespace coherence {
namespace {

constexpr std::size_t kMaxReportedFailures = 20;

struct SampleResult {
  long checks = 0;
  double worst = 0.0;
  std::vector<HarnessFailure> failures;
};

class Recorder {
 public:
  Recorder(int index, std::uint64_t seed, double tol) : index_(index), seed_(seed), tol_(tol) {}

  // Passes when `excess` ≤ limit (the run tolerance by default).
  void bound(const std::string& check, double excess, double limit = -1.0) {
    ++out_.checks;
    if (std::isnan(excess)) excess = kInfinity;
    out_.worst = std::max(out_.worst, excess);
    if (excess > (limit < 0.0 ? tol_ : limit)) out_.failures.push_back({index_, seed_, check, excess});
  }
  void expect(const std::string& check, bool ok) { bound(check, ok ? 0.0 : kInfinity); }
  void error(const std::string& check, const std::exception& e) {
    ++out_.checks;
    out_.failures.push_back({index_, seed_, check + ": " + e.what(), kInfinity});
  }

  SampleResult take() { return std::move(out_); }

 private:
  int index_;
  std::uint64_t seed_;
  double tol_;
  SampleResult out_;
};

using Measure = std::function<double(const DensityMatrix&)>;
struct NamedMeasure {
  std::string name;
  Measure eval;
};

// Measures that never increase under MIO.
std::vector<NamedMeasure> mio_measures() {
  std::vector<NamedMeasure> out;
  for (const double a : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    out.push_back({"c_alpha_" + std::to_string(a).substr(0, 3), [a](const DensityMatrix& r) { return c_alpha(r, a).value; }});
  }
  out.push_back({"c_r", [](const DensityMatrix& r) { return c_r(r).value; }});
  return out;
}

// Additional measures that never increase under DIO.
std::vector<NamedMeasure> dio_measures() {
  std::vector<NamedMeasure> out;
  for (const double a : {0.5, 1.5, 2.0}) {
    out.push_back({"c_delta_alpha_" + std::to_string(a).substr(0, 3),
                   [a](const DensityMatrix& r) { return c_delta_alpha(r, a).value; }});
  }
  out.push_back({"trace_norm", [](const DensityMatrix& r) { return trace_norm_coherence(r).value; }});
  out.push_back({"c_delta_r", [](const DensityMatrix& r) { return c_delta_r(r).value; }});
  out.push_back({"r_d", [](const DensityMatrix& r) { return log_robustness_dephasing(r).value; }});
  return out;
}

std::vector<NamedMeasure> io_measures() {
  return {{"c_l1", [](const DensityMatrix& r) { return c_l1(r).value; }}};
}

void check_monotone(Recorder& rec, const std::string& cls, const KrausChannel& ch, const DensityMatrix& rho,
                    const std::vector<std::vector<NamedMeasure>>& sets) {
  DensityMatrix out = rho;
  try {
    out = apply(ch, rho);
  } catch (const std::exception& e) {
    rec.error(cls + "/apply", e);
    return;
  }
  for (const auto& set : sets) {
    for (const auto& m : set) {
      try {
        const double before = m.eval(rho);
        const double after = m.eval(out);
        if (std::isinf(before) && before > 0) continue;
        rec.bound(cls + "/" + m.name, after - before);
      } catch (const std::exception& e) {
        rec.error(cls + "/" + m.name, e);
      }
    }
  }
}

DensityMatrix sample_state(int d, Rng& rng, bool pure) {
  return pure ? random_pure(d, rng).density() : random_density(d, rng);
}

ComplexMatrix fourier(int d) {
  ComplexMatrix f(d, d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) f(j, k) = std::polar(1.0 / std::sqrt(d), 2.0 * std::numbers::pi * j * k / d);
  }
  return f;
}

SampleResult monotonicity_sample(int index, std::uint64_t seed, const HarnessOptions& opt) {
  Recorder rec(index, seed, opt.tol);
  Rng rng(seed);
  const int d = rng.uniform_int(2, 4);
  const bool pure = index % 4 == 0;
  const auto mio = mio_measures();
  const auto dio = dio_measures();
  const auto io = io_measures();

  try {
    check_monotone(rec, "mio_qubit", sample_mio_qubit_channel(seed), sample_state(2, rng, pure), {mio});
    check_monotone(rec, "mio_qubit_to_qutrit", qutrit_mio_example_channel(), sample_state(2, rng, pure), {mio});
    check_monotone(rec, "dio_covariant", g_covariant_channel(random_g_covariant_params(d, rng)),
                   sample_state(d, rng, pure), {mio, dio});
    if (index == opt.inject_fault) {
      ComplexMatrix e0 = ComplexMatrix::Zero(d, d);
      e0(0, 0) = 1.0;
      const DensityMatrix basis(e0);
      check_monotone(rec, "sio", unitary_channel(fourier(d)), basis, {mio, dio, io});
    } else {
      check_monotone(rec, "sio", random_sio_channel(d, rng.uniform_int(1, 3), rng), sample_state(d, rng, pure),
                     {mio, dio, io});
    }
  } catch (const std::exception& e) {
    rec.error("sampling", e);
  }

  if (index == 0) {
    // Rényi entropies below α = 1/2 are not MIO monotones.
    const DensityMatrix out = apply(qutrit_mio_example_channel(), PureState::from_probabilities(RealVector::Constant(2, 0.5)).density());
    const RealVector p = out.mat().diagonal().real();
    rec.expect("renyi_0.25_increases", renyi(p, 0.25) > 1.0 + 1e-6);
  }
  return rec.take();
}

SampleResult inclusions_sample(int index, std::uint64_t seed, const HarnessOptions& opt) {
  Recorder rec(index, seed, opt.tol);
  Rng rng(seed);
  const int d = rng.uniform_int(2, 4);
  auto run = [&](const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      rec.error(name, e);
    }
  };

  run("pio", [&] {
    const KrausChannel ch = random_pio_channel(d, rng);
    rec.expect("pio/is_pio_rep", is_pio_rep(ch));
    rec.expect("pio/is_sio_rep", is_sio_rep(ch));
    rec.expect("pio/is_io_rep", is_io_rep(ch));
    rec.expect("pio/is_dio", is_dio(ch));
    rec.expect("pio/is_mio", is_mio(ch));
  });
  run("sio", [&] {
    const KrausChannel ch = random_sio_channel(d, rng.uniform_int(1, 4), rng);
    rec.expect("sio/is_sio_rep", is_sio_rep(ch));
    rec.expect("sio/is_io_rep", is_io_rep(ch));
    rec.expect("sio/is_dio", is_dio(ch));
    rec.expect("sio/is_mio", is_mio(ch));
  });
  run("io", [&] {
    const KrausChannel ch = random_io_channel(d, rng.uniform_int(2, 4), rng.uniform_int(1, 4), rng);
    rec.expect("io/is_io_rep", is_io_rep(ch));
    rec.expect("io/is_mio", is_mio(ch));
  });
  run("dio", [&] {
    const KrausChannel ch = g_covariant_channel(random_g_covariant_params(d, rng));
    rec.expect("dio/is_dio", is_dio(ch));
    rec.expect("dio/is_mio", is_mio(ch));
    const KrausChannel pd = partial_dephasing_channel(d, rng.uniform());
    rec.expect("dio/partial_dephasing_is_dio", is_dio(pd));
  });
  run("mio", [&] { rec.expect("mio/sampled_is_mio", is_mio(sample_mio_qubit_channel(seed))); });

  if (index == 0) {
    // The inclusions are strict.
    run("strict", [&] {
      const KrausChannel ex = qutrit_mio_example_channel();
      rec.expect("strict/example_is_mio", is_mio(ex));
      rec.expect("strict/example_not_dio", !is_dio(ex));
      rec.expect("strict/example_not_io_rep", !is_io_rep(ex));
      rec.expect("strict/fourier_not_mio", !is_mio(unitary_channel(fourier(2))));
    });
  }
  return rec.take();
}

SampleResult roundtrips_sample(int index, std::uint64_t seed, const HarnessOptions& opt) {
  Recorder rec(index, seed, opt.tol);
  Rng rng(seed);
  const int d = rng.uniform_int(2, 4);
  auto run = [&](const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      rec.error(name, e);
    }
  };

  run("choi", [&] {
    const int dout = rng.uniform_int(2, 4);
    const int ops = std::max(rng.uniform_int(1, 4), (d + dout - 1) / dout);
    const KrausChannel ch = random_channel(d, dout, ops, rng);
    const KrausChannel back = channel_from_choi(choi(ch));
    rec.bound("choi/roundtrip", choi_distance(ch.map(), back.map()), tol::kChoiRoundtrip);
    const KrausMap dd = dual_map(dual_map(ch.map()));
    rec.bound("choi/double_dual", choi_distance(ch.map(), dd));
  });
  run("json", [&] {
    const KrausChannel ch = random_channel(d, d, 2, rng);
    const KrausChannel back = channel_from_json(Json::parse(channel_to_json(ch).dump()));
    rec.bound("json/channel", choi_distance(ch.map(), back.map()));
    const DensityMatrix rho = random_density(d, rng);
    const DensityMatrix rback = density_from_json(Json::parse(state_to_json(rho).dump()));
    rec.bound("json/state", max_abs(rho.mat() - rback.mat()));
  });
  run("sio_pure", [&] {
    // ψ ≺ φ by construction: |ψ_i|² = Σ_j D_ij |φ_j|² for a random doubly stochastic D.
    const PureState phi = random_pure(d, rng);
    RealMatrix dmat = RealMatrix::Zero(d, d);
    const RealVector w = rng.simplex_point(3);
    for (int k = 0; k < 3; ++k) dmat += w[k] * permutation_matrix(rng.permutation(d));
    const PureState psi = PureState::from_probabilities(dmat * phi.probabilities());
    const TransformDecision dec = sio_pure_decide(psi, phi);
    rec.expect("sio_pure/verdict", dec.verdict && dec.witness.has_value());
    if (dec.witness) {
      const DensityMatrix out = apply(*dec.witness, psi.density());
      rec.bound("sio_pure/output", max_abs(out.mat() - phi.density().mat()), 1e-8);
      rec.expect("sio_pure/is_sio_rep", is_sio_rep(*dec.witness));
    }
  });
  run("qubit", [&] {
    const DensityMatrix rho = random_density(2, rng);
    const DensityMatrix sigma = apply(random_sio_channel(2, rng.uniform_int(1, 3), rng), rho);
    const TransformDecision dec = qubit_decide(rho, sigma);
    rec.expect("qubit/verdict", dec.verdict && dec.witness.has_value());
    if (dec.witness) {
      rec.bound("qubit/output", max_abs(apply(*dec.witness, rho).mat() - sigma.mat()), 1e-8);
      rec.expect("qubit/is_sio_rep", is_sio_rep(*dec.witness));
    }
  });
  run("n_covariant", [&] {
    const int n = rng.uniform_int(3, 4);
    const KrausChannel ch = n_covariant_channel(random_n_covariant_spec(n, rng));
    const DensityMatrix rho = random_density(n, rng);
    const DensityMatrix sigma = apply(ch, rho);
    const KrausChannel w = n_construct(rho, sigma);
    rec.expect("n_covariant/structure", is_n_covariant(w));
    rec.bound("n_covariant/output", max_abs(apply(w, rho).mat() - sigma.mat()), 1e-8);
  });
  return rec.take();
}

}  // namespace

const char* suite_name(Suite suite) {
  switch (suite) {
    case Suite::kMonotonicity:
      return "monotonicity";
    case Suite::kInclusions:
      return "inclusions";
    case Suite::kRoundtrips:
      return "roundtrips";
  }
  return "unknown";
}

Suite suite_from_name(const std::string& name) {
  for (const Suite s : {Suite::kMonotonicity, Suite::kInclusions, Suite::kRoundtrips}) {
    if (name == suite_name(s)) return s;
  }
  throw PreconditionError("unknown suite: " + name);
}

std::uint64_t sample_seed(std::uint64_t seed, int index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

int harness_threads() {
  if (const char* env = std::getenv("COHERENCE_KIT_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

HarnessSummary run_harness(const HarnessOptions& options) {
  if (options.samples < 1) throw PreconditionError("run_harness: samples must be at least 1");
  const auto eval = [&](int i) {
    const std::uint64_t s = sample_seed(options.seed, i);
    switch (options.suite) {
      case Suite::kMonotonicity:
        return monotonicity_sample(i, s, options);
      case Suite::kInclusions:
        return inclusions_sample(i, s, options);
      case Suite::kRoundtrips:
        return roundtrips_sample(i, s, options);
    }
    return SampleResult{};
  };

  std::vector<SampleResult> results(options.samples);
  const int threads = std::min(options.threads > 0 ? options.threads : harness_threads(), options.samples);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < options.samples; i = next++) results[i] = eval(i);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  HarnessSummary summary;
  summary.suite = options.suite;
  summary.samples = options.samples;
  summary.seed = options.seed;
  for (const auto& r : results) {
    summary.checks += r.checks;
    summary.failed += static_cast<long>(r.failures.size());
    summary.worst_violation = std::max(summary.worst_violation, r.worst);
    for (const auto& f : r.failures) {
      if (summary.failures.size() < kMaxReportedFailures) summary.failures.push_back(f);
    }
  }
  return summary;
}

Json harness_summary_to_json(const HarnessSummary& s) {
  Json failures = Json::array();
  for (const auto& f : s.failures) {
    failures.push_back({{"index", f.index},
                        {"sample_seed", f.sample_seed},
                        {"check", f.check},
                        {"magnitude", std::isinf(f.magnitude) ? Json("inf") : Json(f.magnitude)}});
  }
  return {{"suite", suite_name(s.suite)},
          {"samples", s.samples},
          {"seed", s.seed},
          {"checks", s.checks},
          {"failed", s.failed},
          {"passed", s.passed()},
          {"worst_violation", std::isinf(s.worst_violation) ? Json("inf") : Json(s.worst_violation)},
          {"failures", failures}};
}

}  // namespace coherence
