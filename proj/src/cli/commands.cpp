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

#include "coherence/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"

#include "coherence/covariance.hpp"
#include "coherence/harness.hpp"
#include "coherence/monotones.hpp"
#include "coherence/transforms.hpp"

namespace coherence::cli {
namespace {

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string csv_cell(const Json& cell) {
  if (cell.is_null()) return "";
  if (cell.is_boolean()) return cell.get<bool>() ? "true" : "false";
  if (cell.is_number_integer()) return std::to_string(cell.get<long long>());
  if (cell.is_number()) return format_number(cell.get<double>());
  if (cell.is_string()) return cell.get<std::string>();
  return cell.dump();
}

Json num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

struct Settings {
  std::uint64_t seed = 1;
  double tol = tol::kPredicate;
  std::string out;
  std::string format = "json";
};

void emit(const Settings& s, const std::string& text, std::ostream& out) {
  if (s.out.empty()) {
    out << text;
  } else {
    write_text_file(s.out, text);
  }
}

void emit_table(const Settings& s, const Table& t, std::ostream& out) {
  emit(s, s.format == "csv" ? to_csv(t) : to_json(t), out);
}

void emit_json(const Settings& s, const Json& j, std::ostream& out) { emit(s, j.dump(2) + "\n", out); }

// ‖v − (u·v)u‖ for unit u.
double proportionality_residual(const ComplexVector& v, const ComplexVector& u) {
  return (v - u * u.dot(v)).norm();
}

TransformDecision decide(const std::string& cls, const Json& src, const Json& dst) {
  if (cls == "sio" || cls == "pio") {
    if (!is_pure_json(src) || !is_pure_json(dst)) throw PreconditionError("class " + cls + " needs pure states");
    const PureState psi = pure_from_json(src), phi = pure_from_json(dst);
    return cls == "sio" ? sio_pure_decide(psi, phi) : pio_pure_decide(psi, phi);
  }
  if (cls == "mio-pure") {
    if (!is_pure_json(src) || !is_pure_json(dst)) throw PreconditionError("class mio-pure needs pure states");
    const PureState psi = pure_from_json(src), phi = pure_from_json(dst);
    if (psi.dim() != 2) throw PreconditionError("class mio-pure needs a qubit source");
    // Qubit targets go through the two robustness conditions.
    if (phi.dim() <= 2) return qubit_decide(psi.density(), pad_state(phi, 2).density());
    return mio_qubit_pure_decide(psi, phi);
  }
  if (cls == "qubit") return qubit_decide(density_from_json(src), density_from_json(dst));
  throw PreconditionError("unknown class: " + cls);
}

}  // namespace

std::string to_csv(const Table& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << "\n";
  }
  return os.str();
}

std::string to_json(const Table& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = nlohmann::ordered_json::parse(row[i].dump());
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

Table classify_table(const KrausChannel& ch, double tol) {
  Table t{{"predicate", "value"}, {}};
  t.rows.push_back({"cptp", tp_residual(ch.map()) <= tol::kCptp});
  t.rows.push_back({"mio", is_mio(ch, tol)});
  // Square-only predicates are null for channels between different dimensions.
  const bool square = ch.din() == ch.dout();
  const auto square_only = [&](const char* name, auto predicate) {
    t.rows.push_back({name, square ? Json(predicate()) : Json(nullptr)});
  };
  square_only("dio", [&] { return is_dio(ch, tol); });
  t.rows.push_back({"io_rep", is_io_rep(ch, tol)});
  square_only("sio_rep", [&] { return is_sio_rep(ch, tol); });
  square_only("sio_special_rep", [&] { return is_sio_special_rep(ch, tol); });
  try {
    square_only("pio_rep", [&] { return is_pio_rep(ch, tol); });
  } catch (const PreconditionError&) {
    t.rows.push_back({"pio_rep", nullptr});  // beyond the search cap
  }
  if (ch.din() == ch.dout() && ch.din() >= 2) {
    if (const auto fit = fit_g_covariant(ch, tol)) {
      t.rows.push_back({"g_covariant_q1", fit->q1});
      t.rows.push_back({"g_covariant_q2", fit->q2});
      t.rows.push_back({"g_covariant_q3", fit->q3});
    } else {
      t.rows.push_back({"g_covariant_fit", false});
    }
  }
  return t;
}

Table monotones_table(const DensityMatrix& rho, const std::vector<std::string>& names) {
  Table t{{"measure", "value", "method"}, {}};
  for (const auto& name : names) {
    const MonotoneReport r = monotone_by_name(rho, name);
    t.rows.push_back({r.name, num(r.value), method_name(r.method)});
  }
  return t;
}

Table reproduce_example() {
  const KrausChannel ch = qutrit_mio_example_channel();
  Table t{{"check", "value"}, {}};
  t.rows.push_back({"completeness_residual", tp_residual(ch.map())});
  ComplexVector plus = ComplexVector::Constant(2, 1.0 / std::numbers::sqrt2);
  ComplexVector target(3);
  target << 4.0, 1.0, 1.0;
  target.normalize();
  for (std::size_t j = 0; j < ch.size(); ++j) {
    t.rows.push_back({"proportionality_residual_m" + std::to_string(j + 1),
                      proportionality_residual(ch.ops()[j] * plus, target)});
  }
  const DensityMatrix out = apply(ch, PureState(plus).density());
  t.rows.push_back({"output_residual", max_abs(out.mat() - target * target.adjoint())});
  t.rows.push_back({"is_mio", is_mio(ch)});
  t.rows.push_back({"is_io_rep", is_io_rep(ch)});
  t.rows.push_back({"is_dio", is_dio(ch)});
  return t;
}

Table reproduce_fig1() {
  RealVector p = RealVector::Constant(2, 0.5);
  RealVector q(3);
  q << 8.0 / 9.0, 1.0 / 18.0, 1.0 / 18.0;
  Table t{{"alpha", "s_alpha_plus", "s_alpha_psi"}, {}};
  const int steps = static_cast<int>(std::lround(kFig1AlphaMax / kFig1AlphaStep));
  for (int i = 0; i <= steps; ++i) {
    const double a = i * kFig1AlphaStep;
    t.rows.push_back({a, renyi(p, a), renyi(q, a)});
  }
  return t;
}

Table reproduce_cp_threshold() {
  Table t{{"d", "threshold", "expected"}, {}};
  for (int d = 2; d <= 8; ++d) t.rows.push_back({d, bisect_phi_t_threshold(d), phi_t_threshold(d)});
  return t;
}

Table reproduce_qubit_formulas(std::uint64_t seed, int samples) {
  Table t{{"index", "p", "r", "c_r_solver", "c_r_closed", "c_delta_r", "c_delta_r_closed"}, {}};
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const DensityMatrix rho = random_density(2, rng);
    const QubitStandardForm f = qubit_standard_form(rho);
    t.rows.push_back({i, f.p, f.r, c_r_solver(rho).value, 2.0 * f.r, c_delta_r(rho).value,
                      f.r / std::sqrt(f.p * (1.0 - f.p))});
  }
  return t;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherence resource-theory toolkit", "coherence-kit"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--seed", s.seed, "Random seed")->capture_default_str();
  app.add_option("--tol", s.tol, "Predicate tolerance override")->capture_default_str();
  app.add_option("--out", s.out, "Output file (default stdout)");
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  std::string channel_path;
  auto* classify = app.add_subcommand("classify", "Class predicates of a channel");
  classify->add_option("channel", channel_path, "Channel JSON")->required();

  std::string state_path, measures = "all";
  auto* monotones = app.add_subcommand("monotones", "Monotone panel of a state");
  monotones->add_option("state", state_path, "State JSON")->required();
  monotones->add_option("--measures", measures, "all or a comma separated list")->capture_default_str();

  std::string source_path, target_path, cls, witness_path;
  auto* transform = app.add_subcommand("transform", "Decide a state transformation");
  transform->add_option("source", source_path, "Source state JSON")->required();
  transform->add_option("target", target_path, "Target state JSON")->required();
  transform->add_option("--class", cls, "Operation class")
      ->required()
      ->check(CLI::IsMember({"sio", "mio-pure", "qubit", "pio"}));
  transform->add_option("--witness", witness_path, "Write the witness channel here instead of inline");

  std::string artifact;
  int samples = 20;
  auto* reproduce = app.add_subcommand("reproduce", "Regenerate reference artifacts");
  reproduce->add_option("--artifact", artifact, "Artifact name")
      ->required()
      ->check(CLI::IsMember({"example", "fig1", "cp-threshold", "qubit-formulas"}));
  reproduce->add_option("--samples", samples, "Samples for qubit-formulas")->capture_default_str();

  std::string suite;
  int harness_samples = 200;
  int inject_fault = -1;
  auto* harness = app.add_subcommand("harness", "Sampled property suites");
  harness->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"monotonicity", "inclusions", "roundtrips"}));
  harness->add_option("--samples", harness_samples, "Samples per suite")->capture_default_str();
  harness->add_option("--inject-fault", inject_fault, "Corrupt the given sample (testing)")->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (classify->parsed()) {
      const KrausChannel ch = channel_from_json(read_json_file(channel_path));
      emit_table(s, classify_table(ch, s.tol), out);
      return kOk;
    }
    if (monotones->parsed()) {
      const DensityMatrix rho = density_from_json(read_json_file(state_path));
      std::vector<std::string> names;
      if (measures == "all") {
        names = monotone_names();
      } else {
        std::stringstream ss(measures);
        for (std::string item; std::getline(ss, item, ',');) names.push_back(item);
      }
      emit_table(s, monotones_table(rho, names), out);
      return kOk;
    }
    if (transform->parsed()) {
      const TransformDecision d = decide(cls, read_json_file(source_path), read_json_file(target_path));
      Json j = decision_to_json(d, witness_path.empty());
      if (!witness_path.empty() && d.witness) {
        write_text_file(witness_path, channel_to_json(*d.witness).dump(2) + "\n");
        j["witness_file"] = witness_path;
      }
      emit_json(s, j, out);
      return kOk;
    }
    if (reproduce->parsed()) {
      Table t;
      if (artifact == "example") t = reproduce_example();
      if (artifact == "fig1") t = reproduce_fig1();
      if (artifact == "cp-threshold") t = reproduce_cp_threshold();
      if (artifact == "qubit-formulas") t = reproduce_qubit_formulas(s.seed, samples);
      emit_table(s, t, out);
      return kOk;
    }
    if (harness->parsed()) {
      HarnessOptions opt;
      opt.suite = suite_from_name(suite);
      opt.samples = harness_samples;
      opt.seed = s.seed;
      opt.inject_fault = inject_fault;
      if (app.count("--tol")) opt.tol = s.tol;
      const HarnessSummary summary = run_harness(opt);
      emit_json(s, harness_summary_to_json(summary), out);
      if (!summary.passed()) {
        const HarnessFailure& f = summary.failures.front();
        err << "violation: suite " << suite << " index " << f.index << " seed " << f.sample_seed << " check "
            << f.check << "\n";
        return kViolation;
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << "\n";
    return kInvalid;
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace coherence::cli
