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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coherence/channels.hpp"
#include "coherence/covariance.hpp"
#include "coherence/errors.hpp"
#include "coherence/harness.hpp"
#include "coherence/monotones.hpp"
#include "coherence/transforms.hpp"

namespace py = pybind11;
using namespace coherence;

namespace {

using Kraus = std::vector<ComplexMatrix>;

KrausChannel to_channel(const Kraus& ops) {
  if (ops.empty()) throw PreconditionError("empty Kraus list");
  return KrausChannel(static_cast<int>(ops.front().cols()), static_cast<int>(ops.front().rows()), ops);
}

PureState to_pure(const ComplexVector& v) { return PureState(v); }

py::dict report(const MonotoneReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["value"] = r.value;
  d["method"] = method_name(r.method);
  d["iterations"] = r.iterations;
  if (r.witness) d["witness"] = *r.witness;
  return d;
}

py::dict decision(const TransformDecision& t) {
  py::dict d;
  d["verdict"] = t.verdict;
  if (t.witness) d["kraus"] = t.witness->ops();
  if (t.violation) {
    py::dict v;
    v["monotone"] = t.violation->monotone;
    v["lhs"] = t.violation->lhs;
    v["rhs"] = t.violation->rhs;
    v["failing_k"] = t.violation->failing_k;
    d["violation"] = v;
  }
  if (!t.blocks.empty()) {
    py::list blocks;
    for (const auto& b : t.blocks) blocks.append(py::make_tuple(b.source, b.target, b.weight));
    d["blocks"] = blocks;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coherence resource theory: free-operation classes, monotones and state transformations.";

  auto base = py::register_exception<Error>(m, "CoherenceError", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", base);
  py::register_exception<ValidationError>(m, "ValidationError", base);
  py::register_exception<SolverError>(m, "SolverError", base);

  // States are passed as numpy arrays and validated on entry.
  m.def("dephase", [](const ComplexMatrix& rho) { return dephase(DensityMatrix(rho)).mat(); });
  m.def("renyi", py::overload_cast<const RealVector&, double>(&renyi), py::arg("p"), py::arg("alpha"));

  m.def("monotone_names", &monotone_names);
  m.def(
      "monotone",
      [](const ComplexMatrix& rho, const std::string& name) { return report(monotone_by_name(DensityMatrix(rho), name)); },
      py::arg("rho"), py::arg("name"));
  m.def("c_r", [](const ComplexMatrix& rho) { return report(c_r_solver(DensityMatrix(rho))); });
  m.def("c_delta_r", [](const ComplexMatrix& rho) { return report(c_delta_r(DensityMatrix(rho))); });

  m.def("apply", [](const Kraus& ops, const ComplexMatrix& rho) { return apply(to_channel(ops), DensityMatrix(rho)).mat(); });
  m.def("choi", [](const Kraus& ops) { return choi(to_channel(ops)).mat; });
  m.def("is_mio", [](const Kraus& ops, double tol) { return is_mio(to_channel(ops), tol); }, py::arg("kraus"),
        py::arg("tol") = tol::kPredicate);
  m.def("is_dio", [](const Kraus& ops, double tol) { return is_dio(to_channel(ops), tol); }, py::arg("kraus"),
        py::arg("tol") = tol::kPredicate);
  m.def("is_io_rep", [](const Kraus& ops, double tol) { return is_io_rep(to_channel(ops), tol); }, py::arg("kraus"),
        py::arg("tol") = tol::kPredicate);
  m.def("is_sio_rep", [](const Kraus& ops, double tol) { return is_sio_rep(to_channel(ops), tol); },
        py::arg("kraus"), py::arg("tol") = tol::kPredicate);
  m.def("is_pio_rep", [](const Kraus& ops, double tol) { return is_pio_rep(to_channel(ops), tol); },
        py::arg("kraus"), py::arg("tol") = tol::kPredicate);
  m.def("qutrit_mio_example_channel", [] { return qutrit_mio_example_channel().ops(); });
  m.def("qubit_mio_to_io", [](const Kraus& ops) { return qubit_mio_to_io(to_channel(ops)).ops(); });
  m.def("sample_mio_qubit_channel", [](std::uint64_t seed) { return sample_mio_qubit_channel(seed).ops(); });
  m.def(
      "g_covariant_channel",
      [](double q1, double q2, double q3, int d) { return g_covariant_channel({q1, q2, q3, d}).ops(); },
      py::arg("q1"), py::arg("q2"), py::arg("q3"), py::arg("d"));

  m.def("sio_pure_decide", [](const ComplexVector& a, const ComplexVector& b) {
    return decision(sio_pure_decide(to_pure(a), to_pure(b)));
  });
  m.def("pio_pure_decide", [](const ComplexVector& a, const ComplexVector& b) {
    return decision(pio_pure_decide(to_pure(a), to_pure(b)));
  });
  m.def("mio_qubit_pure_decide",
        [](const RealVector& p, const RealVector& q) { return decision(mio_qubit_pure_decide(p, q)); });
  m.def("qubit_decide", [](const ComplexMatrix& a, const ComplexMatrix& b) {
    return decision(qubit_decide(DensityMatrix(a), DensityMatrix(b)));
  });
  m.def("n_feasible", [](const ComplexMatrix& a, const ComplexMatrix& b) {
    return decision(n_feasible(DensityMatrix(a), DensityMatrix(b)));
  });
  m.def("max_conversion_probability", [](const ComplexVector& a, const ComplexVector& b) {
    return max_conversion_probability(to_pure(a), to_pure(b));
  });
  m.def("phi_t_threshold", &phi_t_threshold);
  m.def("bisect_phi_t_threshold", &bisect_phi_t_threshold, py::arg("d"), py::arg("lo") = 0.0, py::arg("hi") = 10.0,
        py::arg("precision") = 1e-9);

  m.def(
      "run_harness",
      [](const std::string& suite, int samples, std::uint64_t seed, double tol) {
        HarnessOptions opt;
        opt.suite = suite_from_name(suite);
        opt.samples = samples;
        opt.seed = seed;
        opt.tol = tol;
        HarnessSummary s;
        {
          py::gil_scoped_release release;
          s = run_harness(opt);
        }
        py::dict d;
        d["suite"] = suite;
        d["samples"] = s.samples;
        d["checks"] = s.checks;
        d["failed"] = s.failed;
        d["worst_violation"] = s.worst_violation;
        return d;
      },
      py::arg("suite"), py::arg("samples") = 200, py::arg("seed") = 1, py::arg("tol") = 1e-7);
}
