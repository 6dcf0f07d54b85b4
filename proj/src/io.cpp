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

#include "coherence/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace coherence {
namespace {

int dim_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw ParseError(std::string("missing integer field \"") + key + "\"");
  }
  const int d = j[key].get<int>();
  if (d < 1) throw ParseError(std::string("field \"") + key + "\" must be positive");
  return d;
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ParseError("complex entries must be [re, im] pairs");
}

Json number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return v;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) throw ParseError("matrix has the wrong number of rows");
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols) {
      throw ParseError("matrix row has the wrong number of entries");
    }
    for (int k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

Json state_to_json(const DensityMatrix& rho) { return {{"dim", rho.dim()}, {"mat", matrix_to_json(rho.mat())}}; }

Json state_to_json(const PureState& psi) {
  Json amps = Json::array();
  for (Eigen::Index i = 0; i < psi.amps().size(); ++i) amps.push_back({psi.amps()[i].real(), psi.amps()[i].imag()});
  return {{"dim", psi.dim()}, {"amps", amps}};
}

bool is_pure_json(const Json& j) { return j.is_object() && j.contains("amps"); }

PureState pure_from_json(const Json& j) {
  if (!is_pure_json(j)) throw ParseError("pure state needs an \"amps\" field");
  const int d = dim_field(j, "dim");
  const Json& a = j["amps"];
  if (!a.is_array() || static_cast<int>(a.size()) != d) throw ParseError("\"amps\" length differs from \"dim\"");
  ComplexVector v(d);
  for (int i = 0; i < d; ++i) v[i] = complex_from_json(a[i]);
  return PureState(v);
}

DensityMatrix density_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("state must be a JSON object");
  if (is_pure_json(j)) return pure_from_json(j).density();
  if (!j.contains("mat")) throw ParseError("state needs a \"mat\" or \"amps\" field");
  const int d = dim_field(j, "dim");
  return DensityMatrix(matrix_from_json(j["mat"], d, d));
}

Json channel_to_json(const KrausMap& map) {
  Json ops = Json::array();
  for (const auto& k : map.ops) ops.push_back(matrix_to_json(k));
  return {{"din", map.din}, {"dout", map.dout}, {"kraus", ops}};
}

Json channel_to_json(const KrausChannel& ch) { return channel_to_json(ch.map()); }

KrausChannel channel_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("channel must be a JSON object");
  const int din = dim_field(j, "din");
  const int dout = dim_field(j, "dout");
  if (!j.contains("kraus") || !j["kraus"].is_array()) throw ParseError("channel needs a \"kraus\" array");
  std::vector<ComplexMatrix> ops;
  for (const auto& k : j["kraus"]) ops.push_back(matrix_from_json(k, dout, din));
  return KrausChannel(din, dout, std::move(ops));
}

Json report_to_json(const MonotoneReport& report, bool with_witness) {
  Json out = {{"name", report.name}, {"value", number(report.value)}, {"method", method_name(report.method)}};
  if (with_witness && report.witness) out["witness"] = matrix_to_json(*report.witness);
  return out;
}

Json decision_to_json(const TransformDecision& decision, bool with_witness) {
  Json out = {{"verdict", decision.verdict}};
  if (with_witness && decision.witness) out["witness"] = channel_to_json(*decision.witness);
  if (decision.violation) {
    const ViolationRecord& v = *decision.violation;
    if (v.failing_k > 0) {
      out["violation"] = {{"monotone", v.monotone}, {"failing_k", v.failing_k}};
    } else {
      out["violation"] = {{"monotone", v.monotone}, {"lhs", number(v.lhs)}, {"rhs", number(v.rhs)}};
    }
  }
  if (!decision.blocks.empty()) {
    Json blocks = Json::array();
    for (const auto& b : decision.blocks) {
      blocks.push_back({{"source", b.source}, {"target", b.target}, {"weight", b.weight}});
    }
    out["blocks"] = blocks;
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  out << text;
}

}  // namespace coherence
