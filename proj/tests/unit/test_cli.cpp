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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "coherence/cli.hpp"
#include "coherence/io.hpp"
#include "coherence/monotones.hpp"
#include "doctest.h"

using namespace coherence;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("coherence_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name, const std::string& text) const {
    const auto p = (path_ / name).string();
    write_text_file(p, text);
    return p;
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kPlus = R"({"dim": 2, "amps": [[0.7071067811865476, 0], [0.7071067811865476, 0]]})";

}  // namespace

TEST_CASE("monotones command") {
  TempDir dir;
  const auto plus = dir.file("plus.json", kPlus);
  const Run r = invoke({"monotones", plus, "--measures", "c_rel,c_l1,c_r,c_delta_r,r_d"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  REQUIRE(j.size() == 5);
  for (const auto& row : j) CHECK(row["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));

  // Output agrees with the library call.
  const DensityMatrix rho = density_from_json(read_json_file(plus));
  const cli::Table t = cli::monotones_table(rho, {"c_rel", "c_l1", "c_r", "c_delta_r", "r_d"});
  CHECK(r.out == cli::to_json(t));

  const auto qubit = dir.file("q.json", R"({"dim": 2, "mat": [[0.7, 0.2], [0.2, 0.3]]})");
  const Json q = Json::parse(invoke({"monotones", qubit, "--measures", "c_r,c_delta_r"}).out);
  CHECK(q[0]["value"].get<double>() == doctest::Approx(0.4));
  CHECK(q[1]["value"].get<double>() == doctest::Approx(0.2 / std::sqrt(0.21)));

  const auto flat = dir.file("flat.json", R"({"dim": 3, "mat": [[0.2, 0, 0], [0, 0.5, 0], [0, 0, 0.3]]})");
  for (const auto& row : Json::parse(invoke({"monotones", flat}).out)) {
    CHECK(std::abs(row["value"].get<double>()) <= 1e-9);
  }
  const Run csv = invoke({"--format", "csv", "monotones", plus, "--measures", "c_l1"});
  CHECK(csv.out.rfind("measure,value,method\n", 0) == 0);
  CHECK(invoke({"monotones", plus, "--measures", "made_up"}).code == cli::kUsage);
}

TEST_CASE("classify command") {
  TempDir dir;
  const auto id = dir.file("id.json", channel_to_json(identity_channel(2)).dump());
  const Json j = Json::parse(invoke({"classify", id}).out);
  for (const auto& row : j) {
    if (row["value"].is_boolean() && row["predicate"] != "g_covariant_fit") CHECK(row["value"] == true);
  }
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  const auto had = dir.file("h.json", channel_to_json(unitary_channel(h / std::sqrt(2.0))).dump());
  const Json hj = Json::parse(invoke({"classify", had}).out);
  CHECK(hj[0]["predicate"] == "cptp");
  CHECK(hj[0]["value"] == true);
  CHECK(hj[1]["predicate"] == "mio");
  CHECK(hj[1]["value"] == false);

  const auto ex = dir.file("ex.json", channel_to_json(qutrit_mio_example_channel()).dump());
  const Json ej = Json::parse(invoke({"classify", ex}).out);
  CHECK(ej[1]["value"] == true);
  CHECK(ej[2]["value"].is_null());
  CHECK(ej[3]["value"] == false);

  CHECK(invoke({"classify", dir.path("missing.json")}).code == cli::kParse);
  CHECK(invoke({"classify", dir.file("bad.json", "{")}).code == cli::kParse);
  const auto not_tp = dir.file("ntp.json", R"({"din": 2, "dout": 2, "kraus": [[[1, 0], [0, 0]]]})");
  CHECK(invoke({"classify", not_tp}).code == cli::kInvalid);
}

TEST_CASE("transform command") {
  TempDir dir;
  const auto plus = dir.file("plus.json", kPlus);
  const auto psi = dir.file(
      "psi.json", R"({"dim": 3, "amps": [[0.9428090415820634, 0], [0.23570226039551584, 0], [0.23570226039551584, 0]]})");
  const auto witness = dir.path("w.json");
  const Run r = invoke({"transform", plus, psi, "--class", "mio-pure", "--witness", witness});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["verdict"] == true);
  const KrausChannel w = channel_from_json(read_json_file(witness));
  CHECK(is_mio(w));
  const DensityMatrix out = apply(w, density_from_json(read_json_file(plus)));
  CHECK(0.5 * trace_norm(out.mat() - density_from_json(read_json_file(psi)).mat()) <= 1e-8);

  const auto a = dir.file("a.json", R"({"dim": 2, "mat": [[0.8, 0.2], [0.2, 0.2]]})");
  const auto b = dir.file("b.json", R"({"dim": 2, "mat": [[0.5, 0.3], [0.3, 0.5]]})");
  const Json no = Json::parse(invoke({"transform", a, b, "--class", "qubit"}).out);
  CHECK(no["verdict"] == false);
  CHECK(no["violation"]["monotone"] == "c_r");

  for (const char* cls : {"sio", "pio", "mio-pure", "qubit"}) {
    const Run self = invoke({"transform", plus, plus, "--class", cls});
    CHECK(self.code == 0);
    CHECK(Json::parse(self.out)["verdict"] == true);
  }
  CHECK(invoke({"transform", plus, psi, "--class", "qubit"}).code == cli::kUsage);
  CHECK(invoke({"transform", a, plus, "--class", "sio"}).code == cli::kUsage);
}

TEST_CASE("reproduce command") {
  const Json ex = Json::parse(invoke({"reproduce", "--artifact", "example"}).out);
  for (const auto& row : ex) {
    if (row["value"].is_number()) CHECK(row["value"].get<double>() <= 1e-10);
  }
  const Run fig = invoke({"--format", "csv", "reproduce", "--artifact", "fig1"});
  CHECK(fig.out.find("\n0.5,1,1\n") != std::string::npos);
  const Json cp = Json::parse(invoke({"reproduce", "--artifact", "cp-threshold"}).out);
  CHECK(cp[2]["d"] == 4);
  CHECK(cp[2]["threshold"].get<double>() == doctest::Approx(3.0).epsilon(1e-6));
  const Run q1 = invoke({"--seed", "3", "reproduce", "--artifact", "qubit-formulas", "--samples", "5"});
  const Run q2 = invoke({"reproduce", "--artifact", "qubit-formulas", "--samples", "5", "--seed", "3"});
  CHECK(q1.code == 0);
  CHECK(q1.out == q2.out);
  CHECK(invoke({"reproduce", "--artifact", "nothing"}).code == cli::kUsage);
}

TEST_CASE("harness command and output files") {
  TempDir dir;
  const Run pass = invoke({"harness", "--suite", "inclusions", "--samples", "5", "--seed", "9"});
  CHECK(pass.code == 0);
  CHECK(Json::parse(pass.out)["failed"] == 0);
  const Run again = invoke({"harness", "--suite", "inclusions", "--samples", "5", "--seed", "9"});
  CHECK(pass.out == again.out);
  const Run fault = invoke({"harness", "--suite", "monotonicity", "--samples", "3", "--inject-fault", "2"});
  CHECK(fault.code == cli::kViolation);
  CHECK(Json::parse(fault.out)["failures"][0]["index"] == 2);

  const auto out = dir.path("summary.json");
  CHECK(invoke({"harness", "--suite", "roundtrips", "--samples", "3", "--out", out}).code == 0);
  CHECK(Json::parse(read(out))["samples"] == 3);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == cli::kUsage);
  CHECK(invoke({"frobnicate"}).code == cli::kUsage);
  CHECK(invoke({"--help"}).code == cli::kOk);
  CHECK(invoke({"harness", "--samples", "0"}).code == cli::kUsage);
}

#ifdef COHERENCE_KIT_EXE
TEST_CASE("executable is deterministic") {
  TempDir dir;
  const auto a = dir.path("a.csv"), b = dir.path("b.csv");
  const std::string exe = COHERENCE_KIT_EXE;
  const std::string base = exe + " --format csv reproduce --artifact fig1 --out ";
  REQUIRE(std::system((base + a).c_str()) == 0);
  REQUIRE(std::system((base + b).c_str()) == 0);
  CHECK(read(a) == read(b));
  CHECK_FALSE(read(a).empty());
  CHECK(std::system((exe + " harness --samples 2 --inject-fault 0 > /dev/null").c_str()) != 0);
}
#endif
