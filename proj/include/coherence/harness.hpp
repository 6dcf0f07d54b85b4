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

#include <cstdint>
#include <string>
#include <vector>

#include "coherence/io.hpp"

namespace coherence {

enum class Suite { kMonotonicity, kInclusions, kRoundtrips };

const char* suite_name(Suite suite);
/// Throws PreconditionError on an unknown name.
Suite suite_from_name(const std::string& name);

struct HarnessOptions {
  Suite suite = Suite::kMonotonicity;
  int samples = 200;
  std::uint64_t seed = 1;
  double tol = 1e-7;
  /// 0 means COHERENCE_KIT_THREADS or the hardware concurrency.
  int threads = 0;
  /// Sample index whose SIO channel is replaced by a coherence-generating
  /// unitary; -1 disables. Used to check that failures are reported.
  int inject_fault = -1;
};

struct HarnessFailure {
  int index = 0;
  std::uint64_t sample_seed = 0;
  std::string check;
  double magnitude = 0.0;
};

struct HarnessSummary {
  Suite suite = Suite::kMonotonicity;
  int samples = 0;
  std::uint64_t seed = 0;
  long checks = 0;
  long failed = 0;
  /// Largest amount by which a checked quantity exceeded its bound,
  /// including excesses inside the tolerance.
  double worst_violation = 0.0;
  std::vector<HarnessFailure> failures;  // in sample order, at most 20

  bool passed() const { return failed == 0; }
};

/// Seed of sample `index` derived from the run seed (splitmix64).
std::uint64_t sample_seed(std::uint64_t seed, int index);

/// Thread count from COHERENCE_KIT_THREADS, else the hardware concurrency.
int harness_threads();

/// Samples are independent and evaluated concurrently; the summary is
/// reduced in index order, so it does not depend on the thread count.
HarnessSummary run_harness(const HarnessOptions& options);

Json harness_summary_to_json(const HarnessSummary& summary);

}  // namespace coherence
