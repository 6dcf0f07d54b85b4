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

#include <stdexcept>
#include <string>

namespace coherence {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called with inputs outside its domain
/// (wrong dimension, parameter out of range, violated hypothesis).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A value failed its type invariant (not a density matrix, not CPTP, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure could not produce an answer.
class SolverError : public Error {
 public:
  enum class Kind { kInfeasible, kUnbounded, kNoConvergence, kNotRepresentable };

  SolverError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace coherence
