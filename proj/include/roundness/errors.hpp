// Copyright 2026 The roundness authors
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
#include <utility>
#include <vector>

namespace roundness {

/// An argument violates an operation precondition or a type invariant.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Geometrically degenerate input, e.g. duplicate points producing a zero
/// off-diagonal distance.
class DegenerateInput : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Exponent outside the domain of the requested quantity.
class InvalidExponent : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Parameter outside the domain on which a closed form is derived.
class OutOfDomain : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A weighted simplex fails its shape or mass-balance invariants.
class InvalidWitness : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A numeric routine (eigensolver, quadrature) missed its accuracy target.
/// `residual` is the achieved error estimate.
class NumericFailure : public std::runtime_error {
 public:
  NumericFailure(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// A refinement loop exhausted its budget before its stopping rule fired.
/// Carries the (size, value) trace accumulated so far.
class ConvergenceFailure : public std::runtime_error {
 public:
  ConvergenceFailure(const std::string& what,
                     std::vector<std::pair<int, double>> trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const std::vector<std::pair<int, double>>& trace() const { return trace_; }

 private:
  std::vector<std::pair<int, double>> trace_;
};

}  // namespace roundness
