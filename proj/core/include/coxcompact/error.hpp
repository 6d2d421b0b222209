// Copyright 2026 The coxcompact Authors
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
#include <string_view>

namespace coxcompact {

enum class ErrorCode {
  // Input documents and arguments.
  kMalformedDocument,
  kInvalidOrder,
  kDuplicateGenerator,
  kInvalidArgument,
  kNotLorentz,
  kNotInvolution,
  kRelatorViolated,
  // Combinatorial preconditions.
  kNotSeparating,
  kEmptySide,
  kInvalidSideAssignment,
  kNotInjective,
  kLabelMismatch,
  kDisconnectedDiagram,
  // Geometry.
  kNonPositiveArgument,
  kNonPositiveEpsilon,
  kDegenerateSubspace,
  kNotTimelike,
  kInvalidPoint,
  kOrderMismatch,
  kTriangleInequalityViolated,
  kPreconditionViolated,
  kPointNotOnTriangle,
  kPointNotOnHull,
  // Numerical breakdowns inside the pipeline.
  kGATConstructionFailed,
  kLabellingNotSurjective,
  kSeparationCheckFailed,
  kMidpointCheckFailed,
  kNumericalFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for errors caused by bad user input rather than numerical breakdown.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coxcompact
