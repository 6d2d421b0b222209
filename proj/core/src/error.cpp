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

#include "coxcompact/error.hpp"

namespace coxcompact {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kMalformedDocument: return "MalformedDocument";
    case ErrorCode::kInvalidOrder: return "InvalidOrder";
    case ErrorCode::kDuplicateGenerator: return "DuplicateGenerator";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotLorentz: return "NotLorentz";
    case ErrorCode::kNotInvolution: return "NotInvolution";
    case ErrorCode::kRelatorViolated: return "RelatorViolated";
    case ErrorCode::kNotSeparating: return "NotSeparating";
    case ErrorCode::kEmptySide: return "EmptySide";
    case ErrorCode::kInvalidSideAssignment: return "InvalidSideAssignment";
    case ErrorCode::kNotInjective: return "NotInjective";
    case ErrorCode::kLabelMismatch: return "LabelMismatch";
    case ErrorCode::kDisconnectedDiagram: return "DisconnectedDiagram";
    case ErrorCode::kNonPositiveArgument: return "NonPositiveArgument";
    case ErrorCode::kNonPositiveEpsilon: return "NonPositiveEpsilon";
    case ErrorCode::kDegenerateSubspace: return "DegenerateSubspace";
    case ErrorCode::kNotTimelike: return "NotTimelike";
    case ErrorCode::kInvalidPoint: return "InvalidPoint";
    case ErrorCode::kOrderMismatch: return "OrderMismatch";
    case ErrorCode::kTriangleInequalityViolated: return "TriangleInequalityViolated";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kPointNotOnTriangle: return "PointNotOnTriangle";
    case ErrorCode::kPointNotOnHull: return "PointNotOnHull";
    case ErrorCode::kGATConstructionFailed: return "GATConstructionFailed";
    case ErrorCode::kLabellingNotSurjective: return "LabellingNotSurjective";
    case ErrorCode::kSeparationCheckFailed: return "SeparationCheckFailed";
    case ErrorCode::kMidpointCheckFailed: return "MidpointCheckFailed";
    case ErrorCode::kNumericalFailure: return "NumericalFailure";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kMalformedDocument:
    case ErrorCode::kInvalidOrder:
    case ErrorCode::kDuplicateGenerator:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kNotLorentz:
    case ErrorCode::kNotInvolution:
    case ErrorCode::kRelatorViolated:
    case ErrorCode::kNotSeparating:
    case ErrorCode::kEmptySide:
    case ErrorCode::kInvalidSideAssignment:
    case ErrorCode::kNotInjective:
    case ErrorCode::kLabelMismatch:
    case ErrorCode::kNonPositiveArgument:
    case ErrorCode::kNonPositiveEpsilon:
    case ErrorCode::kInvalidPoint:
      return true;
    default:
      return false;
  }
}

}  // namespace coxcompact
