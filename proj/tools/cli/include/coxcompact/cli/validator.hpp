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

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace coxcompact::cli {

struct Validation {
  std::size_t checks = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Re-checks a rendered report against the raw system and representation
/// documents. Uses only the documents' numbers: matrix products, the Lorentz
/// form and arccosh. Nothing from the analysis library is consulted.
///
/// Tolerances come from the report's "tolerances" block, falling back to the
/// representation document and then to the library defaults.
Validation validate_report(const nlohmann::json& system_doc, const nlohmann::json& representation_doc,
                           const nlohmann::json& report);

}  // namespace coxcompact::cli
