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

#include <nlohmann/json.hpp>

#include "coxcompact/coxeter/smallness.hpp"
#include "coxcompact/coxeter/splitting.hpp"
#include "coxcompact/coxeter/system.hpp"
#include "coxcompact/hyperbolic/geometry.hpp"
#include "coxcompact/pipeline/analyze.hpp"
#include "coxcompact/pipeline/constants.hpp"

namespace coxcompact::cli {

nlohmann::ordered_json point_to_json(const hyperbolic::HPoint& x);

nlohmann::ordered_json constants_to_json(const pipeline::Constants& constants);

nlohmann::ordered_json alternatives_to_json(const pipeline::AlternativeConstants& alternatives);

nlohmann::ordered_json smallness_to_json(const coxeter::SmallnessVerdict& verdict, const coxeter::CoxeterSystem& system);

/// {"plus", "core", "minus"} as generator names.
nlohmann::ordered_json splitting_to_json(const coxeter::SpecialSplitting& splitting,
                                         const coxeter::CoxeterSystem& system);

nlohmann::ordered_json report_to_json(const pipeline::AnalysisReport& report, const coxeter::CoxeterSystem& system,
                                      const hyperbolic::Tolerances& tolerances, bool dump_tree);

}  // namespace coxcompact::cli
