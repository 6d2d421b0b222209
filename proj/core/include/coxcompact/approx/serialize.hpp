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

#include "coxcompact/approx/tree_builder.hpp"
#include "coxcompact/trees/labelling.hpp"

namespace coxcompact::approx {

/// {"vertices": [0..V-1], "edges": [[u, v, length], ...], "labels": [[1-based labels], ...]}.
/// "labels" is present only when a labelling is given.
nlohmann::ordered_json tree_to_json(const trees::MetricTree& tree, const trees::Labelling* labels = nullptr);

/// tree_to_json plus "site_map", "witnesses" (coordinates per vertex),
/// "witness_sites" (site index or null), "c" and "delta".
nlohmann::ordered_json approximating_tree_to_json(const ApproximatingTree& tree,
                                                  const trees::Labelling* labels = nullptr);

}  // namespace coxcompact::approx
