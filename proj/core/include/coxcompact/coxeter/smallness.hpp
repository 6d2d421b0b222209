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

#include <string>
#include <string_view>
#include <vector>

#include "coxcompact/coxeter/system.hpp"
#include "coxcompact/index_set.hpp"

namespace coxcompact::coxeter {

enum class SmallnessReason {
  kFiniteType,
  kAffineType,
  kMixedFiniteAffine,
  kNonAffineComponent,
};

std::string_view to_string(SmallnessReason reason);

enum class ComponentKind { kFinite, kAffine, kOther };

struct ComponentType {
  IndexSet generators;
  ComponentKind kind;
  /// Type symbol such as "A3", "I2(5)", "~E6", or "-" when unrecognised.
  std::string symbol;
};

struct SmallnessVerdict {
  bool small;
  SmallnessReason reason;
  std::vector<ComponentType> components;
};

/// Irreducible components of <subset> (connected components of the Coxeter
/// graph, whose edges are the pairs with m_ij >= 3 or infinite) matched against
/// the finite and affine tables. Small iff every component is finite or affine.
SmallnessVerdict classify_smallness(IndexSet subset, const CoxeterSystem& system);

/// Classifies one irreducible component.
ComponentType classify_component(IndexSet component, const CoxeterSystem& system);

}  // namespace coxcompact::coxeter
