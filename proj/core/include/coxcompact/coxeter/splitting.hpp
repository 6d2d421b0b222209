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

#include <vector>

#include "coxcompact/coxeter/diagram.hpp"
#include "coxcompact/index_set.hpp"

namespace coxcompact::coxeter {

/// Amalgam <plus> *_<core> <minus> with the subset inclusions as amalgamation maps.
struct SpecialSplitting {
  IndexSet plus;
  IndexSet core;
  IndexSet minus;
  bool trivial = false;

  /// Swaps sides so that `plus` precedes `minus` lexicographically.
  SpecialSplitting canonical() const;

  friend bool operator==(const SpecialSplitting&, const SpecialSplitting&) = default;
};

/// Splitting determined by a separating core. `side_a` must be a union of
/// components of the diagram minus the core; the remaining components form
/// the other side. Throws kNotSeparating, kEmptySide, kInvalidSideAssignment.
SpecialSplitting splitting_from_core(IndexSet core, const CoxeterDiagram& diagram,
                                     IndexSet side_a);

/// Every nontrivial special splitting: all separating cores and all two-block
/// partitions of their complement components, canonicalised and sorted.
/// Throws kInvalidArgument above rank 24 (the search is exponential).
std::vector<SpecialSplitting> enumerate_special_splittings(const CoxeterDiagram& diagram);

/// span(plus) glued to span(minus) over span(core).
CoxeterDiagram recombine(const SpecialSplitting& splitting, const CoxeterDiagram& diagram);

}  // namespace coxcompact::coxeter
