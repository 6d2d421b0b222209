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

#include <array>
#include <cstddef>
#include <optional>
#include <utility>

#include "coxcompact/approx/tree_builder.hpp"
#include "coxcompact/trees/metric_tree.hpp"

namespace coxcompact::approx {

/// The point at distance `offset` from site i along [x_i x_j].
struct SidePosition {
  std::size_t i;
  std::size_t j;
  double offset;
};

/// The tree point at distance `offset` from vertex a along the tree path [a b].
trees::TreePoint point_along(const trees::MetricTree& tree, std::size_t a, std::size_t b, double offset);

/// Branch point of the tripod spanned by three tree vertices.
std::size_t median(const trees::MetricTree& tree, std::size_t a, std::size_t b, std::size_t c);

/// p_Delta for the triangle on three site indices (one index may repeat when
/// only two sites exist). `pos` must lie on a side of the triangle.
trees::TreePoint triangle_map(const Hull& hull, const ApproximatingTree& tree, const std::array<std::size_t, 3>& triangle,
                              const SidePosition& pos);

/// Same, locating x on the sides of the triangle. Throws kPointNotOnTriangle.
trees::TreePoint triangle_map(const Hull& hull, const ApproximatingTree& tree, const std::array<std::size_t, 3>& triangle,
                              const HPoint& x, double tol = hyperbolic::Tolerances{}.point);

/// Triangle used for points of the hull segment {i, j}: the pair plus the
/// smallest other site index (or j again when there are only two sites).
std::array<std::size_t, 3> triangle_for(const Hull& hull, std::size_t i, std::size_t j);

/// The refined map P_e. Hull segments are tried with `preference` first, then
/// in lexicographic order; the first containing x decides the triangle.
/// Throws kPointNotOnHull.
trees::TreePoint project_to_tree(const Hull& hull, const ApproximatingTree& tree, const HPoint& x,
                                 std::optional<std::pair<std::size_t, std::size_t>> preference = std::nullopt,
                                 double tol = hyperbolic::Tolerances{}.point);

}  // namespace coxcompact::approx
