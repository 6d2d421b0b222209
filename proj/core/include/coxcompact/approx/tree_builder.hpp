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
#include <optional>
#include <vector>

#include "coxcompact/hyperbolic/geometry.hpp"
#include "coxcompact/trees/metric_tree.hpp"

namespace coxcompact::approx {

using hyperbolic::GeodesicSegment;
using hyperbolic::HPoint;

/// Thinness constant of H^n for comparison tripods: ln 3.
inline constexpr double kDelta = 1.0986122886681098;

struct HullSegment {
  std::size_t i;  // i < j, site indices
  std::size_t j;
  GeodesicSegment segment;
};

/// The union Q(X) of the geodesic segments between pairs of sites.
struct Hull {
  std::vector<HPoint> sites;
  std::vector<HullSegment> segments;  // lexicographic in (i, j)

  /// Index into `segments` of the pair {i, j}.
  std::size_t segment_index(std::size_t i, std::size_t j) const;
  const GeodesicSegment& segment(std::size_t i, std::size_t j) const {
    return segments.at(segment_index(i, j)).segment;
  }
};

/// Throws kInvalidArgument for an empty set or mixed dimensions.
Hull build_hull(std::vector<HPoint> sites);

/// Smallest integer c >= 1 with size <= 2^c + 2. Throws kInvalidArgument for 0.
std::size_t c_parameter(std::size_t size);

/// A Gromov approximating tree together with the shadow witnesses q_V.
struct ApproximatingTree {
  trees::MetricTree tree;
  std::vector<std::size_t> site_map;                 // p: site -> vertex
  std::vector<HPoint> witness;                       // q_V: vertex -> point
  std::vector<std::optional<std::size_t>> witness_site;  // site index when the witness is a site
  std::size_t distinct_sites = 0;                    // |X| after merging coincident sites
  std::size_t c = 1;
  double delta = kDelta;

  /// 2 c delta, the allowed loss of d_T against d_H.
  double distortion() const { return 2.0 * static_cast<double>(c) * delta; }
};

/// Builds the tree by Gromov-product insertion from the first site. Sites
/// within `tol` of an earlier site are merged onto its vertex. Throws
/// kGATConstructionFailed if the result fails verify_gat.
ApproximatingTree build_tree(const std::vector<HPoint>& sites, double tol = hyperbolic::Tolerances{}.point);

struct GatCheck {
  double excess = 0.0;    // max over pairs of d_T - d_H (should be <= 0)
  double shortfall = 0.0; // max over pairs of d_H - 2c delta - d_T (should be <= 0)
  bool leaves_are_sites = true;
  bool ok = true;
};

/// Checks both distance inequalities on every pair of sites, with slack
/// tol * (1 + d_H), and that every leaf is a site vertex.
GatCheck verify_gat(const ApproximatingTree& tree, const std::vector<HPoint>& sites,
                    double tol = hyperbolic::Tolerances{}.point);

}  // namespace coxcompact::approx
