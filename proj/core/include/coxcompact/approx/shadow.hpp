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
#include <vector>

#include "coxcompact/approx/tree_builder.hpp"
#include "coxcompact/trees/metric_tree.hpp"

namespace coxcompact::approx {

/// Segment [x z] joining a site x outside the witness set to the witness z of p(x).
struct Attachment {
  std::size_t site;
  std::size_t vertex;
  GeodesicSegment segment;  // from the site to the witness
};

/// The shadow T_sh: images q(e) of the tree edges plus attachment segments.
struct Shadow {
  std::vector<GeodesicSegment> edge_images;  // indexed by tree edge, from q_V(u) to q_V(v)
  std::vector<Attachment> attachments;

  double edge_length(std::size_t edge) const { return edge_images.at(edge).length(); }
};

Shadow build_shadow(const ApproximatingTree& tree, const std::vector<HPoint>& sites);

/// q(y): the dilation of the tree edge onto its image segment.
HPoint shadow_point(const ApproximatingTree& tree, const Shadow& shadow, const trees::TreePoint& y);

/// [xy]_sh between two sites as a sequence of oriented segments. Zero-length
/// pieces are dropped; x == y gives an empty path.
std::vector<GeodesicSegment> shadow_path(const ApproximatingTree& tree, const Shadow& shadow,
                                         const std::vector<HPoint>& sites, std::size_t x, std::size_t y);

double path_length(const std::vector<GeodesicSegment>& path);

}  // namespace coxcompact::approx
