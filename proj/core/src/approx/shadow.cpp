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

#include "coxcompact/approx/shadow.hpp"

#include <algorithm>

#include "coxcompact/error.hpp"

namespace coxcompact::approx {

Shadow build_shadow(const ApproximatingTree& at, const std::vector<HPoint>& sites) {
  if (sites.size() != at.site_map.size()) {
    throw Error(ErrorCode::kInvalidArgument, "site list does not match the tree");
  }
  Shadow out;
  out.edge_images.reserve(at.tree.edge_count());
  for (const auto& e : at.tree.edges()) out.edge_images.emplace_back(at.witness[e.u], at.witness[e.v]);
  for (std::size_t x = 0; x < sites.size(); ++x) {
    const std::size_t v = at.site_map[x];
    if (at.witness_site[v] == x) continue;
    out.attachments.push_back({x, v, GeodesicSegment(sites[x], at.witness[v])});
  }
  return out;
}

HPoint shadow_point(const ApproximatingTree& at, const Shadow& shadow, const trees::TreePoint& y) {
  if (y.offset == 0.0 || y.from == y.to) return at.witness.at(y.from);
  const std::size_t id = at.tree.edge_between(y.from, y.to);
  if (id == at.tree.edge_count()) throw Error(ErrorCode::kInvalidArgument, "tree point on a non-edge");
  const auto& e = at.tree.edge(id);
  const double fraction = std::min(1.0, y.offset / e.length);
  return shadow.edge_images[id].at(y.from == e.u ? fraction : 1.0 - fraction);
}

std::vector<GeodesicSegment> shadow_path(const ApproximatingTree& at, const Shadow& shadow,
                                         const std::vector<HPoint>& sites, std::size_t x, std::size_t y) {
  std::vector<GeodesicSegment> out;
  if (x == y) return out;
  auto keep = [&out](GeodesicSegment s) {
    if (s.length() > 0.0) out.push_back(std::move(s));
  };
  const std::size_t px = at.site_map.at(x);
  const std::size_t py = at.site_map.at(y);
  keep(GeodesicSegment(sites.at(x), at.witness[px]));
  const auto vertices = at.tree.path(px, py);
  for (std::size_t s = 0; s + 1 < vertices.size(); ++s) {
    const std::size_t id = at.tree.edge_between(vertices[s], vertices[s + 1]);
    const GeodesicSegment& image = shadow.edge_images.at(id);
    keep(at.tree.edge(id).u == vertices[s] ? image : GeodesicSegment(image.b(), image.a()));
  }
  keep(GeodesicSegment(at.witness[py], sites.at(y)));
  return out;
}

double path_length(const std::vector<GeodesicSegment>& path) {
  double total = 0.0;
  for (const auto& s : path) total += s.length();
  return total;
}

}  // namespace coxcompact::approx
