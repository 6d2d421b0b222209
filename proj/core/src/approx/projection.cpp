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

#include "coxcompact/approx/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coxcompact/error.hpp"

namespace coxcompact::approx {

using trees::MetricTree;
using trees::TreePoint;

TreePoint point_along(const MetricTree& tree, std::size_t a, std::size_t b, double offset) {
  if (offset <= 0.0) return TreePoint::vertex(a);
  std::size_t cur = a;
  double walked = 0.0;
  for (std::size_t id : tree.path_edges(a, b)) {
    const auto& e = tree.edge(id);
    const std::size_t next = e.u == cur ? e.v : e.u;
    if (offset < walked + e.length) {
      const double inside = offset - walked;
      return inside <= 0.0 ? TreePoint::vertex(cur) : TreePoint{cur, next, inside};
    }
    walked += e.length;
    cur = next;
  }
  return TreePoint::vertex(b);
}

std::size_t median(const MetricTree& tree, std::size_t a, std::size_t b, std::size_t c) {
  const double dab = tree.distance(a, b);
  const double dac = tree.distance(a, c);
  const double dbc = tree.distance(b, c);
  const double leg = (dab + dac - dbc) / 2.0;
  std::size_t best = a;
  double best_gap = std::abs(leg);
  double walked = 0.0;
  std::size_t cur = a;
  for (std::size_t id : tree.path_edges(a, b)) {
    const auto& e = tree.edge(id);
    cur = e.u == cur ? e.v : e.u;
    walked += e.length;
    if (std::abs(walked - leg) < best_gap) {
      best_gap = std::abs(walked - leg);
      best = cur;
    }
  }
  return best;
}

TreePoint triangle_map(const Hull& hull, const ApproximatingTree& at, const std::array<std::size_t, 3>& tri,
                       const SidePosition& pos) {
  const std::size_t m = hull.sites.size();
  for (std::size_t v : tri) {
    if (v >= m) throw Error(ErrorCode::kInvalidArgument, "triangle vertex out of range");
  }
  // Positions of the side's endpoints in the triangle, and the opposite one.
  std::size_t r = 3;
  std::size_t s = 3;
  for (std::size_t q = 0; q < 3; ++q) {
    if (r == 3 && tri[q] == pos.i) {
      r = q;
    } else if (s == 3 && tri[q] == pos.j) {
      s = q;
    }
  }
  if (r == 3 || s == 3) throw Error(ErrorCode::kPointNotOnTriangle, "side is not part of the triangle");
  const std::size_t t = 3 - r - s;
  const std::size_t i = tri[r];
  const std::size_t j = tri[s];
  const std::size_t k = tri[t];

  const double dij = dist(hull.sites[i], hull.sites[j]);
  const double dik = dist(hull.sites[i], hull.sites[k]);
  const double djk = dist(hull.sites[j], hull.sites[k]);
  const double leg_i = std::clamp((dij + dik - djk) / 2.0, 0.0, dij);
  const double leg_j = dij - leg_i;
  const double offset = std::clamp(pos.offset, 0.0, dij);

  const std::size_t pi = at.site_map.at(i);
  const std::size_t pj = at.site_map.at(j);
  const std::size_t o = median(at.tree, pi, pj, at.site_map.at(k));
  if (offset <= leg_i) {
    if (leg_i == 0.0) return TreePoint::vertex(pi);
    return point_along(at.tree, pi, o, at.tree.distance(pi, o) / leg_i * offset);
  }
  if (leg_j == 0.0) return TreePoint::vertex(pj);
  return point_along(at.tree, pj, o, at.tree.distance(pj, o) / leg_j * (dij - offset));
}

TreePoint triangle_map(const Hull& hull, const ApproximatingTree& at, const std::array<std::size_t, 3>& tri,
                       const HPoint& x, double tol) {
  constexpr std::size_t kSides[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& side : kSides) {
    const std::size_t i = std::min(tri[side[0]], tri[side[1]]);
    const std::size_t j = std::max(tri[side[0]], tri[side[1]]);
    if (i == j) {
      if (i < hull.sites.size() && dist(hull.sites[i], x) <= tol) return TreePoint::vertex(at.site_map.at(i));
      continue;
    }
    const GeodesicSegment& seg = hull.segment(i, j);
    const auto near = seg.nearest(x);
    if (near.distance <= tol * (1.0 + seg.length())) return triangle_map(hull, at, tri, {i, j, near.offset});
  }
  throw Error(ErrorCode::kPointNotOnTriangle, "point is not on the triangle");
}

std::array<std::size_t, 3> triangle_for(const Hull& hull, std::size_t i, std::size_t j) {
  if (hull.sites.size() == 2) return {i, j, j};
  std::size_t third = 0;
  while (third == i || third == j) ++third;
  return {i, j, third};
}

TreePoint project_to_tree(const Hull& hull, const ApproximatingTree& at, const HPoint& x,
                          std::optional<std::pair<std::size_t, std::size_t>> preference, double tol) {
  if (hull.sites.size() == 1) {
    if (dist(hull.sites[0], x) <= tol) return TreePoint::vertex(at.site_map.at(0));
    throw Error(ErrorCode::kPointNotOnHull, "point is not the single site");
  }
  std::vector<std::size_t> order;
  order.reserve(hull.segments.size());
  if (preference) order.push_back(hull.segment_index(preference->first, preference->second));
  for (std::size_t s = 0; s < hull.segments.size(); ++s) {
    if (order.empty() || s != order.front()) order.push_back(s);
  }
  for (std::size_t s : order) {
    const HullSegment& hs = hull.segments[s];
    const auto near = hs.segment.nearest(x);
    if (near.distance <= tol * (1.0 + hs.segment.length())) {
      return triangle_map(hull, at, triangle_for(hull, hs.i, hs.j), {hs.i, hs.j, near.offset});
    }
  }
  throw Error(ErrorCode::kPointNotOnHull, "point lies on no segment of the hull");
}

}  // namespace coxcompact::approx
