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

#include "coxcompact/approx/tree_builder.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "coxcompact/error.hpp"

namespace coxcompact::approx {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Rooted tree under construction; every non-root vertex hangs from its parent
// at a known height above the root.
struct Growing {
  std::vector<std::size_t> parent{kNone};
  std::vector<double> height{0.0};
  std::vector<HPoint> witness;
  std::vector<std::optional<std::size_t>> witness_site;

  std::size_t add(std::size_t up, double h, HPoint w, std::optional<std::size_t> site) {
    parent.push_back(up);
    height.push_back(h);
    witness.push_back(std::move(w));
    witness_site.push_back(site);
    return parent.size() - 1;
  }

  // Vertex at height g on the path from the root to `v`, splitting an edge if needed.
  std::size_t locate(std::size_t v, double g, double snap, const HPoint& split_witness) {
    while (v != 0 && height[parent[v]] >= g - snap) v = parent[v];
    // Either v is the root (so g <= snap) or parent[v] sits strictly below g.
    if (v == 0 || height[v] <= g + snap) return v;
    const std::size_t mid = add(parent[v], g, split_witness, std::nullopt);
    parent[v] = mid;
    return mid;
  }
};

}  // namespace

std::size_t Hull::segment_index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  const std::size_t m = sites.size();
  if (i == j || j >= m) throw Error(ErrorCode::kInvalidArgument, "no hull segment between these sites");
  return i * m - i * (i + 1) / 2 + (j - i - 1);
}

Hull build_hull(std::vector<HPoint> sites) {
  if (sites.empty()) throw Error(ErrorCode::kInvalidArgument, "hull of an empty set");
  for (const HPoint& x : sites) {
    if (x.dimension() != sites.front().dimension()) {
      throw Error(ErrorCode::kInvalidArgument, "sites of different dimensions");
    }
  }
  Hull hull{std::move(sites), {}};
  const std::size_t m = hull.sites.size();
  hull.segments.reserve(m * (m - 1) / 2);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      hull.segments.push_back({i, j, GeodesicSegment(hull.sites[i], hull.sites[j])});
    }
  }
  return hull;
}

std::size_t c_parameter(std::size_t size) {
  if (size == 0) throw Error(ErrorCode::kInvalidArgument, "c_parameter needs at least one site");
  std::size_t c = 1;
  while (c < 63 && size > (std::size_t{1} << c) + 2) ++c;
  return c;
}

ApproximatingTree build_tree(const std::vector<HPoint>& sites, double tol) {
  if (sites.empty()) throw Error(ErrorCode::kInvalidArgument, "approximating tree of an empty set");
  const std::size_t m = sites.size();
  for (const HPoint& x : sites) {
    if (x.dimension() != sites.front().dimension()) {
      throw Error(ErrorCode::kInvalidArgument, "sites of different dimensions");
    }
  }

  // Merge coincident sites onto their first occurrence.
  std::vector<std::size_t> rep(m);
  std::vector<std::size_t> distinct;
  for (std::size_t i = 0; i < m; ++i) {
    rep[i] = i;
    for (std::size_t r : distinct) {
      if (dist(sites[i], sites[r]) <= tol) {
        rep[i] = r;
        break;
      }
    }
    if (rep[i] == i) distinct.push_back(i);
  }
  const std::size_t k = distinct.size();
  const std::size_t w = distinct.front();

  // Gromov products based at w over the distinct sites, closed under
  // G(a,b) >= min(G(a,c), G(c,b)) so that they come from a tree.
  std::vector<double> dw(k);
  for (std::size_t a = 0; a < k; ++a) dw[a] = dist(sites[w], sites[distinct[a]]);
  std::vector<std::vector<double>> g(k, std::vector<double>(k));
  for (std::size_t a = 0; a < k; ++a) {
    g[a][a] = dw[a];
    for (std::size_t b = a + 1; b < k; ++b) {
      const double d = dist(sites[distinct[a]], sites[distinct[b]]);
      const double prod = std::clamp((dw[a] + dw[b] - d) / 2.0, 0.0, std::min(dw[a], dw[b]));
      g[a][b] = g[b][a] = prod;
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        g[a][b] = std::max(g[a][b], std::min(g[a][c], g[c][b]));
      }
    }
  }

  std::vector<std::size_t> order(k - 1);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dw[a] > dw[b]; });

  Growing grow;
  grow.witness.push_back(sites[w]);
  grow.witness_site.push_back(w);
  std::vector<std::size_t> vertex_of(k, kNone);
  vertex_of[0] = 0;
  std::vector<std::size_t> inserted;
  for (std::size_t x : order) {
    double best = 0.0;
    std::size_t partner = kNone;
    for (std::size_t j : inserted) {
      if (g[x][j] > best) {
        best = g[x][j];
        partner = j;
      }
    }
    const double snap = 1e-3 * tol * (1.0 + best);
    std::size_t attach = 0;
    if (partner != kNone) {
      const HPoint& xj = sites[distinct[partner]];
      const HPoint inner = dw[partner] > 0.0 ? geodesic_point(sites[w], xj, std::min(1.0, best / dw[partner])) : xj;
      attach = grow.locate(vertex_of[partner], best, snap, inner);
    }
    const std::size_t site = distinct[x];
    if (dw[x] - grow.height[attach] <= snap) {
      vertex_of[x] = attach;
      if (!grow.witness_site[attach]) {
        grow.witness[attach] = sites[site];
        grow.witness_site[attach] = site;
      }
    } else {
      vertex_of[x] = grow.add(attach, dw[x], sites[site], site);
    }
    inserted.push_back(x);
  }

  const std::size_t vertex_count = grow.parent.size();
  std::vector<trees::TreeEdge> edges;
  edges.reserve(vertex_count - 1);
  for (std::size_t v = 1; v < vertex_count; ++v) {
    edges.push_back({grow.parent[v], v, grow.height[v] - grow.height[grow.parent[v]]});
  }

  ApproximatingTree out;
  out.tree = trees::MetricTree(vertex_count, std::move(edges));
  out.witness = std::move(grow.witness);
  out.witness_site = std::move(grow.witness_site);
  out.site_map.resize(m);
  std::vector<std::size_t> slot(m, kNone);
  for (std::size_t a = 0; a < k; ++a) slot[distinct[a]] = a;
  for (std::size_t i = 0; i < m; ++i) out.site_map[i] = vertex_of[slot[rep[i]]];
  out.distinct_sites = k;
  out.c = c_parameter(k);

  const GatCheck check = verify_gat(out, sites, tol);
  if (!check.ok) {
    throw Error(ErrorCode::kGATConstructionFailed,
                "excess " + std::to_string(check.excess) + ", shortfall " + std::to_string(check.shortfall) +
                    (check.leaves_are_sites ? "" : ", a leaf is not a site"));
  }
  return out;
}

GatCheck verify_gat(const ApproximatingTree& at, const std::vector<HPoint>& sites, double tol) {
  GatCheck out;
  out.excess = -std::numeric_limits<double>::infinity();
  out.shortfall = -std::numeric_limits<double>::infinity();
  const std::size_t m = sites.size();
  if (at.site_map.size() != m) throw Error(ErrorCode::kInvalidArgument, "site map does not match the sites");
  for (std::size_t i = 0; i < m; ++i) {
    const auto dt = at.tree.distances_from(at.site_map[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      const double dh = dist(sites[i], sites[j]);
      const double d = dt[at.site_map[j]];
      const double slack = tol * (1.0 + dh);
      out.excess = std::max(out.excess, d - dh);
      out.shortfall = std::max(out.shortfall, dh - at.distortion() - d);
      if (d > dh + slack || d < dh - at.distortion() - slack) out.ok = false;
    }
  }
  if (m < 2) out.excess = out.shortfall = 0.0;
  std::vector<bool> is_site(at.tree.vertex_count(), false);
  for (std::size_t v : at.site_map) is_site[v] = true;
  for (std::size_t leaf : at.tree.leaves()) {
    if (!is_site[leaf]) out.leaves_are_sites = false;
  }
  out.ok = out.ok && out.leaves_are_sites;
  return out;
}

}  // namespace coxcompact::approx
