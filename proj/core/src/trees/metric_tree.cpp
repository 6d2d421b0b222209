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

#include "coxcompact/trees/metric_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "coxcompact/error.hpp"

namespace coxcompact::trees {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

MetricTree::MetricTree(std::size_t vertex_count, std::vector<TreeEdge> edges)
    : edges_(std::move(edges)), adjacency_(vertex_count) {
  if (vertex_count == 0) {
    if (!edges_.empty()) throw Error(ErrorCode::kInvalidArgument, "edges given for an empty tree");
    return;
  }
  if (edges_.size() != vertex_count - 1) {
    throw Error(ErrorCode::kInvalidArgument, "a tree on " + std::to_string(vertex_count) +
                                                 " vertices has " + std::to_string(vertex_count - 1) +
                                                 " edges, got " + std::to_string(edges_.size()));
  }
  std::vector<std::size_t> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const TreeEdge& e = edges_[id];
    if (e.u >= vertex_count || e.v >= vertex_count || e.u == e.v) {
      throw Error(ErrorCode::kInvalidArgument, "edge " + std::to_string(id) + " has bad endpoints");
    }
    if (!(e.length > 0.0) || !std::isfinite(e.length)) {
      throw Error(ErrorCode::kInvalidArgument, "edge " + std::to_string(id) + " needs a positive length");
    }
    const std::size_t ru = find_root(parent, e.u);
    const std::size_t rv = find_root(parent, e.v);
    if (ru == rv) throw Error(ErrorCode::kInvalidArgument, "edges contain a cycle");
    parent[ru] = rv;
    adjacency_[e.u].emplace_back(id, e.v);
    adjacency_[e.v].emplace_back(id, e.u);
  }
}

std::vector<std::size_t> MetricTree::leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    if (degree(v) <= 1) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> MetricTree::path_edges(std::size_t a, std::size_t b) const {
  if (a >= vertex_count() || b >= vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument, "vertex out of range");
  }
  // Walk from b so that following parent edges back from a lists the path in order.
  std::vector<std::size_t> via(vertex_count(), kNone);
  std::vector<std::size_t> prev(vertex_count(), kNone);
  std::vector<std::size_t> stack{b};
  prev[b] = b;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    if (x == a) break;
    for (const auto& [id, y] : adjacency_[x]) {
      if (prev[y] != kNone) continue;
      prev[y] = x;
      via[y] = id;
      stack.push_back(y);
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t x = a; x != b; x = prev[x]) out.push_back(via[x]);
  return out;
}

std::vector<std::size_t> MetricTree::path(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> out{a};
  std::size_t x = a;
  for (std::size_t id : path_edges(a, b)) {
    x = edges_[id].u == x ? edges_[id].v : edges_[id].u;
    out.push_back(x);
  }
  return out;
}

double MetricTree::distance(std::size_t a, std::size_t b) const {
  double total = 0.0;
  for (std::size_t id : path_edges(a, b)) total += edges_[id].length;
  return total;
}

std::vector<double> MetricTree::distances_from(std::size_t source) const {
  std::vector<double> out(vertex_count(), -1.0);
  out.at(source) = 0.0;
  std::vector<std::size_t> stack{source};
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (const auto& [id, y] : adjacency_[x]) {
      if (out[y] >= 0.0) continue;
      out[y] = out[x] + edges_[id].length;
      stack.push_back(y);
    }
  }
  return out;
}

std::size_t MetricTree::edge_between(std::size_t a, std::size_t b) const {
  for (const auto& [id, y] : incident(a)) {
    if (y == b) return id;
  }
  return edge_count();
}

double MetricTree::distance(const TreePoint& p, const TreePoint& q) const {
  struct End {
    std::size_t vertex;
    double gap;
  };
  auto ends = [this](const TreePoint& t) {
    std::vector<End> out;
    if (t.offset == 0.0 || t.from == t.to) {
      out.push_back({t.from, 0.0});
      return out;
    }
    const std::size_t id = edge_between(t.from, t.to);
    if (id == edge_count()) throw Error(ErrorCode::kInvalidArgument, "tree point on a non-edge");
    out.push_back({t.from, t.offset});
    out.push_back({t.to, std::max(0.0, edges_[id].length - t.offset)});
    return out;
  };
  const auto pe = ends(p);
  const auto qe = ends(q);
  if (pe.size() == 2 && qe.size() == 2 &&
      std::minmax(p.from, p.to) == std::minmax(q.from, q.to)) {
    const double length = edges_[edge_between(p.from, p.to)].length;
    const double q_pos = q.from == p.from ? q.offset : length - q.offset;
    return std::abs(p.offset - q_pos);
  }
  double best = std::numeric_limits<double>::infinity();
  for (const End& a : pe) {
    for (const End& b : qe) best = std::min(best, a.gap + distance(a.vertex, b.vertex) + b.gap);
  }
  return best;
}

std::vector<bool> MetricTree::side(OrientedEdge e) const {
  std::vector<bool> in(vertex_count(), false);
  const std::size_t start = head(e);
  const std::size_t blocked = tail(e);
  in[start] = true;
  std::vector<std::size_t> stack{start};
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (const auto& [id, y] : adjacency_[x]) {
      if (id == e.edge || in[y] || y == blocked) continue;
      in[y] = true;
      stack.push_back(y);
    }
  }
  return in;
}

}  // namespace coxcompact::trees
