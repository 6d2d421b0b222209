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
#include <utility>
#include <vector>

namespace coxcompact::trees {

struct TreeEdge {
  std::size_t u;
  std::size_t v;
  double length;
};

/// Edge `edge` oriented from u to v when forward, from v to u otherwise. The
/// head side T+(e) is the component of T - e containing the head.
struct OrientedEdge {
  std::size_t edge;
  bool forward = true;

  OrientedEdge reversed() const { return {edge, !forward}; }
};

/// A point of the geometric tree: the vertex `from` when offset is 0, otherwise
/// the point at distance `offset` from `from` on the edge towards the adjacent
/// vertex `to`.
struct TreePoint {
  std::size_t from;
  std::size_t to;
  double offset = 0.0;

  static TreePoint vertex(std::size_t v) { return {v, v, 0.0}; }
};

/// A finite metric tree on vertices 0..V-1. The empty tree is allowed.
class MetricTree {
 public:
  MetricTree() = default;

  /// Throws kInvalidArgument unless the edges form a tree on `vertex_count`
  /// vertices with positive finite lengths.
  MetricTree(std::size_t vertex_count, std::vector<TreeEdge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  const TreeEdge& edge(std::size_t e) const { return edges_.at(e); }

  /// (edge id, neighbour) pairs incident to v, in edge id order.
  const std::vector<std::pair<std::size_t, std::size_t>>& incident(std::size_t v) const {
    return adjacency_.at(v);
  }
  std::size_t degree(std::size_t v) const { return incident(v).size(); }
  std::vector<std::size_t> leaves() const;

  std::size_t head(OrientedEdge e) const { return e.forward ? edge(e.edge).v : edge(e.edge).u; }
  std::size_t tail(OrientedEdge e) const { return e.forward ? edge(e.edge).u : edge(e.edge).v; }

  /// The unique simple path from a to b, both included.
  std::vector<std::size_t> path(std::size_t a, std::size_t b) const;
  /// Edge ids along path(a, b).
  std::vector<std::size_t> path_edges(std::size_t a, std::size_t b) const;
  double distance(std::size_t a, std::size_t b) const;
  double distance(const TreePoint& p, const TreePoint& q) const;
  /// All distances from `source`.
  std::vector<double> distances_from(std::size_t source) const;

  /// Membership mask of T+(e).
  std::vector<bool> side(OrientedEdge e) const;

  /// Edge joining adjacent a and b, or edge_count() if they are not adjacent.
  std::size_t edge_between(std::size_t a, std::size_t b) const;

 private:
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency_;
};

}  // namespace coxcompact::trees
