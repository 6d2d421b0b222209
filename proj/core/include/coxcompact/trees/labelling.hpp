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

#include "coxcompact/index_set.hpp"
#include "coxcompact/trees/metric_tree.hpp"

namespace coxcompact::trees {

/// Vertex -> subset of the label universe {0, ..., N-1}. Documents and reports
/// show labels 1-based.
class Labelling {
 public:
  /// Throws kInvalidArgument when N > 64 or a set uses a label >= N.
  Labelling(std::size_t universe, std::vector<IndexSet> sets);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return sets_.size(); }
  IndexSet at(std::size_t v) const { return sets_.at(v); }
  const std::vector<IndexSet>& sets() const { return sets_; }
  IndexSet full() const { return IndexSet::first(universe_); }
  IndexSet union_all() const;

  friend bool operator==(const Labelling&, const Labelling&) = default;

 private:
  std::size_t universe_;
  std::vector<IndexSet> sets_;
};

/// newLab(x) = union of Lab(a) & Lab(b) over the paths [ab] through x, computed
/// per label as the Steiner span of its carriers.
Labelling canonical_extension(const MetricTree& tree, const Labelling& lab);

/// Vertices of the smallest subtree containing every vertex in `marked`.
std::vector<bool> steiner_span(const MetricTree& tree, const std::vector<bool>& marked);

struct LabellingViolation {
  enum class Kind { kConnectedness, kSurjectivity };
  Kind kind;
  // Connectedness: `label` is in Lab(a) and Lab(b) but not in Lab(x), with x on [ab].
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t x = 0;
  // Surjectivity: `label` is carried by no vertex.
  std::size_t label = 0;
};

struct LabellingCheck {
  std::optional<LabellingViolation> violation;
  explicit operator bool() const { return !violation.has_value(); }
};

/// Checks connectedness and surjectivity, reporting the first violation found
/// (connectedness by increasing label, then surjectivity).
LabellingCheck is_labelling_system(const MetricTree& tree, const Labelling& lab);

enum class EdgeClass { kUseful, kUseless };

/// Unions of labels over the two sides of an oriented edge.
struct SideLabels {
  IndexSet plus;
  IndexSet minus;
};

SideLabels side_labels(const MetricTree& tree, const Labelling& lab, OrientedEdge e);

/// side_labels for every edge in its forward orientation, in O(V) set operations.
std::vector<SideLabels> all_side_labels(const MetricTree& tree, const Labelling& lab);

EdgeClass classify_edge(const MetricTree& tree, const Labelling& lab, OrientedEdge e);
std::vector<EdgeClass> classify_edges(const MetricTree& tree, const Labelling& lab);

/// The first vertex (by id) carrying every label.
std::optional<std::size_t> full_vertex(const MetricTree& tree, const Labelling& lab);

struct Subtree {
  std::vector<std::size_t> vertices;  // sorted
  std::vector<std::size_t> edges;     // sorted edge ids
  bool empty() const { return edges.empty(); }
};

/// The union of the useful edges.
Subtree useful_subtree(const MetricTree& tree, const Labelling& lab);

}  // namespace coxcompact::trees
