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
#include <span>
#include <string>
#include <vector>

#include "coxcompact/coxeter/system.hpp"
#include "coxcompact/index_set.hpp"

namespace coxcompact::coxeter {

struct DiagramEdge {
  std::size_t i;  // i < j
  std::size_t j;
  Order label;
  friend auto operator<=>(const DiagramEdge&, const DiagramEdge&) = default;
};

/// Labelled graph with a vertex per generator and an edge {s_i, s_j} carrying
/// m_ij exactly when m_ij is finite.
class CoxeterDiagram {
 public:
  CoxeterDiagram() = default;
  /// Throws kDuplicateGenerator on repeated names, kInvalidOrder on labels that
  /// are infinite or below 2, kInvalidArgument on self loops, repeated edges or
  /// out-of-range endpoints.
  CoxeterDiagram(std::vector<std::string> vertices, std::vector<DiagramEdge> edges);

  std::size_t vertex_count() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t v) const { return names_.at(v); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  /// Sorted by (i, j).
  const std::vector<DiagramEdge>& edges() const { return edges_; }
  IndexSet neighbours(std::size_t v) const { return adjacency_.at(v); }
  std::optional<Order> label(std::size_t a, std::size_t b) const;
  IndexSet vertices() const { return IndexSet::first(vertex_count()); }

  /// Same vertex names and same labelled edges, regardless of vertex order.
  bool same_labelled_graph(const CoxeterDiagram& other) const;

  friend bool operator==(const CoxeterDiagram&, const CoxeterDiagram&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<DiagramEdge> edges_;
  std::vector<IndexSet> adjacency_;
};

CoxeterDiagram diagram_of(const CoxeterSystem& system);

/// The maximal subdiagram spanned by `subset`; vertices keep their relative order.
CoxeterDiagram span(const CoxeterDiagram& diagram, IndexSet subset);

/// Connected components of the diagram restricted to `within`, ordered by
/// smallest member.
std::vector<IndexSet> components(const CoxeterDiagram& diagram, IndexSet within);

bool is_connected(const CoxeterDiagram& diagram);

/// True iff removing span(core) leaves at least two connected components.
bool is_separating(IndexSet core, const CoxeterDiagram& diagram);

/// Glues `a` and `b` along `c`. embed_a[v] / embed_b[v] give the image of c's
/// vertex v. The result lists a's vertices first, then b's unidentified ones.
/// Throws kNotInjective, kLabelMismatch, kDuplicateGenerator (two unidentified
/// vertices share a name).
CoxeterDiagram visual_amalgamation(const CoxeterDiagram& a, const CoxeterDiagram& b,
                                   const CoxeterDiagram& c,
                                   std::span<const std::size_t> embed_a,
                                   std::span<const std::size_t> embed_b);

/// Diagram serialization: {"vertices": [...], "edges": [[i, j, m], ...]}.
std::string serialize_diagram(const CoxeterDiagram& diagram);

}  // namespace coxcompact::coxeter
