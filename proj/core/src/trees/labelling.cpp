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

#include "coxcompact/trees/labelling.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "coxcompact/error.hpp"

namespace coxcompact::trees {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void require_matching(const MetricTree& tree, const Labelling& lab) {
  if (tree.vertex_count() != lab.size()) {
    throw Error(ErrorCode::kInvalidArgument, "labelling has " + std::to_string(lab.size()) +
                                                 " vertices, tree has " + std::to_string(tree.vertex_count()));
  }
}

std::vector<bool> carriers(const Labelling& lab, std::size_t label) {
  std::vector<bool> out(lab.size());
  for (std::size_t v = 0; v < lab.size(); ++v) out[v] = lab.at(v).contains(label);
  return out;
}

// First carrier reachable from `start` without passing through `avoid`.
std::size_t first_carrier(const MetricTree& tree, const std::vector<bool>& marked, std::size_t start,
                          std::size_t avoid) {
  std::vector<bool> seen(tree.vertex_count(), false);
  seen[avoid] = seen[start] = true;
  std::deque<std::size_t> queue{start};
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    if (marked[x]) return x;
    for (const auto& [id, y] : tree.incident(x)) {
      if (seen[y]) continue;
      seen[y] = true;
      queue.push_back(y);
    }
  }
  return kNone;
}

}  // namespace

Labelling::Labelling(std::size_t universe, std::vector<IndexSet> sets)
    : universe_(universe), sets_(std::move(sets)) {
  if (universe_ > IndexSet::kCapacity) throw Error(ErrorCode::kInvalidArgument, "label universe above 64");
  for (std::size_t v = 0; v < sets_.size(); ++v) {
    if (!sets_[v].is_subset_of(full())) {
      throw Error(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) + " carries a label outside 1.." +
                                                   std::to_string(universe_));
    }
  }
}

IndexSet Labelling::union_all() const {
  IndexSet out;
  for (IndexSet s : sets_) out |= s;
  return out;
}

std::vector<bool> steiner_span(const MetricTree& tree, const std::vector<bool>& marked) {
  const std::size_t n = tree.vertex_count();
  std::vector<std::size_t> degree(n);
  std::vector<bool> removed(n, false);
  std::vector<bool> queued(n, false);
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] <= 1 && !marked[v]) {
      queued[v] = true;
      stack.push_back(v);
    }
  }
  // Peel unmarked leaves until every remaining leaf is marked.
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    removed[x] = true;
    for (const auto& [id, y] : tree.incident(x)) {
      if (removed[y]) continue;
      if (--degree[y] <= 1 && !marked[y] && !queued[y]) {
        queued[y] = true;
        stack.push_back(y);
      }
    }
  }
  std::vector<bool> span(n);
  for (std::size_t v = 0; v < n; ++v) span[v] = !removed[v];
  return span;
}

Labelling canonical_extension(const MetricTree& tree, const Labelling& lab) {
  require_matching(tree, lab);
  std::vector<IndexSet> sets = lab.sets();
  for (std::size_t label = 0; label < lab.universe(); ++label) {
    const auto span = steiner_span(tree, carriers(lab, label));
    for (std::size_t v = 0; v < sets.size(); ++v) {
      if (span[v]) sets[v].insert(label);
    }
  }
  return Labelling(lab.universe(), std::move(sets));
}

LabellingCheck is_labelling_system(const MetricTree& tree, const Labelling& lab) {
  require_matching(tree, lab);
  for (std::size_t label = 0; label < lab.universe(); ++label) {
    const auto marked = carriers(lab, label);
    const auto span = steiner_span(tree, marked);
    for (std::size_t x = 0; x < tree.vertex_count(); ++x) {
      if (!span[x] || marked[x]) continue;
      // x is in the span but unlabelled, so at least two branches at x hold carriers.
      std::vector<std::size_t> found;
      for (const auto& [id, y] : tree.incident(x)) {
        const std::size_t c = first_carrier(tree, marked, y, x);
        if (c != kNone) found.push_back(c);
        if (found.size() == 2) break;
      }
      LabellingViolation v{LabellingViolation::Kind::kConnectedness};
      v.a = found.at(0);
      v.b = found.at(1);
      v.x = x;
      v.label = label;
      return {v};
    }
  }
  const IndexSet missing = lab.full() - lab.union_all();
  if (!missing.empty()) {
    LabellingViolation v{LabellingViolation::Kind::kSurjectivity};
    v.label = missing.front();
    return {v};
  }
  return {};
}

SideLabels side_labels(const MetricTree& tree, const Labelling& lab, OrientedEdge e) {
  require_matching(tree, lab);
  const auto plus_side = tree.side(e);
  SideLabels out;
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    (plus_side[v] ? out.plus : out.minus) |= lab.at(v);
  }
  return out;
}

std::vector<SideLabels> all_side_labels(const MetricTree& tree, const Labelling& lab) {
  require_matching(tree, lab);
  const std::size_t n = tree.vertex_count();
  std::vector<SideLabels> out(tree.edge_count());
  if (n == 0) return out;

  // Root at 0; `order` lists parents before children.
  std::vector<std::size_t> parent(n, kNone);
  std::vector<std::size_t> order;
  order.reserve(n);
  parent[0] = 0;
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t x = order[i];
    for (const auto& [id, y] : tree.incident(x)) {
      if (parent[y] != kNone) continue;
      parent[y] = x;
      order.push_back(y);
    }
  }

  std::vector<IndexSet> down(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t x = *it;
    down[x] |= lab.at(x);
    if (x != 0) down[parent[x]] |= down[x];
  }

  // outside[c]: labels on the parent side of the edge above c.
  std::vector<IndexSet> outside(n);
  for (std::size_t x : order) {
    std::vector<std::size_t> children;
    for (const auto& [id, y] : tree.incident(x)) {
      if (y != 0 && parent[y] == x) children.push_back(y);
    }
    const IndexSet above = (x == 0 ? IndexSet{} : outside[x]) | lab.at(x);
    std::vector<IndexSet> suffix(children.size() + 1);
    for (std::size_t i = children.size(); i-- > 0;) suffix[i] = suffix[i + 1] | down[children[i]];
    IndexSet prefix;
    for (std::size_t i = 0; i < children.size(); ++i) {
      outside[children[i]] = above | prefix | suffix[i + 1];
      prefix |= down[children[i]];
    }
  }

  for (std::size_t id = 0; id < tree.edge_count(); ++id) {
    const TreeEdge& e = tree.edge(id);
    const std::size_t child = parent[e.v] == e.u && e.v != 0 ? e.v : e.u;
    const bool head_is_child = child == e.v;
    out[id] = head_is_child ? SideLabels{down[child], outside[child]} : SideLabels{outside[child], down[child]};
  }
  return out;
}

EdgeClass classify_edge(const MetricTree& tree, const Labelling& lab, OrientedEdge e) {
  const SideLabels s = side_labels(tree, lab, e);
  return s.plus == lab.full() || s.minus == lab.full() ? EdgeClass::kUseless : EdgeClass::kUseful;
}

std::vector<EdgeClass> classify_edges(const MetricTree& tree, const Labelling& lab) {
  std::vector<EdgeClass> out;
  out.reserve(tree.edge_count());
  for (const SideLabels& s : all_side_labels(tree, lab)) {
    out.push_back(s.plus == lab.full() || s.minus == lab.full() ? EdgeClass::kUseless : EdgeClass::kUseful);
  }
  return out;
}

std::optional<std::size_t> full_vertex(const MetricTree& tree, const Labelling& lab) {
  require_matching(tree, lab);
  for (std::size_t v = 0; v < lab.size(); ++v) {
    if (lab.at(v) == lab.full()) return v;
  }
  return std::nullopt;
}

Subtree useful_subtree(const MetricTree& tree, const Labelling& lab) {
  const auto classes = classify_edges(tree, lab);
  Subtree out;
  std::vector<bool> touched(tree.vertex_count(), false);
  for (std::size_t id = 0; id < classes.size(); ++id) {
    if (classes[id] != EdgeClass::kUseful) continue;
    out.edges.push_back(id);
    touched[tree.edge(id).u] = touched[tree.edge(id).v] = true;
  }
  for (std::size_t v = 0; v < touched.size(); ++v) {
    if (touched[v]) out.vertices.push_back(v);
  }
  return out;
}

}  // namespace coxcompact::trees
