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

#include "coxcompact/coxeter/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "coxcompact/error.hpp"

namespace coxcompact::coxeter {

CoxeterDiagram::CoxeterDiagram(std::vector<std::string> vertices, std::vector<DiagramEdge> edges)
    : names_(std::move(vertices)), edges_(std::move(edges)), adjacency_(names_.size()) {
  if (names_.size() > IndexSet::kCapacity) {
    throw Error(ErrorCode::kInvalidArgument, "more than 64 diagram vertices");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw Error(ErrorCode::kDuplicateGenerator, n);
  }
  for (auto& e : edges_) {
    if (e.i > e.j) std::swap(e.i, e.j);
    if (e.j >= names_.size()) throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    if (e.i == e.j) throw Error(ErrorCode::kInvalidArgument, "self loop in diagram");
    if (!is_finite(e.label) || e.label < 2) {
      throw Error(ErrorCode::kInvalidOrder, "diagram edge labels must be finite and at least 2");
    }
    if (adjacency_[e.i].contains(e.j)) throw Error(ErrorCode::kInvalidArgument, "repeated diagram edge");
    adjacency_[e.i].insert(e.j);
    adjacency_[e.j].insert(e.i);
  }
  std::sort(edges_.begin(), edges_.end());
}

std::optional<std::size_t> CoxeterDiagram::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::optional<Order> CoxeterDiagram::label(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), DiagramEdge{a, b, 0});
  if (it == edges_.end() || it->i != a || it->j != b) return std::nullopt;
  return it->label;
}

bool CoxeterDiagram::same_labelled_graph(const CoxeterDiagram& other) const {
  const auto keyed = [](const CoxeterDiagram& d) {
    std::map<std::pair<std::string, std::string>, Order> out;
    for (const auto& e : d.edges()) {
      auto a = d.name(e.i);
      auto b = d.name(e.j);
      if (b < a) std::swap(a, b);
      out.emplace(std::pair{a, b}, e.label);
    }
    return out;
  };
  const std::set<std::string> mine(names_.begin(), names_.end());
  const std::set<std::string> theirs(other.names_.begin(), other.names_.end());
  return mine == theirs && keyed(*this) == keyed(other);
}

CoxeterDiagram diagram_of(const CoxeterSystem& system) {
  std::vector<DiagramEdge> edges;
  for (std::size_t i = 0; i < system.rank(); ++i) {
    for (std::size_t j = i + 1; j < system.rank(); ++j) {
      if (is_finite(system.order(i, j))) edges.push_back({i, j, system.order(i, j)});
    }
  }
  return CoxeterDiagram(system.generators(), std::move(edges));
}

CoxeterDiagram span(const CoxeterDiagram& diagram, IndexSet subset) {
  std::vector<std::size_t> position(diagram.vertex_count(), 0);
  std::vector<std::string> names;
  subset.for_each([&](std::size_t v) {
    position[v] = names.size();
    names.push_back(diagram.name(v));
  });
  std::vector<DiagramEdge> edges;
  for (const auto& e : diagram.edges()) {
    if (subset.contains(e.i) && subset.contains(e.j)) edges.push_back({position[e.i], position[e.j], e.label});
  }
  return CoxeterDiagram(std::move(names), std::move(edges));
}

std::vector<IndexSet> components(const CoxeterDiagram& diagram, IndexSet within) {
  std::vector<IndexSet> out;
  IndexSet remaining = within & diagram.vertices();
  while (!remaining.empty()) {
    IndexSet component{remaining.front()};
    IndexSet frontier = component;
    while (!frontier.empty()) {
      IndexSet next;
      frontier.for_each([&](std::size_t v) { next |= diagram.neighbours(v); });
      next = (next & remaining) - component;
      component |= next;
      frontier = next;
    }
    out.push_back(component);
    remaining = remaining - component;
  }
  return out;
}

bool is_connected(const CoxeterDiagram& diagram) {
  return components(diagram, diagram.vertices()).size() <= 1;
}

bool is_separating(IndexSet core, const CoxeterDiagram& diagram) {
  return components(diagram, diagram.vertices() - core).size() >= 2;
}

CoxeterDiagram visual_amalgamation(const CoxeterDiagram& a, const CoxeterDiagram& b,
                                   const CoxeterDiagram& c,
                                   std::span<const std::size_t> embed_a,
                                   std::span<const std::size_t> embed_b) {
  const std::size_t nc = c.vertex_count();
  if (embed_a.size() != nc || embed_b.size() != nc) {
    throw Error(ErrorCode::kNotInjective, "embedding size differs from the glued diagram");
  }
  const auto check_injection = [&](std::span<const std::size_t> embed, const CoxeterDiagram& target,
                                   const char* side) {
    std::set<std::size_t> image;
    for (std::size_t v = 0; v < nc; ++v) {
      if (embed[v] >= target.vertex_count() || !image.insert(embed[v]).second) {
        throw Error(ErrorCode::kNotInjective, std::string("embedding into ") + side + " is not injective");
      }
    }
    for (const auto& e : c.edges()) {
      const auto image_label = target.label(embed[e.i], embed[e.j]);
      if (!image_label) {
        throw Error(ErrorCode::kNotInjective, std::string("embedding into ") + side + " drops an edge");
      }
      if (*image_label != e.label) {
        throw Error(ErrorCode::kLabelMismatch, std::string("embedding into ") + side + " changes an edge label");
      }
    }
  };
  check_injection(embed_a, a, "A");
  check_injection(embed_b, b, "B");

  // Result vertex of each b vertex: identified ones go to their a partner.
  std::vector<std::size_t> from_b(b.vertex_count(), 0);
  std::vector<bool> identified(b.vertex_count(), false);
  for (std::size_t v = 0; v < nc; ++v) {
    from_b[embed_b[v]] = embed_a[v];
    identified[embed_b[v]] = true;
  }
  std::vector<std::string> names = a.names();
  for (std::size_t v = 0; v < b.vertex_count(); ++v) {
    if (!identified[v]) {
      from_b[v] = names.size();
      names.push_back(b.name(v));
    }
  }

  std::map<std::pair<std::size_t, std::size_t>, Order> edges;
  for (const auto& e : a.edges()) edges[{e.i, e.j}] = e.label;
  for (const auto& e : b.edges()) {
    auto u = from_b[e.i];
    auto w = from_b[e.j];
    if (u > w) std::swap(u, w);
    const auto [it, inserted] = edges.emplace(std::pair{u, w}, e.label);
    if (!inserted && it->second != e.label) {
      throw Error(ErrorCode::kLabelMismatch, "identified edge carries different labels");
    }
  }
  std::vector<DiagramEdge> list;
  for (const auto& [key, label] : edges) list.push_back({key.first, key.second, label});
  return CoxeterDiagram(std::move(names), std::move(list));
}

std::string serialize_diagram(const CoxeterDiagram& diagram) {
  nlohmann::ordered_json doc;
  doc["vertices"] = diagram.names();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : diagram.edges()) edges.push_back({e.i, e.j, e.label});
  doc["edges"] = std::move(edges);
  return doc.dump();
}

}  // namespace coxcompact::coxeter
