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

#include "coxcompact/coxeter/smallness.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

namespace coxcompact::coxeter {
namespace {

// The Coxeter graph joins s_i, s_j when m_ij >= 3 (including infinity).
bool graph_edge(const CoxeterSystem& system, std::size_t i, std::size_t j) {
  return i != j && system.order(i, j) >= 3;
}

std::vector<IndexSet> graph_components(IndexSet subset, const CoxeterSystem& system) {
  std::vector<IndexSet> out;
  IndexSet remaining = subset;
  while (!remaining.empty()) {
    IndexSet component{remaining.front()};
    IndexSet frontier = component;
    while (!frontier.empty()) {
      IndexSet next;
      frontier.for_each([&](std::size_t v) {
        remaining.for_each([&](std::size_t w) {
          if (graph_edge(system, v, w) && !component.contains(w)) next.insert(w);
        });
      });
      component |= next;
      frontier = next;
    }
    out.push_back(component);
    remaining = remaining - component;
  }
  return out;
}

ComponentType finite(IndexSet g, std::string symbol) { return {g, ComponentKind::kFinite, std::move(symbol)}; }
ComponentType affine(IndexSet g, std::string symbol) { return {g, ComponentKind::kAffine, std::move(symbol)}; }
ComponentType other(IndexSet g) { return {g, ComponentKind::kOther, "-"}; }

struct Graph {
  std::vector<std::size_t> vertices;
  std::vector<std::vector<std::size_t>> adjacent;  // local indices
  std::vector<std::vector<Order>> labels;          // parallel to adjacent
  std::size_t edge_count = 0;

  std::size_t degree(std::size_t v) const { return adjacent[v].size(); }
};

Graph local_graph(IndexSet component, const CoxeterSystem& system) {
  Graph g;
  g.vertices = component.indices();
  const std::size_t n = g.vertices.size();
  g.adjacent.resize(n);
  g.labels.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (graph_edge(system, g.vertices[a], g.vertices[b])) {
        g.adjacent[a].push_back(b);
        g.labels[a].push_back(system.order(g.vertices[a], g.vertices[b]));
      }
    }
  }
  for (const auto& adj : g.adjacent) g.edge_count += adj.size();
  g.edge_count /= 2;
  return g;
}

// Labels met walking from `from` through `next` until a vertex of degree != 2.
std::vector<Order> walk_leg(const Graph& g, std::size_t from, std::size_t slot) {
  std::vector<Order> labels{g.labels[from][slot]};
  std::size_t prev = from;
  std::size_t cur = g.adjacent[from][slot];
  while (g.degree(cur) == 2) {
    const std::size_t s = g.adjacent[cur][0] == prev ? 1 : 0;
    labels.push_back(g.labels[cur][s]);
    prev = cur;
    cur = g.adjacent[cur][s];
  }
  return labels;
}

ComponentType classify_path(IndexSet members, const Graph& g) {
  const std::size_t n = g.vertices.size();
  std::size_t end = 0;
  while (g.degree(end) != 1) ++end;
  std::vector<Order> seq = walk_leg(g, end, 0);
  const auto all3 = [](const std::vector<Order>& v, std::size_t from, std::size_t to) {
    return std::all_of(v.begin() + static_cast<std::ptrdiff_t>(from),
                       v.begin() + static_cast<std::ptrdiff_t>(to), [](Order m) { return m == 3; });
  };
  const std::string rank = std::to_string(n);
  const std::string affine_rank = std::to_string(n - 1);

  if (all3(seq, 0, seq.size())) return finite(members, "A" + rank);
  if (n == 2) {
    const Order m = seq[0];
    if (m == 4) return finite(members, "B2");
    if (m == 6) return finite(members, "G2");
    return finite(members, "I2(" + std::to_string(m) + ")");
  }

  std::vector<Order> rev(seq.rbegin(), seq.rend());
  for (const auto& s : {seq, rev}) {
    const std::size_t len = s.size();
    if (s[0] == 4 && all3(s, 1, len)) return finite(members, "B" + rank);
    if (len >= 2 && s[0] == 4 && s[len - 1] == 4 && all3(s, 1, len - 1)) {
      return affine(members, "~C" + affine_rank);
    }
    if (s == std::vector<Order>{3, 4, 3}) return finite(members, "F4");
    if (s == std::vector<Order>{3, 3, 4, 3}) return affine(members, "~F4");
    if (s == std::vector<Order>{5, 3}) return finite(members, "H3");
    if (s == std::vector<Order>{5, 3, 3}) return finite(members, "H4");
    if (s == std::vector<Order>{6, 3}) return affine(members, "~G2");
  }
  return other(members);
}

ComponentType classify_branched(IndexSet members, const Graph& g) {
  const std::size_t n = g.vertices.size();
  std::vector<std::size_t> branches;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) >= 3) branches.push_back(v);
  }

  if (branches.size() == 1 && g.degree(branches[0]) == 3) {
    const std::size_t b = branches[0];
    std::array<std::vector<Order>, 3> legs;
    for (std::size_t s = 0; s < 3; ++s) legs[s] = walk_leg(g, b, s);
    std::sort(legs.begin(), legs.end(), [](const auto& x, const auto& y) {
      return x.size() < y.size() || (x.size() == y.size() && x < y);
    });
    const auto plain = [](const std::vector<Order>& leg) {
      return std::all_of(leg.begin(), leg.end(), [](Order m) { return m == 3; });
    };
    const std::array<std::size_t, 3> len{legs[0].size(), legs[1].size(), legs[2].size()};
    if (plain(legs[0]) && plain(legs[1]) && plain(legs[2])) {
      if (len[0] == 1 && len[1] == 1) return finite(members, "D" + std::to_string(n));
      if (len == std::array<std::size_t, 3>{1, 2, 2}) return finite(members, "E6");
      if (len == std::array<std::size_t, 3>{1, 2, 3}) return finite(members, "E7");
      if (len == std::array<std::size_t, 3>{1, 2, 4}) return finite(members, "E8");
      if (len == std::array<std::size_t, 3>{2, 2, 2}) return affine(members, "~E6");
      if (len == std::array<std::size_t, 3>{1, 3, 3}) return affine(members, "~E7");
      if (len == std::array<std::size_t, 3>{1, 2, 5}) return affine(members, "~E8");
      return other(members);
    }
    // ~B_{n-1}: a D-type fork whose long leg ends in a 4.
    if (len[0] == 1 && len[1] == 1 && plain(legs[0]) && plain(legs[1])) {
      const auto& tail = legs[2];
      if (tail.back() == 4 && std::all_of(tail.begin(), tail.end() - 1, [](Order m) { return m == 3; })) {
        return affine(members, "~B" + std::to_string(n - 1));
      }
    }
    return other(members);
  }

  const auto all_labels_3 = [&] {
    for (const auto& ls : g.labels) {
      for (Order m : ls) {
        if (m != 3) return false;
      }
    }
    return true;
  };

  if (branches.size() == 1 && g.degree(branches[0]) == 4 && n == 5 && all_labels_3()) {
    return affine(members, "~D4");
  }
  if (branches.size() == 2 && g.degree(branches[0]) == 3 && g.degree(branches[1]) == 3 &&
      all_labels_3()) {
    const auto leaf_neighbours = [&](std::size_t v) {
      return std::count_if(g.adjacent[v].begin(), g.adjacent[v].end(),
                           [&](std::size_t w) { return g.degree(w) == 1; });
    };
    if (leaf_neighbours(branches[0]) == 2 && leaf_neighbours(branches[1]) == 2) {
      return affine(members, "~D" + std::to_string(n - 1));
    }
  }
  return other(members);
}

}  // namespace

std::string_view to_string(SmallnessReason reason) {
  switch (reason) {
    case SmallnessReason::kFiniteType: return "finite-type";
    case SmallnessReason::kAffineType: return "affine-type";
    case SmallnessReason::kMixedFiniteAffine: return "mixed-finite-affine";
    case SmallnessReason::kNonAffineComponent: return "contains-non-affine-irreducible-component";
  }
  return "unknown";
}

ComponentType classify_component(IndexSet component, const CoxeterSystem& system) {
  const Graph g = local_graph(component, system);
  const std::size_t n = g.vertices.size();
  if (n == 1) return finite(component, "A1");

  bool has_infinity = false;
  std::size_t max_degree = 0;
  for (std::size_t v = 0; v < n; ++v) {
    max_degree = std::max(max_degree, g.degree(v));
    for (Order m : g.labels[v]) has_infinity = has_infinity || !is_finite(m);
  }
  if (has_infinity) return n == 2 ? affine(component, "~A1") : other(component);

  if (g.edge_count == n) {
    const bool cycle = max_degree == 2;
    bool all3 = true;
    for (const auto& ls : g.labels) {
      for (Order m : ls) all3 = all3 && m == 3;
    }
    if (cycle && all3 && n >= 3) return affine(component, "~A" + std::to_string(n - 1));
    return other(component);
  }
  if (g.edge_count != n - 1) return other(component);
  if (max_degree <= 2) return classify_path(component, g);
  if (max_degree > 4) return other(component);
  return classify_branched(component, g);
}

SmallnessVerdict classify_smallness(IndexSet subset, const CoxeterSystem& system) {
  SmallnessVerdict verdict{true, SmallnessReason::kFiniteType, {}};
  bool any_finite = false;
  bool any_affine = false;
  bool any_other = false;
  for (const auto& component : graph_components(subset & system.all(), system)) {
    auto type = classify_component(component, system);
    any_finite = any_finite || type.kind == ComponentKind::kFinite;
    any_affine = any_affine || type.kind == ComponentKind::kAffine;
    any_other = any_other || type.kind == ComponentKind::kOther;
    verdict.components.push_back(std::move(type));
  }
  if (any_other) {
    verdict.small = false;
    verdict.reason = SmallnessReason::kNonAffineComponent;
  } else if (any_finite && any_affine) {
    verdict.reason = SmallnessReason::kMixedFiniteAffine;
  } else if (any_affine) {
    verdict.reason = SmallnessReason::kAffineType;
  }
  return verdict;
}

}  // namespace coxcompact::coxeter
