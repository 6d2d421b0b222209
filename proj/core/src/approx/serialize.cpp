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

#include "coxcompact/approx/serialize.hpp"

namespace coxcompact::approx {

using nlohmann::ordered_json;

ordered_json tree_to_json(const trees::MetricTree& tree, const trees::Labelling* labels) {
  ordered_json out;
  ordered_json vertices = ordered_json::array();
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) vertices.push_back(v);
  out["vertices"] = std::move(vertices);
  ordered_json edges = ordered_json::array();
  for (const auto& e : tree.edges()) edges.push_back(ordered_json::array({e.u, e.v, e.length}));
  out["edges"] = std::move(edges);
  if (labels != nullptr) {
    ordered_json sets = ordered_json::array();
    for (IndexSet s : labels->sets()) {
      ordered_json one = ordered_json::array();
      s.for_each([&](std::size_t i) { one.push_back(i + 1); });
      sets.push_back(std::move(one));
    }
    out["labels"] = std::move(sets);
  }
  return out;
}

ordered_json approximating_tree_to_json(const ApproximatingTree& at, const trees::Labelling* labels) {
  ordered_json out = tree_to_json(at.tree, labels);
  out["site_map"] = at.site_map;
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : at.witness) {
    ordered_json coords = ordered_json::array();
    for (Eigen::Index i = 0; i < w.coords().size(); ++i) coords.push_back(w.coords()(i));
    witnesses.push_back(std::move(coords));
  }
  out["witnesses"] = std::move(witnesses);
  ordered_json sources = ordered_json::array();
  for (const auto& s : at.witness_site) sources.push_back(s ? ordered_json(*s) : ordered_json(nullptr));
  out["witness_sites"] = std::move(sources);
  out["c"] = at.c;
  out["delta"] = at.delta;
  return out;
}

}  // namespace coxcompact::approx
