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

#include "coxcompact/pipeline/generator_labelling.hpp"

#include <string>

#include "coxcompact/coxeter/diagram.hpp"
#include "coxcompact/error.hpp"
#include "coxcompact/hyperbolic/estimates.hpp"

namespace coxcompact::pipeline {

std::vector<Site> fixed_point_sites(const coxeter::CoxeterSystem& system, const Representation& rep) {
  if (!system.has_connected_diagram()) {
    throw Error(ErrorCode::kDisconnectedDiagram, "fixed-point sites need a connected diagram");
  }
  if (rep.rank() != system.rank()) throw Error(ErrorCode::kInvalidArgument, "representation rank differs");
  std::vector<Site> out;
  if (system.rank() == 1) {
    out.push_back({0, 0, hyperbolic::dihedral_fixed_point(rep.image(0), rep.image(0), 1, rep.tolerances())});
    return out;
  }
  for (std::size_t i = 0; i < system.rank(); ++i) {
    for (std::size_t j = i + 1; j < system.rank(); ++j) {
      const coxeter::Order m = system.order(i, j);
      if (!coxeter::is_finite(m)) continue;
      try {
        out.push_back({i, j, hyperbolic::dihedral_fixed_point(rep.image(i), rep.image(j), m, rep.tolerances())});
      } catch (const Error& e) {
        throw Error(e.code(), "pair {" + system.name(i) + ", " + system.name(j) + "}: " + e.what());
      }
    }
  }
  return out;
}

std::vector<HPoint> points_of(const std::vector<Site>& sites) {
  std::vector<HPoint> out;
  out.reserve(sites.size());
  for (const Site& s : sites) out.push_back(s.point);
  return out;
}

IndexSet stabilizer(const HPoint& x, const Representation& rep, double tol) {
  IndexSet out;
  for (std::size_t g = 0; g < rep.rank(); ++g) {
    if (dist(x, rep.image(g)(x)) <= tol) out.insert(g);
  }
  return out;
}

trees::Labelling base_labelling(const approx::ApproximatingTree& tree, const std::vector<HPoint>& sites,
                                const Representation& rep) {
  std::vector<IndexSet> sets(tree.tree.vertex_count());
  for (std::size_t x = 0; x < sites.size(); ++x) {
    sets.at(tree.site_map.at(x)) |= stabilizer(sites[x], rep, rep.tolerances().fix);
  }
  return trees::Labelling(rep.rank(), std::move(sets));
}

trees::Labelling generator_labelling(const approx::ApproximatingTree& tree, const std::vector<HPoint>& sites,
                                     const Representation& rep) {
  trees::Labelling lab = trees::canonical_extension(tree.tree, base_labelling(tree, sites, rep));
  const trees::LabellingCheck check = trees::is_labelling_system(tree.tree, lab);
  if (!check) {
    const auto& v = *check.violation;
    if (v.kind == trees::LabellingViolation::Kind::kSurjectivity) {
      throw Error(ErrorCode::kLabellingNotSurjective,
                  "generator " + std::to_string(v.label + 1) + " fixes no site within tol_fix");
    }
    throw Error(ErrorCode::kNumericalFailure, "canonical extension left a disconnected label");
  }
  return lab;
}

bool r_fixed(const HPoint& x, IndexSet gens, const Representation& rep, double R) {
  bool ok = true;
  gens.for_each([&](std::size_t g) { ok = ok && dist(x, rep.image(g)(x)) <= R; });
  return ok;
}

coxeter::SpecialSplitting splitting_from_edge(const trees::MetricTree& tree, const trees::Labelling& lab,
                                              trees::OrientedEdge e, const coxeter::CoxeterSystem& system) {
  const trees::SideLabels sides = trees::side_labels(tree, lab, e);
  const IndexSet all = system.all();
  coxeter::SpecialSplitting out{sides.plus, sides.plus & sides.minus, sides.minus,
                                sides.plus == all || sides.minus == all};
  if ((out.plus | out.minus) != all) {
    throw Error(ErrorCode::kSeparationCheckFailed, "the two sides of the edge miss a generator");
  }
  if (out.trivial) return out;
  const coxeter::CoxeterDiagram diagram = coxeter::diagram_of(system);
  for (const auto& edge : diagram.edges()) {
    const IndexSet a = out.plus - out.core;
    const IndexSet b = out.minus - out.core;
    const bool crosses = (a.contains(edge.i) && b.contains(edge.j)) || (a.contains(edge.j) && b.contains(edge.i));
    if (crosses) {
      throw Error(ErrorCode::kSeparationCheckFailed,
                  "diagram edge {" + system.name(edge.i) + ", " + system.name(edge.j) + "} crosses the core");
    }
  }
  if (!coxeter::is_separating(out.core, diagram)) {
    throw Error(ErrorCode::kSeparationCheckFailed, "core does not separate the diagram");
  }
  return out;
}

std::variant<EdgeCertificate, NotLongEnough> certify_small_edge(const approx::ApproximatingTree& tree,
                                                                const approx::Shadow& shadow,
                                                                const trees::Labelling& lab, std::size_t edge,
                                                                const Representation& rep, const Constants& constants) {
  const trees::SideLabels sides = trees::side_labels(tree.tree, lab, {edge, true});
  const IndexSet core = sides.plus & sides.minus;
  const double length = shadow.edge_length(edge);
  EdgeCertificate cert{edge, core, length, shadow.edge_images.at(edge).midpoint(), {}};
  if (core.empty()) return cert;
  if (length < constants.lambda_n) return NotLongEnough{length, constants.lambda_n};
  const double limit = constants.mu + rep.tolerances().fix;
  core.for_each([&](std::size_t g) {
    const double moved = dist(cert.midpoint, rep.image(g)(cert.midpoint));
    cert.displacements.push_back({g, moved});
    if (moved > limit) {
      throw Error(ErrorCode::kMidpointCheckFailed, "generator " + std::to_string(g + 1) + " moves the midpoint of edge " +
                                                       std::to_string(edge) + " by " + std::to_string(moved));
    }
  });
  return cert;
}

}  // namespace coxcompact::pipeline
