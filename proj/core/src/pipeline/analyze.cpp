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

#include "coxcompact/pipeline/analyze.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

#include <fmt/format.h>

#include "coxcompact/coxeter/diagram.hpp"
#include "coxcompact/error.hpp"
#include "coxcompact/pipeline/displacement.hpp"

namespace coxcompact::pipeline {
namespace {

using coxeter::CoxeterSystem;

std::size_t finite_pairs(const CoxeterSystem& system) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < system.rank(); ++i) {
    for (std::size_t j = i + 1; j < system.rank(); ++j) count += coxeter::is_finite(system.order(i, j)) ? 1 : 0;
  }
  return count;
}

AnalysisReport free_product_report(const CoxeterSystem& system, double mu, const AnalyzeOptions& options) {
  const auto diagram = coxeter::diagram_of(system);
  const auto parts = coxeter::components(diagram, system.all());
  const IndexSet plus = parts.front();
  SplittingOutcome outcome{coxeter::SpecialSplitting{plus, IndexSet{}, system.all() - plus, false}.canonical(), true,
                           std::nullopt, coxeter::classify_smallness(IndexSet{}, system)};
  const Constants constants =
      options.constants ? *options.constants
                        : constants_for(system.rank(), std::max<std::size_t>(1, finite_pairs(system)), mu);
  AnalysisReport report{std::move(outcome), constants, {}, {}, std::nullopt, std::nullopt};
  report.diagnostics.alternatives = alternatives_for(constants);
  report.diagnostics.tight_C = tight_bound(constants, 0);
  return report;
}

// Number of edges on the longest path inside the subtree.
std::size_t longest_path(const trees::MetricTree& tree, const trees::Subtree& sub) {
  if (sub.edges.empty()) return 0;
  std::vector<std::vector<std::size_t>> adj(tree.vertex_count());
  for (std::size_t e : sub.edges) {
    adj[tree.edge(e).u].push_back(tree.edge(e).v);
    adj[tree.edge(e).v].push_back(tree.edge(e).u);
  }
  auto farthest = [&](std::size_t source) {
    std::vector<std::size_t> depth(tree.vertex_count(), std::numeric_limits<std::size_t>::max());
    std::queue<std::size_t> todo;
    depth[source] = 0;
    todo.push(source);
    std::pair<std::size_t, std::size_t> best{0, source};
    while (!todo.empty()) {
      const std::size_t v = todo.front();
      todo.pop();
      best = std::max(best, {depth[v], v});
      for (std::size_t w : adj[v]) {
        if (depth[w] == std::numeric_limits<std::size_t>::max()) {
          depth[w] = depth[v] + 1;
          todo.push(w);
        }
      }
    }
    return best;
  };
  return farthest(farthest(tree.edge(sub.edges.front()).u).second).first;
}

}  // namespace

AnalysisReport analyze(const CoxeterSystem& system, const Representation& rep, double mu,
                       const AnalyzeOptions& options) {
  if (system.rank() != rep.rank()) {
    throw Error(ErrorCode::kInvalidArgument, "representation rank does not match the system");
  }
  if (!system.has_connected_diagram()) return free_product_report(system, mu, options);

  const auto& tol = rep.tolerances();
  std::vector<Site> sites = fixed_point_sites(system, rep);
  const std::vector<HPoint> points = points_of(sites);
  approx::ApproximatingTree at = approx::build_tree(points, tol.point);
  const approx::Shadow shadow = approx::build_shadow(at, points);
  trees::Labelling lab = generator_labelling(at, points, rep);
  const trees::MetricTree& tree = at.tree;
  const trees::Subtree spl = trees::useful_subtree(tree, lab);
  const Constants constants =
      options.constants ? *options.constants : constants_for(system.rank(), at.distinct_sites, mu);

  Diagnostics diag;
  diag.tree_vertices = tree.vertex_count();
  diag.tree_edges = tree.edge_count();
  diag.useful_edges = spl.edges;
  for (std::size_t e = 0; e < tree.edge_count(); ++e) diag.shadow_lengths.push_back(shadow.edge_length(e));
  diag.gat = approx::verify_gat(at, points, tol.point);
  if (!diag.gat.ok) diag.warnings.push_back("approximating tree fails the GAT check");

  diag.r_fixed_margin = -constants.R;
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    const HPoint& q = at.witness[v];
    lab.at(v).for_each([&](std::size_t s) {
      diag.r_fixed_margin = std::max(diag.r_fixed_margin, dist(q, rep.image(s)(q)) - constants.R);
    });
  }
  diag.r_fixed_ok = diag.r_fixed_margin <= tol.fix;
  if (!diag.r_fixed_ok) {
    diag.warnings.push_back(fmt::format("a labelled vertex shadow is moved {:.3e} beyond R", diag.r_fixed_margin));
  }
  diag.longest_useful_path = longest_path(tree, spl);
  diag.tight_C = tight_bound(constants, diag.longest_useful_path);
  for (std::size_t u = 0; u < tree.vertex_count(); ++u) {
    const auto dt = tree.distances_from(u);
    for (std::size_t v = u + 1; v < tree.vertex_count(); ++v) {
      diag.q_distortion = std::max(diag.q_distortion, std::abs(dist(at.witness[u], at.witness[v]) - dt[v]));
    }
  }
  diag.q_distortion_bound =
      static_cast<double>(at.distinct_sites) * (20.0 * static_cast<double>(at.c) * at.delta + 12.0 * at.delta);
  if (diag.q_distortion > diag.q_distortion_bound) {
    diag.warnings.push_back("shadow distortion exceeds |X|(20c delta + 12 delta)");
  }
  diag.alternatives = alternatives_for(constants);

  std::vector<std::size_t> order = spl.edges;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return diag.shadow_lengths[a] > diag.shadow_lengths[b];
  });
  for (std::size_t e : order) {
    auto attempt = certify_small_edge(at, shadow, lab, e, rep, constants);
    auto* cert = std::get_if<EdgeCertificate>(&attempt);
    if (cert == nullptr) continue;
    SplittingOutcome outcome{splitting_from_edge(tree, lab, trees::OrientedEdge{e, true}, system).canonical(), false,
                             std::move(*cert), {}};
    if (outcome.splitting.trivial) {
      throw Error(ErrorCode::kSeparationCheckFailed, fmt::format("useful edge {} produced a trivial splitting", e));
    }
    outcome.smallness = coxeter::classify_smallness(outcome.splitting.core, system);
    if (!outcome.smallness.small) {
      diag.warnings.push_back("certified core is not small by type classification");
    }
    return AnalysisReport{std::move(outcome), constants, std::move(diag), std::move(sites), std::move(at),
                          std::move(lab)};
  }

  BoundOutcome bound{constants.C, 0, false, 0.0, at.witness.front(), {}, 0.0, 0};
  if (const auto full = trees::full_vertex(tree, lab)) {
    bound.start_vertex = *full;
    bound.from_full_vertex = true;
  } else {
    std::vector<std::size_t> candidates = spl.vertices;
    if (candidates.empty()) {
      candidates.resize(tree.vertex_count());
      std::iota(candidates.begin(), candidates.end(), std::size_t{0});
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t v : candidates) {
      const double value = displacement(rep, at.witness[v]);
      if (value < best) {
        best = value;
        bound.start_vertex = v;
      }
    }
  }
  const HPoint& start = at.witness[bound.start_vertex];
  bound.start_value = displacement(rep, start);
  MinimizeResult run = minimize_displacement(rep, start, options.budget);
  bound.witness = run.point;
  bound.value = run.value;
  bound.iterations = run.iterations;
  bound.displacements = displacements(rep, run.point);
  if (bound.value > constants.C + tol.fix) {
    throw Error(ErrorCode::kNumericalFailure,
                fmt::format("no certified edge and the displacement {:.17g} at the witness (start vertex {}, start "
                            "value {:.17g}) exceeds C = {:.17g}",
                            bound.value, bound.start_vertex, bound.start_value, constants.C));
  }
  return AnalysisReport{std::move(bound), constants, std::move(diag), std::move(sites), std::move(at), std::move(lab)};
}

}  // namespace coxcompact::pipeline
