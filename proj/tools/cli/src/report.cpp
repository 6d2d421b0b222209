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

#include "coxcompact/cli/report.hpp"

#include "coxcompact/approx/serialize.hpp"

namespace coxcompact::cli {
namespace {

using nlohmann::ordered_json;

std::string_view kind_name(coxeter::ComponentKind kind) {
  switch (kind) {
    case coxeter::ComponentKind::kFinite:
      return "finite";
    case coxeter::ComponentKind::kAffine:
      return "affine";
    default:
      return "other";
  }
}

ordered_json names(const coxeter::CoxeterSystem& system, IndexSet set) { return coxeter::names_of(system, set); }

ordered_json gat_to_json(const approx::GatCheck& gat) {
  return {{"excess", gat.excess}, {"shortfall", gat.shortfall}, {"leaves_are_sites", gat.leaves_are_sites},
          {"ok", gat.ok}};
}

ordered_json diagnostics_to_json(const pipeline::AnalysisReport& report, const coxeter::CoxeterSystem& system) {
  const auto& d = report.diagnostics;
  ordered_json out;
  out["tree_vertices"] = d.tree_vertices;
  out["tree_edges"] = d.tree_edges;
  ordered_json labels = ordered_json::array();
  if (report.labelling) {
    for (IndexSet s : report.labelling->sets()) labels.push_back(names(system, s));
  }
  out["labels"] = std::move(labels);
  out["useful_edges"] = d.useful_edges;
  out["shadow_lengths"] = d.shadow_lengths;
  out["gat"] = gat_to_json(d.gat);
  out["r_fixed_margin"] = d.r_fixed_margin;
  out["r_fixed_ok"] = d.r_fixed_ok;
  out["longest_useful_path"] = d.longest_useful_path;
  out["tight_C"] = d.tight_C;
  out["q_distortion"] = d.q_distortion;
  out["q_distortion_bound"] = d.q_distortion_bound;
  out["alternatives"] = alternatives_to_json(d.alternatives);
  out["warnings"] = d.warnings;
  return out;
}

}  // namespace

ordered_json point_to_json(const hyperbolic::HPoint& x) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index i = 0; i < x.coords().size(); ++i) out.push_back(x.coords()(i));
  return out;
}

ordered_json constants_to_json(const pipeline::Constants& c) {
  return {{"k", c.k},   {"sizeX", c.size_x}, {"c", c.c},         {"delta", c.delta},
          {"mu", c.mu}, {"R", c.R},          {"lambda_n", c.lambda_n}, {"C", c.C}};
}

ordered_json alternatives_to_json(const pipeline::AlternativeConstants& a) {
  return {{"lambda_scaled", a.lambda_scaled},
          {"R_short", a.R_short},
          {"R_pairs", a.R_pairs},
          {"C_statement", a.C_statement}};
}

ordered_json smallness_to_json(const coxeter::SmallnessVerdict& verdict, const coxeter::CoxeterSystem& system) {
  ordered_json parts = ordered_json::array();
  for (const auto& c : verdict.components) {
    parts.push_back({{"generators", names(system, c.generators)}, {"kind", kind_name(c.kind)}, {"type", c.symbol}});
  }
  return {{"small", verdict.small}, {"reason", coxeter::to_string(verdict.reason)}, {"components", std::move(parts)}};
}

ordered_json splitting_to_json(const coxeter::SpecialSplitting& s, const coxeter::CoxeterSystem& system) {
  return {{"plus", names(system, s.plus)}, {"core", names(system, s.core)}, {"minus", names(system, s.minus)}};
}

ordered_json report_to_json(const pipeline::AnalysisReport& report, const coxeter::CoxeterSystem& system,
                            const hyperbolic::Tolerances& tol, bool dump_tree) {
  ordered_json out;
  if (const auto* s = std::get_if<pipeline::SplittingOutcome>(&report.outcome)) {
    out["outcome"] = "splitting";
    ordered_json body = splitting_to_json(s->splitting, system);
    body["free_product"] = s->free_product;
    ordered_json moved = ordered_json::object();
    if (s->certificate) {
      body["certifying_edge"] = s->certificate->edge;
      body["shadow_length"] = s->certificate->shadow_length;
      body["midpoint"] = point_to_json(s->certificate->midpoint);
      for (const auto& d : s->certificate->displacements) moved[system.name(d.generator)] = d.value;
    } else {
      body["certifying_edge"] = nullptr;
      body["shadow_length"] = nullptr;
      body["midpoint"] = nullptr;
    }
    body["displacements"] = std::move(moved);
    body["smallness"] = smallness_to_json(s->smallness, system);
    out["splitting"] = std::move(body);
  } else {
    const auto& b = std::get<pipeline::BoundOutcome>(report.outcome);
    out["outcome"] = "bound";
    ordered_json moved = ordered_json::object();
    for (std::size_t g = 0; g < b.displacements.size(); ++g) moved[system.name(g)] = b.displacements[g];
    out["bound"] = {{"C", b.C},
                    {"value", b.value},
                    {"witness", point_to_json(b.witness)},
                    {"displacements", std::move(moved)},
                    {"start_vertex", b.start_vertex},
                    {"from_full_vertex", b.from_full_vertex},
                    {"start_value", b.start_value},
                    {"iterations", b.iterations}};
  }
  out["constants"] = constants_to_json(report.constants);
  out["tolerances"] = {{"point", tol.point}, {"isometry", tol.isometry}, {"fix", tol.fix}, {"thin", tol.thin}};
  ordered_json sites = ordered_json::array();
  for (const auto& site : report.sites) {
    sites.push_back({{"pair", {system.name(site.i), system.name(site.j)}}, {"point", point_to_json(site.point)}});
  }
  out["sites"] = std::move(sites);
  out["diagnostics"] = diagnostics_to_json(report, system);
  if (dump_tree && report.tree) {
    out["tree"] = approx::approximating_tree_to_json(*report.tree, report.labelling ? &*report.labelling : nullptr);
  }
  return out;
}

}  // namespace coxcompact::cli
