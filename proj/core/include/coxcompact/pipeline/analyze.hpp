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
#include <string>
#include <variant>
#include <vector>

#include "coxcompact/approx/shadow.hpp"
#include "coxcompact/approx/tree_builder.hpp"
#include "coxcompact/coxeter/smallness.hpp"
#include "coxcompact/coxeter/splitting.hpp"
#include "coxcompact/coxeter/system.hpp"
#include "coxcompact/pipeline/constants.hpp"
#include "coxcompact/pipeline/generator_labelling.hpp"
#include "coxcompact/pipeline/representation.hpp"
#include "coxcompact/trees/labelling.hpp"

namespace coxcompact::pipeline {

struct AnalyzeOptions {
  std::size_t budget = 2000;
  /// Replaces constants_for(k, |X|, mu); used to exercise the certificate path.
  std::optional<Constants> constants;
};

struct SplittingOutcome {
  coxeter::SpecialSplitting splitting;
  bool free_product = false;               // disconnected diagram, trivial core
  std::optional<EdgeCertificate> certificate;
  coxeter::SmallnessVerdict smallness;     // table verdict on the core
};

struct BoundOutcome {
  double C;
  std::size_t start_vertex;
  bool from_full_vertex;
  double start_value;
  HPoint witness;
  std::vector<double> displacements;  // per generator at the witness
  double value;
  std::size_t iterations;
};

struct Diagnostics {
  std::size_t tree_vertices = 0;
  std::size_t tree_edges = 0;
  std::vector<std::size_t> useful_edges;
  std::vector<double> shadow_lengths;  // per tree edge
  approx::GatCheck gat;
  // Labelled-vertex R-fixedness: largest d(q(v), s q(v)) - R over labels s of v.
  double r_fixed_margin = 0.0;
  bool r_fixed_ok = true;
  std::size_t longest_useful_path = 0;  // E
  double tight_C = 0.0;
  // Largest |d_H(q(u), q(v)) - d_T(u, v)| over vertex pairs, and its conjectured bound.
  double q_distortion = 0.0;
  double q_distortion_bound = 0.0;
  AlternativeConstants alternatives{};
  std::vector<std::string> warnings;
};

struct AnalysisReport {
  std::variant<SplittingOutcome, BoundOutcome> outcome;
  Constants constants;
  Diagnostics diagnostics;
  std::vector<Site> sites;
  std::optional<approx::ApproximatingTree> tree;
  std::optional<trees::Labelling> labelling;

  bool is_splitting() const { return std::holds_alternative<SplittingOutcome>(outcome); }
};

/// Either a small nontrivial special splitting certified on a long useful edge
/// (or a free product for a disconnected diagram), or a point moved at most C by
/// every generator. Throws kNumericalFailure if a certificate cannot be produced.
AnalysisReport analyze(const coxeter::CoxeterSystem& system, const Representation& rep, double mu,
                       const AnalyzeOptions& options = {});

}  // namespace coxcompact::pipeline
