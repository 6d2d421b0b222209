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
#include <variant>
#include <vector>

#include "coxcompact/approx/shadow.hpp"
#include "coxcompact/approx/tree_builder.hpp"
#include "coxcompact/coxeter/splitting.hpp"
#include "coxcompact/coxeter/system.hpp"
#include "coxcompact/pipeline/constants.hpp"
#include "coxcompact/pipeline/representation.hpp"
#include "coxcompact/trees/labelling.hpp"

namespace coxcompact::pipeline {

/// A representative fixed point of the finite dihedral group <s_i, s_j>.
struct Site {
  std::size_t i;
  std::size_t j;
  HPoint point;
};

/// One site per finite pair i < j. A rank-1 system yields the single site of
/// <s1>. Throws kDisconnectedDiagram, and propagates dihedral_fixed_point errors.
std::vector<Site> fixed_point_sites(const coxeter::CoxeterSystem& system, const Representation& rep);

std::vector<HPoint> points_of(const std::vector<Site>& sites);

/// Generators s with d(x, s x) <= tol.
IndexSet stabilizer(const HPoint& x, const Representation& rep, double tol);

/// Lab(v): union of the stabilisers of the sites mapped to v.
trees::Labelling base_labelling(const approx::ApproximatingTree& tree, const std::vector<HPoint>& sites,
                                const Representation& rep);

/// Canonical extension of base_labelling. Throws kLabellingNotSurjective.
trees::Labelling generator_labelling(const approx::ApproximatingTree& tree, const std::vector<HPoint>& sites,
                                     const Representation& rep);

/// d(x, s x) <= R for every s in gens.
bool r_fixed(const HPoint& x, IndexSet gens, const Representation& rep, double R);

/// (S+(e), S*(e), S-(e)) read off the labels on the two sides of e; trivial iff e
/// is useless. Throws kSeparationCheckFailed when a nontrivial core does not
/// separate the diagram or the sides miss a generator.
coxeter::SpecialSplitting splitting_from_edge(const trees::MetricTree& tree, const trees::Labelling& lab,
                                              trees::OrientedEdge e, const coxeter::CoxeterSystem& system);

struct Displacement {
  std::size_t generator;
  double value;
};

struct EdgeCertificate {
  std::size_t edge;
  IndexSet core;
  double shadow_length;
  HPoint midpoint;
  std::vector<Displacement> displacements;  // one per generator of the core
};

struct NotLongEnough {
  double shadow_length;
  double lambda_n;
};

/// Margulis certificate for S*(e): when |q(e)| >= lambda_n every core generator
/// moves the midpoint of q(e) at most mu + tol.fix. An empty core is certified
/// outright. Throws kMidpointCheckFailed.
std::variant<EdgeCertificate, NotLongEnough> certify_small_edge(const approx::ApproximatingTree& tree,
                                                                const approx::Shadow& shadow,
                                                                const trees::Labelling& lab, std::size_t edge,
                                                                const Representation& rep, const Constants& constants);

}  // namespace coxcompact::pipeline
