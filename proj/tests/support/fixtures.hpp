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
#include <random>
#include <string>
#include <vector>

#include "coxcompact/coxeter/system.hpp"
#include "coxcompact/hyperbolic/geometry.hpp"
#include "coxcompact/hyperbolic/isometry.hpp"
#include "coxcompact/pipeline/representation.hpp"
#include "coxcompact/trees/labelling.hpp"
#include "coxcompact/trees/metric_tree.hpp"

namespace coxcompact::testing {

using Rng = std::mt19937_64;
using hyperbolic::HIsometry;
using hyperbolic::HPoint;
using hyperbolic::Matrix;
using hyperbolic::Vector;

std::string data_path(const std::string& name);

// --- systems -------------------------------------------------------------

/// s1..s4 around a 4-cycle with m12 = 2, m23 = 4, m34 = 3, m41 = 4.
coxeter::CoxeterSystem quadrilateral_system();

/// s1 - s2 - ... - sk with every edge labelled m.
coxeter::CoxeterSystem path_system(std::size_t k, coxeter::Order m = 3);

coxeter::CoxeterSystem dihedral_system(coxeter::Order m);

// --- representations -----------------------------------------------------

/// Reflections in the sides of a right-angled-at-s1s2 quadrilateral in H^2
/// with angles pi/2, pi/4, pi/3, pi/4 and ultraparallel opposite sides.
pipeline::Representation quadrilateral_representation();

/// Reflection representation of a finite Coxeter group on H^k (k = rank)
/// whose mirrors all pass through `center`.
pipeline::Representation spherical_representation(const coxeter::CoxeterSystem& system, const HPoint& center);

std::vector<std::vector<double>> rows_of(const pipeline::Representation& rep);

// --- random generators ---------------------------------------------------

Vector random_direction(Rng& rng, std::size_t dim);

/// Point at a uniformly chosen distance in [0, max_radius] from `center`.
HPoint random_point_near(Rng& rng, const HPoint& center, double max_radius);

HPoint random_point(Rng& rng, std::size_t n, double max_radius);

/// Rotation about e0 by a random orthogonal matrix.
HIsometry random_rotation(Rng& rng, std::size_t n);

/// Reflection through a random totally geodesic subspace through x, of a
/// random dimension between 0 and n - 1.
HIsometry random_involution_fixing(Rng& rng, const HPoint& x);

/// Each vertex v > 0 hangs from a uniformly chosen earlier vertex.
trees::MetricTree random_tree(Rng& rng, std::size_t vertices, double min_length = 0.5, double max_length = 3.0);

/// Independent labels: each label sits at each vertex with probability p.
trees::Labelling random_labelling(Rng& rng, std::size_t vertices, std::size_t universe, double p);

/// A labelling system: canonical extension of random labels with every label
/// placed at least once.
trees::Labelling random_labelling_system(Rng& rng, const trees::MetricTree& tree, std::size_t universe, double p);

}  // namespace coxcompact::testing
