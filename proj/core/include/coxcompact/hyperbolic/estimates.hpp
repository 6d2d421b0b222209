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

#include <array>
#include <cstddef>

#include "coxcompact/coxeter/system.hpp"
#include "coxcompact/hyperbolic/geometry.hpp"
#include "coxcompact/hyperbolic/isometry.hpp"

namespace coxcompact::hyperbolic {

/// h(x) = arcsinh(1 / sinh x) for x > 0. Throws kNonPositiveArgument.
double h(double x);

/// h is an involution on (0, inf), so this is h itself.
double h_inv(double x);

/// Segment length 4/eps + 2R beyond which an involution moving both endpoints
/// at most R moves the midpoint at most eps. Throws kNonPositiveEpsilon,
/// kInvalidArgument for R < 0.
double lambda(double epsilon, double R);

/// Leg lengths of the metric tripod with the given side lengths. legs[i] is the
/// leg at vertex i (a Gromov product based there).
struct Tripod {
  std::array<double, 3> legs;
};

/// Throws kTriangleInequalityViolated when a leg would be below -tol.
Tripod comparison_tripod(double d12, double d13, double d23, double tol = Tolerances{}.point);

/// Largest sampled distance between two side points identified by the
/// comparison tripod map; `samples` points per leg (plus the internal points).
double thinness(const std::array<HPoint, 3>& triangle, std::size_t samples);

struct MidpointCheck {
  bool applicable;      // length >= lambda(epsilon, R)
  bool holds;           // d(m, s m) <= epsilon (true when not applicable)
  double displacement;  // d(m, s m)
};

/// Checks the midpoint estimate on one segment/involution pair. Throws
/// kPreconditionViolated when s moves an endpoint more than R + tol.fix.
MidpointCheck midpoint_estimate_check(const GeodesicSegment& e, const HIsometry& s, double epsilon,
                                      double R, const Tolerances& tol = {});

/// Common fixed point of the dihedral group <a, b> with (ab)^m = 1: the
/// normalised average of the orbit of e0. Throws kOrderMismatch when
/// (ab)^m != 1 within tol.isometry, kNotTimelike if the average degenerates, and
/// kNumericalFailure when the result is not fixed within tol.fix.
HPoint dihedral_fixed_point(const HIsometry& a, const HIsometry& b, coxeter::Order m,
                            const Tolerances& tol = {});

}  // namespace coxcompact::hyperbolic
