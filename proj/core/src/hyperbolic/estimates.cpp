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

#include "coxcompact/hyperbolic/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coxcompact/error.hpp"

namespace coxcompact::hyperbolic {
namespace {

// Point at distance t from a along [ab].
HPoint along(const HPoint& a, const HPoint& b, double length, double t) {
  if (length == 0.0) return a;
  return geodesic_point(a, b, std::clamp(t / length, 0.0, 1.0));
}

}  // namespace

double h(double x) {
  if (!(x > 0.0)) throw Error(ErrorCode::kNonPositiveArgument, "h needs x > 0, got " + std::to_string(x));
  // 1/sinh x written to survive large x until exp(-x) underflows.
  const double inv_sinh = 2.0 * std::exp(-x) / -std::expm1(-2.0 * x);
  return std::asinh(inv_sinh);
}

double h_inv(double x) { return h(x); }

double lambda(double epsilon, double R) {
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::kNonPositiveEpsilon, "epsilon must be positive, got " + std::to_string(epsilon));
  }
  if (!(R >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "R must be nonnegative");
  return 4.0 / epsilon + 2.0 * R;
}

Tripod comparison_tripod(double d12, double d13, double d23, double tol) {
  if (!(d12 >= 0.0 && d13 >= 0.0 && d23 >= 0.0)) {
    throw Error(ErrorCode::kTriangleInequalityViolated, "negative side length");
  }
  Tripod t{{(d12 + d13 - d23) / 2.0, (d12 + d23 - d13) / 2.0, (d13 + d23 - d12) / 2.0}};
  for (double& leg : t.legs) {
    if (leg < -tol) {
      throw Error(ErrorCode::kTriangleInequalityViolated,
                  "sides " + std::to_string(d12) + ", " + std::to_string(d13) + ", " + std::to_string(d23));
    }
    leg = std::max(leg, 0.0);
  }
  return t;
}

double thinness(const std::array<HPoint, 3>& tri, std::size_t samples) {
  const double d01 = dist(tri[0], tri[1]);
  const double d02 = dist(tri[0], tri[2]);
  const double d12 = dist(tri[1], tri[2]);
  const double side[3][3] = {{0.0, d01, d02}, {d01, 0.0, d12}, {d02, d12, 0.0}};
  const Tripod tripod = comparison_tripod(d01, d02, d12, std::max(1e-9, 1e-12 * (d01 + d02 + d12)));
  const std::size_t steps = std::max<std::size_t>(samples, 1);
  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    const std::size_t k = (i + 2) % 3;
    const double leg = tripod.legs[i];
    // Points at equal distance from vertex i on the two sides through it; the
    // last sample is the pair of internal points.
    for (std::size_t s = 0; s <= steps; ++s) {
      const double t = leg * static_cast<double>(s) / static_cast<double>(steps);
      const HPoint p = along(tri[i], tri[j], side[i][j], t);
      const HPoint q = along(tri[i], tri[k], side[i][k], t);
      worst = std::max(worst, dist(p, q));
    }
  }
  return worst;
}

MidpointCheck midpoint_estimate_check(const GeodesicSegment& e, const HIsometry& s, double epsilon,
                                      double R, const Tolerances& tol) {
  const double threshold = lambda(epsilon, R);
  const double moved_a = dist(e.a(), s(e.a()));
  const double moved_b = dist(e.b(), s(e.b()));
  if (std::max(moved_a, moved_b) > R + tol.fix) {
    throw Error(ErrorCode::kPreconditionViolated,
                "endpoint moved " + std::to_string(std::max(moved_a, moved_b)) + " > R = " + std::to_string(R));
  }
  const HPoint m = e.midpoint();
  const double displacement = dist(m, s(m));
  const bool applicable = e.length() >= threshold;
  return {applicable, !applicable || displacement <= epsilon + tol.point, displacement};
}

HPoint dihedral_fixed_point(const HIsometry& a, const HIsometry& b, coxeter::Order m, const Tolerances& tol) {
  if (!coxeter::is_finite(m) || m == 0) {
    throw Error(ErrorCode::kOrderMismatch, "dihedral order must be finite and positive");
  }
  if (a.dimension() != b.dimension()) throw Error(ErrorCode::kInvalidArgument, "isometry dimensions differ");
  const std::size_t n = a.dimension();
  const HIsometry ab = a * b;
  HIsometry power = HIsometry::identity(n);
  for (coxeter::Order i = 0; i < m; ++i) power = power * ab;
  const Matrix eye = Matrix::Identity(power.matrix().rows(), power.matrix().cols());
  const double residual = max_abs_difference(power.matrix(), eye);
  if (!(residual <= tol.isometry)) {
    throw Error(ErrorCode::kOrderMismatch,
                "(ab)^" + std::to_string(m) + " differs from I by " + std::to_string(residual));
  }

  const HPoint e0 = HPoint::origin(n);
  Vector total = Vector::Zero(static_cast<Eigen::Index>(n + 1));
  HIsometry rotation = HIsometry::identity(n);
  for (coxeter::Order i = 0; i < m; ++i) {
    total += rotation(e0).coords();
    total += (rotation * a)(e0).coords();
    rotation = rotation * ab;
  }
  const HPoint x = HPoint::normalize(total);
  const double da = dist(x, a(x));
  const double db = dist(x, b(x));
  if (std::max(da, db) > tol.fix) {
    throw Error(ErrorCode::kNumericalFailure,
                "orbit average moved by " + std::to_string(std::max(da, db)) + " under a generator");
  }
  return x;
}

}  // namespace coxcompact::hyperbolic
