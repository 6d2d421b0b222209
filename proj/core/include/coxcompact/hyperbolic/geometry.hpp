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

#include <Eigen/Dense>

namespace coxcompact::hyperbolic {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Validation tolerances shared by the geometric code.
struct Tolerances {
  double point = 1e-9;     // hyperboloid membership, distance comparisons
  double isometry = 1e-8;  // Lorentz and relator residuals (max-abs entry)
  double fix = 1e-6;       // "fixes a point" threshold
  double thin = 1e-6;      // slack on delta-thinness checks
};

/// Arguments of arccosh in [1 - kAcoshSlack, 1) are treated as 1.
inline constexpr double kAcoshSlack = 1e-12;

/// <x, y> = -x0 y0 + x1 y1 + ... + xn yn.
double lorentz_dot(const Vector& x, const Vector& y);

/// J = diag(-1, 1, ..., 1) of size n + 1.
Matrix lorentz_form(std::size_t n);

/// A point of the upper sheet of the hyperboloid <x, x> = -1 in R^{n,1}.
class HPoint {
 public:
  /// Throws kInvalidPoint when |<x,x> + 1| exceeds tol * max(1, x0^2) or x0 <= 0.
  /// The spatial coordinates are kept and x0 is recomputed as sqrt(1 + |x|^2).
  explicit HPoint(Vector coords, double tol = Tolerances{}.point);

  /// Rescales a future timelike vector onto the hyperboloid. Throws kNotTimelike.
  static HPoint normalize(const Vector& timelike);

  /// Keeps the spatial part and recomputes x0. For vectors that are on the
  /// hyperboloid up to rounding; far from e0 this is much more accurate than
  /// rescaling. Throws kInvalidPoint on non-finite input.
  static HPoint project(const Vector& near);

  /// e0 = (1, 0, ..., 0) in H^n.
  static HPoint origin(std::size_t n);

  std::size_t dimension() const { return static_cast<std::size_t>(coords_.size()) - 1; }
  const Vector& coords() const { return coords_; }

 private:
  struct Trusted {};
  HPoint(Vector coords, Trusted) : coords_(std::move(coords)) {}

  Vector coords_;
};

/// Hyperbolic distance. Equal to arccosh(-<x,y>), but evaluated through the
/// Lorentz length of x - y unless the points are far apart, which keeps nearby
/// points far from e0 accurate. Throws kInvalidArgument on a dimension mismatch.
double dist(const HPoint& x, const HPoint& y);

/// arccosh(a) for a raw Lorentz product; a in [1 - kAcoshSlack, 1) counts as 1.
/// Throws kInvalidPoint below that.
double clamped_acosh(double a);

/// Point at fraction t of the way from x to y along [xy].
HPoint geodesic_point(const HPoint& x, const HPoint& y, double t);

/// Tangent vector at x pointing at y with Lorentz length dist(x, y).
Vector log_map(const HPoint& x, const HPoint& y);

/// Follows the geodesic from x with initial velocity v (tangent at x).
HPoint exp_map(const HPoint& x, const Vector& v);

/// Lorentz-orthogonal projection of v onto the tangent space at x.
Vector to_tangent(const HPoint& x, const Vector& v);

/// Length of a tangent (spacelike) vector.
double tangent_norm(const Vector& v);

/// Angle at `vertex` between the geodesics towards a and b.
double angle_at(const HPoint& vertex, const HPoint& a, const HPoint& b);

/// A geodesic segment [a b] with its hyperbolic length.
class GeodesicSegment {
 public:
  GeodesicSegment(HPoint a, HPoint b);

  const HPoint& a() const { return a_; }
  const HPoint& b() const { return b_; }
  double length() const { return length_; }
  HPoint at(double t) const { return geodesic_point(a_, b_, t); }
  HPoint midpoint() const { return at(0.5); }

  /// Distance from a of the closest point of the segment to x, and the
  /// distance of x from that point.
  struct Nearest {
    double offset;
    double distance;
  };
  Nearest nearest(const HPoint& x) const;

 private:
  HPoint a_;
  HPoint b_;
  double length_;
};

}  // namespace coxcompact::hyperbolic
