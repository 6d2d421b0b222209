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
#include <vector>

#include "coxcompact/hyperbolic/geometry.hpp"

namespace coxcompact::hyperbolic {

/// An isometry of H^n as an (n+1) x (n+1) Lorentz matrix preserving the upper sheet.
class HIsometry {
 public:
  /// Throws kNotLorentz when |M^T J M - J|_max > tol or M00 <= 0.
  explicit HIsometry(Matrix m, double tol = Tolerances{}.isometry);

  static HIsometry identity(std::size_t n);

  std::size_t dimension() const { return static_cast<std::size_t>(m_.rows()) - 1; }
  const Matrix& matrix() const { return m_; }

  HPoint apply(const HPoint& x) const;
  HPoint operator()(const HPoint& x) const { return apply(x); }
  /// J M^T J.
  HIsometry inverse() const;

  friend HIsometry operator*(const HIsometry& a, const HIsometry& b);

 private:
  struct Trusted {};
  HIsometry(Matrix m, Trusted) : m_(std::move(m)) {}

  Matrix m_;
};

/// max |M^T J M - J|.
double lorentz_residual(const Matrix& m);

/// max |a - b|.
double max_abs_difference(const Matrix& a, const Matrix& b);

/// M^2 = I within tol.
bool verify_involution(const Matrix& m, double tol = Tolerances{}.isometry);

/// The Lorentz reflection that fixes span(basis) pointwise and negates its
/// Lorentz-orthogonal complement. Throws kDegenerateSubspace when the basis is
/// dependent or spans a degenerate subspace, kNotTimelike when the span
/// contains no timelike vector.
HIsometry reflection_through(const std::vector<Vector>& basis);

/// Reflection in the hyperplane Lorentz-orthogonal to a spacelike normal.
HIsometry reflection_in_hyperplane(const Vector& normal);

/// Hyperbolic translation of length `distance` along the x_axis direction through e0.
HIsometry boost(std::size_t n, std::size_t axis, double distance);

/// Rotation fixing e0 by `angle` in the (a, b) coordinate plane (1-based spatial axes).
HIsometry rotation(std::size_t n, std::size_t a, std::size_t b, double angle);

/// The boost along the line through e0 and x that carries e0 to x.
HIsometry carry_origin_to(const HPoint& x);

}  // namespace coxcompact::hyperbolic
