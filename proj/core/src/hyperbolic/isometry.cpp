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

#include "coxcompact/hyperbolic/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "coxcompact/error.hpp"

namespace coxcompact::hyperbolic {

double max_abs_difference(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "matrix shapes differ");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

double lorentz_residual(const Matrix& m) {
  const Matrix j = lorentz_form(static_cast<std::size_t>(m.rows()) - 1);
  return max_abs_difference(m.transpose() * j * m, j);
}

bool verify_involution(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs_difference(m * m, Matrix::Identity(m.rows(), m.cols())) <= tol;
}

HIsometry::HIsometry(Matrix m, double tol) : m_(std::move(m)) {
  if (m_.rows() < 2 || m_.rows() != m_.cols()) {
    throw Error(ErrorCode::kNotLorentz, "matrix must be square of size n+1 >= 2");
  }
  if (!m_.allFinite()) throw Error(ErrorCode::kNotLorentz, "non-finite entry");
  const double residual = lorentz_residual(m_);
  if (!(residual <= tol)) {
    throw Error(ErrorCode::kNotLorentz, "|M^T J M - J|_max = " + std::to_string(residual));
  }
  if (!(m_(0, 0) > 0.0)) throw Error(ErrorCode::kNotLorentz, "M00 <= 0 swaps the sheets");
}

HIsometry HIsometry::identity(std::size_t n) {
  const auto size = static_cast<Eigen::Index>(n + 1);
  return HIsometry(Matrix::Identity(size, size), Trusted{});
}

HPoint HIsometry::apply(const HPoint& x) const {
  if (x.coords().size() != m_.rows()) {
    throw Error(ErrorCode::kInvalidArgument, "point and isometry dimensions differ");
  }
  return HPoint::project(m_ * x.coords());
}

HIsometry HIsometry::inverse() const {
  const Matrix j = lorentz_form(dimension());
  return HIsometry(j * m_.transpose() * j, Trusted{});
}

HIsometry operator*(const HIsometry& a, const HIsometry& b) {
  if (a.m_.rows() != b.m_.rows()) {
    throw Error(ErrorCode::kInvalidArgument, "isometry dimensions differ");
  }
  return HIsometry(a.m_ * b.m_, HIsometry::Trusted{});
}

HIsometry reflection_through(const std::vector<Vector>& basis) {
  if (basis.empty()) throw Error(ErrorCode::kDegenerateSubspace, "empty basis");
  const Eigen::Index size = basis.front().size();
  if (size < 2) throw Error(ErrorCode::kDegenerateSubspace, "vectors need at least 2 coordinates");
  Matrix b(size, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    if (basis[c].size() != size) throw Error(ErrorCode::kInvalidArgument, "basis vectors differ in size");
    b.col(static_cast<Eigen::Index>(c)) = basis[c];
  }
  const Matrix j = lorentz_form(static_cast<std::size_t>(size) - 1);
  const Matrix gram = b.transpose() * j * b;
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(gram);
  const auto& values = eig.eigenvalues();
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  if (values.cwiseAbs().minCoeff() <= 1e-12 * scale) {
    throw Error(ErrorCode::kDegenerateSubspace, "basis is dependent or spans a degenerate subspace");
  }
  if (values.minCoeff() >= 0.0) {
    throw Error(ErrorCode::kNotTimelike, "subspace contains no timelike vector");
  }
  const Matrix projector = b * gram.inverse() * b.transpose() * j;
  return HIsometry(2.0 * projector - Matrix::Identity(size, size));
}

HIsometry reflection_in_hyperplane(const Vector& normal) {
  if (normal.size() < 2) throw Error(ErrorCode::kInvalidArgument, "normal needs at least 2 coordinates");
  const double norm = lorentz_dot(normal, normal);
  if (!(norm > 0.0)) throw Error(ErrorCode::kNotTimelike, "normal must be spacelike");
  const Matrix j = lorentz_form(static_cast<std::size_t>(normal.size()) - 1);
  const Matrix m = Matrix::Identity(normal.size(), normal.size()) - (2.0 / norm) * normal * (normal.transpose() * j);
  return HIsometry(m);
}

HIsometry boost(std::size_t n, std::size_t axis, double distance) {
  if (axis < 1 || axis > n) throw Error(ErrorCode::kInvalidArgument, "boost axis out of range");
  const auto a = static_cast<Eigen::Index>(axis);
  Matrix m = Matrix::Identity(static_cast<Eigen::Index>(n + 1), static_cast<Eigen::Index>(n + 1));
  m(0, 0) = m(a, a) = std::cosh(distance);
  m(0, a) = m(a, 0) = std::sinh(distance);
  return HIsometry(m, std::max(Tolerances{}.isometry, 1e-15 * m(0, 0) * m(0, 0)));
}

HIsometry rotation(std::size_t n, std::size_t a, std::size_t b, double angle) {
  if (a < 1 || a > n || b < 1 || b > n || a == b) {
    throw Error(ErrorCode::kInvalidArgument, "rotation axes out of range");
  }
  const auto i = static_cast<Eigen::Index>(a);
  const auto k = static_cast<Eigen::Index>(b);
  Matrix m = Matrix::Identity(static_cast<Eigen::Index>(n + 1), static_cast<Eigen::Index>(n + 1));
  m(i, i) = m(k, k) = std::cos(angle);
  m(i, k) = -std::sin(angle);
  m(k, i) = std::sin(angle);
  return HIsometry(m);
}

HIsometry carry_origin_to(const HPoint& x) {
  const Vector& c = x.coords();
  const Eigen::Index size = c.size();
  const Vector s = c.tail(size - 1);
  Matrix m(size, size);
  m(0, 0) = c(0);
  m.block(0, 1, 1, size - 1) = s.transpose();
  m.block(1, 0, size - 1, 1) = s;
  m.block(1, 1, size - 1, size - 1) =
      Matrix::Identity(size - 1, size - 1) + s * s.transpose() / (1.0 + c(0));
  return HIsometry(m, std::max(Tolerances{}.isometry, 1e-15 * c(0) * c(0)));
}

}  // namespace coxcompact::hyperbolic
