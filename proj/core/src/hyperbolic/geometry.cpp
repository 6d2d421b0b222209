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

#include "coxcompact/hyperbolic/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "coxcompact/error.hpp"

namespace coxcompact::hyperbolic {
namespace {

Vector lift(const Vector& spatial_source, Eigen::Index size) {
  Vector out(size);
  out.tail(size - 1) = spatial_source.tail(size - 1);
  out(0) = std::sqrt(1.0 + out.tail(size - 1).squaredNorm());
  return out;
}

void require_same_dimension(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kInvalidArgument, "points of different dimensions (" +
                                                 std::to_string(a.size() - 1) + " and " +
                                                 std::to_string(b.size() - 1) + ")");
  }
}

}  // namespace

double lorentz_dot(const Vector& x, const Vector& y) {
  return -x(0) * y(0) + x.tail(x.size() - 1).dot(y.tail(y.size() - 1));
}

Matrix lorentz_form(std::size_t n) {
  Matrix j = Matrix::Identity(static_cast<Eigen::Index>(n + 1), static_cast<Eigen::Index>(n + 1));
  j(0, 0) = -1.0;
  return j;
}

HPoint::HPoint(Vector coords, double tol) {
  if (coords.size() < 2) throw Error(ErrorCode::kInvalidPoint, "a point needs at least 2 coordinates");
  if (!coords.allFinite()) throw Error(ErrorCode::kInvalidPoint, "non-finite coordinate");
  if (!(coords(0) > 0.0)) throw Error(ErrorCode::kInvalidPoint, "x0 must be positive");
  const double norm = lorentz_dot(coords, coords);
  if (std::abs(norm + 1.0) > tol * std::max(1.0, coords(0) * coords(0))) {
    throw Error(ErrorCode::kInvalidPoint,
                "<x,x> = " + std::to_string(norm) + " is not -1 within tolerance");
  }
  coords_ = lift(coords, coords.size());
}

HPoint HPoint::normalize(const Vector& timelike) {
  if (timelike.size() < 2 || !timelike.allFinite() || !(timelike(0) > 0.0)) {
    throw Error(ErrorCode::kNotTimelike, "vector is not future-pointing");
  }
  const double norm = lorentz_dot(timelike, timelike);
  if (!(norm < 0.0)) throw Error(ErrorCode::kNotTimelike, "vector is not timelike");
  return HPoint(lift(timelike / std::sqrt(-norm), timelike.size()), Trusted{});
}

HPoint HPoint::project(const Vector& near) {
  if (near.size() < 2 || !near.allFinite()) throw Error(ErrorCode::kInvalidPoint, "non-finite coordinate");
  return HPoint(lift(near, near.size()), Trusted{});
}

HPoint HPoint::origin(std::size_t n) {
  Vector e0 = Vector::Zero(static_cast<Eigen::Index>(n + 1));
  e0(0) = 1.0;
  return HPoint(std::move(e0), Trusted{});
}

double clamped_acosh(double a) {
  if (std::isnan(a) || a < 1.0 - kAcoshSlack) {
    throw Error(ErrorCode::kInvalidPoint, "arccosh argument " + std::to_string(a) + " below 1");
  }
  return std::acosh(std::max(a, 1.0));
}

double dist(const HPoint& x, const HPoint& y) {
  const Vector& xc = x.coords();
  const Vector& yc = y.coords();
  require_same_dimension(xc, yc);
  const Eigen::Index m = xc.size() - 1;

  // q = <x-y, x-y> = 4 sinh^2(d/2). With x0 = sqrt(1+|x|^2) fixed, the time
  // component of x-y is determined by the spatial ones; splitting the spatial
  // difference along and across xs+ys avoids the cancellation in -dx0^2 + |dx|^2.
  const Vector delta = xc.tail(m) - yc.tail(m);
  const Vector sum = xc.tail(m) + yc.tail(m);
  const double big = xc(0) + yc(0);
  const double sum_norm = sum.norm();
  double along = 0.0;
  double across2 = delta.squaredNorm();
  if (sum_norm > 0.0) {
    const Vector u = sum / sum_norm;
    along = delta.dot(u);
    across2 = (delta - along * u).squaredNorm();
  }
  const double ratio = along / big;
  const double denom = (1.0 - ratio) * (1.0 + ratio);
  double d = std::numeric_limits<double>::infinity();
  if (denom > 0.0) {
    const double q = (across2 + 4.0 * ratio * ratio) / denom;
    d = 2.0 * std::asinh(std::sqrt(q) / 2.0);
  }
  // The chord loses about cosh^2(d/2) in relative accuracy, the Lorentz product
  // about x0 y0 / sinh d. Take whichever is better conditioned.
  if (!std::isfinite(d) || (d > 1.0 && std::cosh(d / 2) * std::cosh(d / 2) * std::sinh(d) > xc(0) * yc(0))) {
    return std::acosh(std::max(1.0, -lorentz_dot(xc, yc)));
  }
  return d;
}

HPoint geodesic_point(const HPoint& x, const HPoint& y, double t) {
  require_same_dimension(x.coords(), y.coords());
  if (t == 0.0) return x;
  if (t == 1.0) return y;
  const double d = dist(x, y);
  if (d == 0.0) return x;
  const Vector v = (std::sinh((1.0 - t) * d) * x.coords() + std::sinh(t * d) * y.coords()) / std::sinh(d);
  return HPoint::project(v);
}

Vector to_tangent(const HPoint& x, const Vector& v) {
  return v + lorentz_dot(x.coords(), v) * x.coords();
}

double tangent_norm(const Vector& v) { return std::sqrt(std::max(0.0, lorentz_dot(v, v))); }

Vector log_map(const HPoint& x, const HPoint& y) {
  const double d = dist(x, y);
  if (d == 0.0) return Vector::Zero(x.coords().size());
  const Vector w = to_tangent(x, y.coords());
  const double len = tangent_norm(w);
  if (len == 0.0) return Vector::Zero(x.coords().size());
  return (d / len) * w;
}

HPoint exp_map(const HPoint& x, const Vector& v) {
  require_same_dimension(x.coords(), v);
  const double r = tangent_norm(v);
  if (r == 0.0) return x;
  return HPoint::project(std::cosh(r) * x.coords() + (std::sinh(r) / r) * v);
}

double angle_at(const HPoint& vertex, const HPoint& a, const HPoint& b) {
  const Vector u = log_map(vertex, a);
  const Vector w = log_map(vertex, b);
  const double nu = tangent_norm(u);
  const double nw = tangent_norm(w);
  if (nu == 0.0 || nw == 0.0) return 0.0;
  return std::acos(std::clamp(lorentz_dot(u, w) / (nu * nw), -1.0, 1.0));
}

GeodesicSegment::GeodesicSegment(HPoint a, HPoint b)
    : a_(std::move(a)), b_(std::move(b)), length_(dist(a_, b_)) {}

GeodesicSegment::Nearest GeodesicSegment::nearest(const HPoint& x) const {
  if (length_ == 0.0) return {0.0, dist(a_, x)};
  // The line is cosh(s) a + sinh(s) u. Its ideal ends are proportional to
  // b - e^-L a (s -> +inf) and a - e^-L b (s -> -inf); the foot of x sits at
  // s = (L + ln <x, a - e^-L b> - ln <x, b - e^-L a>) / 2. The products are
  // expanded through cosh of the robust distances, since the raw Lorentz
  // products cancel badly once x is far from e0.
  const double shrink = std::exp(-length_);
  const double ca = std::cosh(dist(x, a_));
  const double cb = std::cosh(dist(x, b_));
  const double toward_a = ca - shrink * cb;
  const double toward_b = cb - shrink * ca;
  double s = 0.0;
  if (toward_a <= 0.0) {
    s = length_;
  } else if (toward_b <= 0.0) {
    s = 0.0;
  } else {
    s = 0.5 * (length_ + std::log(toward_a) - std::log(toward_b));
  }
  const double offset = std::clamp(s, 0.0, length_);
  return {offset, dist(x, at(offset / length_))};
}

}  // namespace coxcompact::hyperbolic
