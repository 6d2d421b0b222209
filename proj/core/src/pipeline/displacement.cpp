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

#include "coxcompact/pipeline/displacement.hpp"

#include <algorithm>
#include <cmath>

#include "coxcompact/error.hpp"

namespace coxcompact::pipeline {
namespace {

using hyperbolic::Matrix;
using hyperbolic::Vector;

// Gradient of x -> d(x, g x): minus the unit vectors towards g x and g^-1 x.
Vector gradient(const Representation& rep, std::size_t s, const HPoint& x) {
  const HIsometry& g = rep.image(s);
  Vector out = Vector::Zero(x.coords().size());
  for (const HPoint& y : {g(x), g.inverse()(x)}) {
    const Vector v = hyperbolic::log_map(x, y);
    const double len = hyperbolic::tangent_norm(v);
    if (len > 0.0) out -= v / len;
  }
  return out;
}

// Minimum-norm point of the convex hull of tangent vectors (Frank-Wolfe on the Gram matrix).
Vector min_norm_combination(const std::vector<Vector>& vs) {
  const std::size_t n = vs.size();
  Matrix gram(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      gram(a, b) = gram(b, a) = hyperbolic::lorentz_dot(vs[a], vs[b]);
    }
  }
  Vector weights = Vector::Zero(n);
  Eigen::Index start = 0;
  gram.diagonal().minCoeff(&start);
  weights(start) = 1.0;
  for (int it = 0; it < 400; ++it) {
    const Vector qw = gram * weights;
    const double current = weights.dot(qw);
    Eigen::Index best = 0;
    qw.minCoeff(&best);
    const double gap = current - qw(best);
    if (gap <= 1e-15 * std::max(1.0, current)) break;
    const double curvature = current - 2.0 * qw(best) + gram(best, best);
    const double step = curvature > 0.0 ? std::clamp(gap / curvature, 0.0, 1.0) : 1.0;
    weights *= 1.0 - step;
    weights(best) += step;
  }
  Vector out = Vector::Zero(vs.front().size());
  for (std::size_t a = 0; a < n; ++a) out += weights(static_cast<Eigen::Index>(a)) * vs[a];
  return out;
}

}  // namespace

std::vector<double> displacements(const Representation& rep, const HPoint& x) {
  std::vector<double> out;
  out.reserve(rep.rank());
  for (const HIsometry& g : rep.images()) out.push_back(dist(x, g(x)));
  return out;
}

double displacement(const Representation& rep, const HPoint& x) {
  const auto all = displacements(rep, x);
  return all.empty() ? 0.0 : *std::max_element(all.begin(), all.end());
}

MinimizeResult minimize_displacement(const Representation& rep, const HPoint& start, std::size_t budget) {
  if (start.dimension() != rep.dimension()) {
    throw Error(ErrorCode::kInvalidArgument, "start point has the wrong dimension");
  }
  MinimizeResult out{start, displacement(rep, start), 0, {}};
  double active_band = 0.1 * out.value + 1e-12;
  double step = std::max(out.value, 1e-3);
  while (out.iterations < budget && out.value > 0.0) {
    ++out.iterations;
    const auto values = displacements(rep, out.point);
    std::vector<Vector> grads;
    for (std::size_t s = 0; s < values.size(); ++s) {
      if (values[s] >= out.value - active_band) grads.push_back(gradient(rep, s, out.point));
    }
    const Vector direction = -min_norm_combination(grads);
    const double norm = hyperbolic::tangent_norm(direction);
    bool moved = false;
    if (norm > 1e-12) {
      double t = step;
      for (int halving = 0; halving < 60 && !moved; ++halving, t /= 2.0) {
        const HPoint trial = hyperbolic::exp_map(out.point, (t / norm) * direction);
        const double value = displacement(rep, trial);
        if (value < out.value) {
          out.point = trial;
          out.value = value;
          step = 2.0 * t;
          moved = true;
        }
      }
    }
    if (moved) {
      active_band = std::min(active_band * 1.5, 0.1 * out.value + 1e-12);
    } else {
      // The active set was too wide (or the point is stationary for it). The
      // step may have collapsed while crawling along a kink, so reset it too.
      if (active_band < 1e-14) break;
      active_band /= 4.0;
      step = std::max(out.value, 1e-3);
    }
    out.history.push_back(out.value);
  }
  return out;
}

}  // namespace coxcompact::pipeline
