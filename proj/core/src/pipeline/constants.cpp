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

#include "coxcompact/pipeline/constants.hpp"

#include <cmath>

#include "coxcompact/approx/tree_builder.hpp"
#include "coxcompact/error.hpp"

namespace coxcompact::pipeline {
namespace {

double r_formula(double size, double c, double delta) {
  return 256.0 * (size * (20.0 * c * delta + 12.0 * delta) + 4.0 * c * delta);
}

}  // namespace

std::size_t pairs(std::size_t k) { return k * (k - 1) / 2; }

Constants constants_for(std::size_t k, std::size_t size_x, double mu) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "rank must be at least 1");
  if (size_x == 0) throw Error(ErrorCode::kInvalidArgument, "|X| must be at least 1");
  if (!(mu > 0.0) || !std::isfinite(mu)) throw Error(ErrorCode::kInvalidArgument, "Margulis constant must be positive");
  Constants out;
  out.k = k;
  out.size_x = size_x;
  out.c = approx::c_parameter(size_x);
  out.delta = approx::kDelta;
  out.mu = mu;
  out.R = r_formula(static_cast<double>(size_x), static_cast<double>(out.c), out.delta);
  out.lambda_n = 4.0 / mu + 2.0 * out.R;
  out.C = out.R + 2.0 * static_cast<double>(pairs(k)) * out.lambda_n;
  return out;
}

AlternativeConstants alternatives_for(const Constants& k) {
  const double p = static_cast<double>(pairs(k.k));
  const double c = static_cast<double>(k.c);
  AlternativeConstants out{};
  out.lambda_scaled = 2.0 * p * (4.0 / k.mu + 2.0 * k.R);
  out.R_short = 26.0 * c * k.delta + 12.0 * k.delta;
  out.R_pairs = r_formula(p, c, k.delta);
  out.C_statement = out.R_pairs + 2.0 * p * (2.0 * p * (4.0 / k.mu + 2.0 * out.R_pairs));
  return out;
}

double tight_bound(const Constants& constants, std::size_t longest_path_edges) {
  return constants.R + 2.0 * static_cast<double>(longest_path_edges) * constants.lambda_n;
}

}  // namespace coxcompact::pipeline
