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

#include "coxcompact/index_set.hpp"
#include "coxcompact/pipeline/representation.hpp"

namespace coxcompact::pipeline {

/// d(x, rho(s) x) for every generator.
std::vector<double> displacements(const Representation& rep, const HPoint& x);

/// B_rho(x) = max over generators of d(x, rho(s) x).
double displacement(const Representation& rep, const HPoint& x);

struct MinimizeResult {
  HPoint point;
  double value;
  std::size_t iterations;
  std::vector<double> history;  // value after each iteration, non-increasing
};

/// Descends B_rho from `start` along geodesics, using the minimum-norm convex
/// combination of the gradients of the nearly active generators and halving
/// the step until the value drops. Runs at most `budget` iterations.
MinimizeResult minimize_displacement(const Representation& rep, const HPoint& start, std::size_t budget);

}  // namespace coxcompact::pipeline
