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

namespace coxcompact::pipeline {

/// The constants of the main dichotomy for rank k, |X| = size_x and Margulis
/// constant mu.
struct Constants {
  std::size_t k = 0;
  std::size_t size_x = 0;
  std::size_t c = 0;
  double delta = 0.0;
  double mu = 0.0;
  double R = 0.0;         // 2^8 (|X| (20 c delta + 12 delta) + 4 c delta)
  double lambda_n = 0.0;  // 4/mu + 2R
  double C = 0.0;         // R + 2 binom(k,2) lambda_n
};

/// binom(k, 2).
std::size_t pairs(std::size_t k);

/// Throws kInvalidArgument for k = 0, size_x = 0 or mu <= 0.
Constants constants_for(std::size_t k, std::size_t size_x, double mu);

/// Competing readings of the same constants, reported next to the ones used.
struct AlternativeConstants {
  double lambda_scaled;  // 2 binom(k,2) (4/mu + 2R)
  double R_short;        // 26 c delta + 12 delta
  double R_pairs;        // R with binom(k,2) in place of |X|
  double C_statement;    // R_pairs + 2 binom(k,2) * lambda_scaled evaluated at R_pairs
};

AlternativeConstants alternatives_for(const Constants& constants);

/// R + 2 E lambda_n for the actual longest edge path E in the useful subtree.
double tight_bound(const Constants& constants, std::size_t longest_path_edges);

}  // namespace coxcompact::pipeline
