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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxcompact/coxeter/system.hpp"
#include "coxcompact/hyperbolic/geometry.hpp"
#include "coxcompact/hyperbolic/isometry.hpp"

namespace coxcompact::pipeline {

using hyperbolic::HIsometry;
using hyperbolic::HPoint;
using hyperbolic::Matrix;
using hyperbolic::Tolerances;

/// rho: W -> Isom(H^n), one validated involution per generator.
/// Discreteness and faithfulness are not checked.
class Representation {
 public:
  Representation(std::size_t dimension, std::vector<HIsometry> images, Tolerances tol)
      : dimension_(dimension), images_(std::move(images)), tol_(tol) {}

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return images_.size(); }
  const HIsometry& image(std::size_t generator) const { return images_.at(generator); }
  const std::vector<HIsometry>& images() const { return images_; }
  const Tolerances& tolerances() const { return tol_; }

 private:
  std::size_t dimension_;
  std::vector<HIsometry> images_;
  Tolerances tol_;
};

/// Validates the matrices (row-major, (n+1)^2 entries, in generator order).
/// Throws kNotLorentz, kNotInvolution, kRelatorViolated naming the relator and
/// its residual, or kMalformedDocument on shape errors.
Representation load_representation(const coxeter::CoxeterSystem& system,
                                   const std::vector<std::vector<double>>& matrices, std::size_t n,
                                   const Tolerances& tol = {});

/// Raw contents of a representation document:
///   {"dimension": n, "matrices": {"s1": [...], ...},
///    "tolerances": {"point": .., "isometry": .., "fix": .., "thin": ..}}
struct RepresentationDocument {
  std::size_t dimension = 0;
  std::vector<std::pair<std::string, std::vector<double>>> matrices;
  Tolerances tolerances;
};

/// Throws kMalformedDocument (with line and column for broken JSON).
RepresentationDocument parse_representation_document(std::string_view text);

/// Matches document matrices to generators by name and loads them.
/// Throws kMalformedDocument for missing or unknown generator names.
Representation load_representation(const coxeter::CoxeterSystem& system, const RepresentationDocument& doc);

std::string serialize_representation(const coxeter::CoxeterSystem& system, const Representation& rep);

}  // namespace coxcompact::pipeline
