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

#include "coxcompact/pipeline/representation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include <nlohmann/json.hpp>

#include "coxcompact/error.hpp"

namespace coxcompact::pipeline {
namespace {

using nlohmann::json;

std::string position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t stop = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < stop; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::string residual_text(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", r);
  return buf;
}

double read_positive(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number() || !(v.get<double>() > 0.0)) {
    throw Error(ErrorCode::kMalformedDocument, std::string("tolerances.") + key + " must be a positive number");
  }
  return v.get<double>();
}

}  // namespace

Representation load_representation(const coxeter::CoxeterSystem& system,
                                   const std::vector<std::vector<double>>& matrices, std::size_t n,
                                   const Tolerances& tol) {
  const std::size_t k = system.rank();
  if (n == 0) throw Error(ErrorCode::kMalformedDocument, "dimension must be at least 1");
  if (matrices.size() != k) {
    throw Error(ErrorCode::kMalformedDocument,
                "expected " + std::to_string(k) + " matrices, got " + std::to_string(matrices.size()));
  }
  const auto size = static_cast<Eigen::Index>(n + 1);
  std::vector<HIsometry> images;
  images.reserve(k);
  for (std::size_t g = 0; g < k; ++g) {
    const auto& entries = matrices[g];
    if (entries.size() != (n + 1) * (n + 1)) {
      throw Error(ErrorCode::kMalformedDocument, "matrix for " + system.name(g) + " needs " +
                                                     std::to_string((n + 1) * (n + 1)) + " entries");
    }
    Matrix m(size, size);
    for (Eigen::Index r = 0; r < size; ++r) {
      for (Eigen::Index c = 0; c < size; ++c) m(r, c) = entries[static_cast<std::size_t>(r * size + c)];
    }
    try {
      images.emplace_back(std::move(m), tol.isometry);
    } catch (const Error& e) {
      throw Error(e.code(), "generator " + system.name(g) + ": " + e.what());
    }
  }
  const Matrix eye = Matrix::Identity(size, size);
  for (std::size_t g = 0; g < k; ++g) {
    const Matrix& m = images[g].matrix();
    const double residual = hyperbolic::max_abs_difference(m * m, eye);
    if (!(residual <= tol.isometry)) {
      throw Error(ErrorCode::kNotInvolution, system.name(g) + "^2 differs from I by " + residual_text(residual));
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const coxeter::Order m = system.order(i, j);
      if (!coxeter::is_finite(m)) continue;
      const Matrix ab = images[i].matrix() * images[j].matrix();
      Matrix power = eye;
      for (coxeter::Order p = 0; p < m; ++p) power = power * ab;
      const double residual = hyperbolic::max_abs_difference(power, eye);
      if (!(residual <= tol.isometry)) {
        throw Error(ErrorCode::kRelatorViolated, "(" + system.name(i) + " " + system.name(j) + ")^" +
                                                     std::to_string(m) + " differs from I by " +
                                                     residual_text(residual));
      }
    }
  }
  return Representation(n, std::move(images), tol);
}

RepresentationDocument parse_representation_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kMalformedDocument, position_of(text, e.byte) + ": invalid JSON");
  }
  if (!doc.is_object()) throw Error(ErrorCode::kMalformedDocument, "representation document must be an object");
  RepresentationDocument out;
  if (!doc.contains("dimension") || !doc.at("dimension").is_number_unsigned() ||
      doc.at("dimension").get<std::size_t>() == 0) {
    throw Error(ErrorCode::kMalformedDocument, "\"dimension\" must be a positive integer");
  }
  out.dimension = doc.at("dimension").get<std::size_t>();
  if (!doc.contains("matrices") || !doc.at("matrices").is_object()) {
    throw Error(ErrorCode::kMalformedDocument, "\"matrices\" must map generator names to arrays");
  }
  for (const auto& [name, value] : doc.at("matrices").items()) {
    if (!value.is_array()) throw Error(ErrorCode::kMalformedDocument, "matrix for " + name + " must be an array");
    std::vector<double> entries;
    entries.reserve(value.size());
    for (const json& x : value) {
      if (!x.is_number()) throw Error(ErrorCode::kMalformedDocument, "matrix for " + name + " has a non-number");
      entries.push_back(x.get<double>());
    }
    out.matrices.emplace_back(name, std::move(entries));
  }
  if (doc.contains("tolerances")) {
    const json& t = doc.at("tolerances");
    if (!t.is_object()) throw Error(ErrorCode::kMalformedDocument, "\"tolerances\" must be an object");
    out.tolerances.point = read_positive(t, "point", out.tolerances.point);
    out.tolerances.isometry = read_positive(t, "isometry", out.tolerances.isometry);
    out.tolerances.fix = read_positive(t, "fix", out.tolerances.fix);
    out.tolerances.thin = read_positive(t, "thin", out.tolerances.thin);
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "dimension" && key != "matrices" && key != "tolerances") {
      throw Error(ErrorCode::kMalformedDocument, "unknown key \"" + key + "\"");
    }
  }
  return out;
}

Representation load_representation(const coxeter::CoxeterSystem& system, const RepresentationDocument& doc) {
  std::vector<std::vector<double>> ordered(system.rank());
  std::vector<bool> seen(system.rank(), false);
  for (const auto& [name, entries] : doc.matrices) {
    const auto index = system.index_of(name);
    if (!index) throw Error(ErrorCode::kMalformedDocument, "matrix for unknown generator " + name);
    if (seen[*index]) throw Error(ErrorCode::kMalformedDocument, "two matrices for " + name);
    seen[*index] = true;
    ordered[*index] = entries;
  }
  for (std::size_t g = 0; g < system.rank(); ++g) {
    if (!seen[g]) throw Error(ErrorCode::kMalformedDocument, "no matrix for generator " + system.name(g));
  }
  return load_representation(system, ordered, doc.dimension, doc.tolerances);
}

std::string serialize_representation(const coxeter::CoxeterSystem& system, const Representation& rep) {
  nlohmann::ordered_json doc;
  doc["dimension"] = rep.dimension();
  nlohmann::ordered_json matrices = nlohmann::ordered_json::object();
  for (std::size_t g = 0; g < rep.rank(); ++g) {
    const Matrix& m = rep.image(g).matrix();
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(m(r, c));
    }
    matrices[system.name(g)] = std::move(entries);
  }
  doc["matrices"] = std::move(matrices);
  return doc.dump(2);
}

}  // namespace coxcompact::pipeline
