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

#include "fixtures.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace coxcompact::testing {

using coxeter::CoxeterSystem;
using coxeter::Order;

std::string data_path(const std::string& name) { return std::string(COXCOMPACT_DATA_DIR) + "/" + name; }

CoxeterSystem quadrilateral_system() {
  return CoxeterSystem::from_relations({"s1", "s2", "s3", "s4"}, {{0, 1, 2}, {1, 2, 4}, {2, 3, 3}, {3, 0, 4}});
}

CoxeterSystem path_system(std::size_t k, Order m) {
  std::vector<std::string> names;
  std::vector<CoxeterSystem::Relation> rel;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back("s" + std::to_string(i + 1));
    if (i + 1 < k) rel.push_back({i, i + 1, m});
  }
  return CoxeterSystem::from_relations(std::move(names), rel);
}

CoxeterSystem dihedral_system(Order m) { return CoxeterSystem::from_relations({"s1", "s2"}, {{0, 1, m}}); }

namespace {

Matrix reflection_matrix(const Vector& normal) {
  const Matrix j = hyperbolic::lorentz_form(static_cast<std::size_t>(normal.size()) - 1);
  return Matrix::Identity(normal.size(), normal.size()) -
         2.0 * normal * (j * normal).transpose() / hyperbolic::lorentz_dot(normal, normal);
}

pipeline::Representation from_matrices(const CoxeterSystem& system, std::size_t n, const std::vector<Matrix>& ms) {
  std::vector<std::vector<double>> rows;
  for (const Matrix& m : ms) {
    std::vector<double> entries;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(m(r, c));
    }
    rows.push_back(std::move(entries));
  }
  return pipeline::load_representation(system, rows, n);
}

}  // namespace

pipeline::Representation quadrilateral_representation() {
  using std::numbers::pi;
  Matrix g = Matrix::Identity(4, 4);
  auto set = [&](int i, int j, double v) { g(i, j) = g(j, i) = v; };
  set(0, 1, -std::cos(pi / 2));
  set(1, 2, -std::cos(pi / 4));
  set(2, 3, -std::cos(pi / 3));
  set(3, 0, -std::cos(pi / 4));
  set(0, 2, -2.0);
  // det G is quadratic in G24; the admissible root makes G singular of signature (2, 1).
  auto det_at = [&](double x) {
    set(1, 3, x);
    return g.determinant();
  };
  const double f0 = det_at(0.0);
  const double f1 = det_at(1.0);
  const double fm = det_at(-1.0);
  const double a = (f1 + fm) / 2.0 - f0;
  const double b = (f1 - fm) / 2.0;
  set(1, 3, (-b - std::sqrt(b * b - 4.0 * a * f0)) / (2.0 * a));

  Eigen::SelfAdjointEigenSolver<Matrix> eig(g);
  const Vector& w = eig.eigenvalues();  // ascending: negative, ~0, positive, positive
  const Matrix& v = eig.eigenvectors();
  std::vector<Matrix> ms;
  for (int i = 0; i < 4; ++i) {
    Vector normal(3);
    normal << std::sqrt(-w(0)) * v(i, 0), std::sqrt(w(2)) * v(i, 2), std::sqrt(w(3)) * v(i, 3);
    ms.push_back(reflection_matrix(normal));
  }
  return from_matrices(quadrilateral_system(), 2, ms);
}

pipeline::Representation spherical_representation(const CoxeterSystem& system, const HPoint& center) {
  const std::size_t k = system.rank();
  Matrix bilinear(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      bilinear(i, j) = -std::cos(std::numbers::pi / static_cast<double>(system.order(i, j)));
    }
  }
  const Matrix l = Eigen::LLT<Matrix>(bilinear).matrixL();
  const HIsometry move = hyperbolic::carry_origin_to(center);
  std::vector<Matrix> ms;
  for (std::size_t i = 0; i < k; ++i) {
    Vector normal = Vector::Zero(static_cast<Eigen::Index>(k + 1));
    normal.tail(static_cast<Eigen::Index>(k)) = l.row(static_cast<Eigen::Index>(i)).transpose();
    ms.push_back(move.matrix() * reflection_matrix(normal) * move.inverse().matrix());
  }
  return from_matrices(system, k, ms);
}

std::vector<std::vector<double>> rows_of(const pipeline::Representation& rep) {
  std::vector<std::vector<double>> out;
  for (const auto& g : rep.images()) {
    std::vector<double> entries;
    for (Eigen::Index r = 0; r < g.matrix().rows(); ++r) {
      for (Eigen::Index c = 0; c < g.matrix().cols(); ++c) entries.push_back(g.matrix()(r, c));
    }
    out.push_back(std::move(entries));
  }
  return out;
}

Vector random_direction(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> normal;
  Vector v(static_cast<Eigen::Index>(dim));
  do {
    for (auto& x : v) x = normal(rng);
  } while (v.norm() < 1e-6);
  return v.normalized();
}

HPoint random_point_near(Rng& rng, const HPoint& center, double max_radius) {
  const std::size_t n = center.dimension();
  const double r = std::uniform_real_distribution<double>(0.0, max_radius)(rng);
  Vector x(static_cast<Eigen::Index>(n + 1));
  x(0) = std::cosh(r);
  x.tail(static_cast<Eigen::Index>(n)) = std::sinh(r) * random_direction(rng, n);
  return hyperbolic::carry_origin_to(center)(HPoint::project(x));
}

HPoint random_point(Rng& rng, std::size_t n, double max_radius) {
  return random_point_near(rng, HPoint::origin(n), max_radius);
}

HIsometry random_rotation(Rng& rng, std::size_t n) {
  std::normal_distribution<double> normal;
  Matrix a(n, n);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = normal(rng);
  const Matrix q = Eigen::HouseholderQR<Matrix>(a).householderQ();
  Matrix m = Matrix::Identity(n + 1, n + 1);
  m.bottomRightCorner(n, n) = q;
  return HIsometry(m);
}

HIsometry random_involution_fixing(Rng& rng, const HPoint& x) {
  const std::size_t n = x.dimension();
  const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  const HIsometry spin = random_rotation(rng, n);
  const HIsometry move = hyperbolic::carry_origin_to(x);
  std::vector<Vector> basis{x.coords()};
  for (std::size_t a = 1; a <= extra; ++a) {
    Vector axis = Vector::Zero(static_cast<Eigen::Index>(n + 1));
    axis(static_cast<Eigen::Index>(a)) = 1.0;
    basis.push_back(move.matrix() * spin.matrix() * axis);
  }
  return hyperbolic::reflection_through(basis);
}

trees::MetricTree random_tree(Rng& rng, std::size_t vertices, double min_length, double max_length) {
  std::uniform_real_distribution<double> length(min_length, max_length);
  std::vector<trees::TreeEdge> edges;
  for (std::size_t v = 1; v < vertices; ++v) {
    edges.push_back({std::uniform_int_distribution<std::size_t>(0, v - 1)(rng), v, length(rng)});
  }
  return trees::MetricTree(vertices, std::move(edges));
}

trees::Labelling random_labelling(Rng& rng, std::size_t vertices, std::size_t universe, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<IndexSet> sets(vertices);
  for (auto& s : sets) {
    for (std::size_t i = 0; i < universe; ++i) {
      if (coin(rng)) s.insert(i);
    }
  }
  return trees::Labelling(universe, std::move(sets));
}

trees::Labelling random_labelling_system(Rng& rng, const trees::MetricTree& tree, std::size_t universe, double p) {
  auto raw = random_labelling(rng, tree.vertex_count(), universe, p);
  std::vector<IndexSet> sets = raw.sets();
  for (std::size_t i = 0; i < universe; ++i) {
    sets[std::uniform_int_distribution<std::size_t>(0, tree.vertex_count() - 1)(rng)].insert(i);
  }
  return trees::canonical_extension(tree, trees::Labelling(universe, std::move(sets)));
}

}  // namespace coxcompact::testing
