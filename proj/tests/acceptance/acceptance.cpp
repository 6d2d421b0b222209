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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <filesystem>
#include <fstream>

#include <fmt/core.h>
#include <nlohmann/json.hpp>

#include "coxcompact/approx/tree_builder.hpp"
#include "coxcompact/cli/app.hpp"
#include "coxcompact/cli/validator.hpp"
#include "coxcompact/coxeter/diagram.hpp"
#include "coxcompact/coxeter/smallness.hpp"
#include "coxcompact/coxeter/splitting.hpp"
#include "coxcompact/coxeter/system.hpp"
#include "coxcompact/hyperbolic/estimates.hpp"
#include "coxcompact/hyperbolic/geometry.hpp"
#include "coxcompact/hyperbolic/isometry.hpp"
#include "coxcompact/pipeline/constants.hpp"
#include "coxcompact/pipeline/displacement.hpp"
#include "coxcompact/trees/labelling.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using namespace coxcompact;
using hyperbolic::HIsometry;
using hyperbolic::HPoint;
using hyperbolic::Matrix;
using hyperbolic::Vector;
using testing::Rng;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;  // first few counterexamples

  void fail(const std::string& why) {
    pass = false;
    if (failures.size() < 5) failures.push_back(why);
  }
};

double relative_error(double got, double want) { return std::abs(got - want) / std::abs(want); }

// --- 1 ---------------------------------------------------------------------

Outcome constants_reproduction() {
  Outcome o;
  const pipeline::Constants k = pipeline::constants_for(4, 6, 0.104);
  // Hand evaluation: c = 2, so R = 256 (6 (40 + 12) + 8) ln 3 = 81920 ln 3.
  const double ln3 = std::log(3.0);
  const double R = 81920.0 * ln3;
  const double lambda = 4.0 / 0.104 + 2.0 * R;
  const double C = R + 12.0 * lambda;
  const double digits = 1e-12;
  if (k.c != 2) o.fail(fmt::format("c = {}", k.c));
  if (relative_error(k.delta, ln3) > digits) o.fail(fmt::format("delta = {:.17g}", k.delta));
  if (relative_error(k.R, R) > digits) o.fail(fmt::format("R = {:.17g}, want {:.17g}", k.R, R));
  if (relative_error(k.lambda_n, lambda) > digits) o.fail(fmt::format("lambda_n = {:.17g}, want {:.17g}", k.lambda_n, lambda));
  if (relative_error(k.C, C) > digits) o.fail(fmt::format("C = {:.17g}, want {:.17g}", k.C, C));
  // Printed approximations.
  if (std::abs(k.R / 1e4 - 8.99983) > 5e-6) o.fail("R is not about 8.99983e4");
  if (std::abs(k.C / 1e6 - 2.2504) > 5e-5) o.fail("C is not about 2.2504e6");
  o.detail = fmt::format("c={} R={:.12g} lambda_n={:.12g} C={:.12g}", k.c, k.R, k.lambda_n, k.C);
  return o;
}

// --- 2 ---------------------------------------------------------------------

// Side length in [1e-2, 50]: half uniform, half log-uniform so short sides show up.
double side_length(Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (unit(rng) < 0.5) return 1e-2 + (50.0 - 1e-2) * unit(rng);
  return std::exp(std::log(1e-2) + (std::log(50.0) - std::log(1e-2)) * unit(rng));
}

// Triangle with the given sides, centred on the midpoint of its longest side
// in the (1, 2) plane. Hyperboloid coordinates only resolve a point r away
// from e0 to about sinh(r) * 1e-16, so building the triangle from e0 outwards
// would leave a vertex up to 50 away; from this centre every vertex is within
// about 26. Scalars use the half-angle forms, which avoid cancellation.
std::array<HPoint, 3> centred_triangle(std::size_t n, double a, double b, double c) {
  // Vertices A, B end the longest side c; C is opposite, with d(A, C) = b.
  const double half = c / 2.0;
  const double leg_b = std::max(0.0, (a + c - b) / 2.0);
  const double leg_c = std::max(0.0, (a + b - c) / 2.0);
  const double sh = std::sinh((b - half) / 2.0);
  const double cosh_r_minus_1 = 2.0 * sh * sh + std::sinh(leg_b) * std::sinh(leg_c) / std::cosh(half);
  const double r = 2.0 * std::asinh(std::sqrt(cosh_r_minus_1 / 2.0));
  // Angle at the centre from MA to MC, from its half-angle sine in triangle
  // A M C and its half-angle cosine (the sine of the angle to MB) in B M C.
  double theta = 0.0;
  if (std::sinh(r) > 0.0) {
    auto half_angle_sine2 = [&](double opposite) {
      const double p = std::max(0.0, (r + opposite - half) / 2.0);
      const double q = std::max(0.0, (half + opposite - r) / 2.0);
      return std::clamp(std::sinh(p) * std::sinh(q) / (std::sinh(half) * std::sinh(r)), 0.0, 1.0);
    };
    theta = 2.0 * std::atan2(std::sqrt(half_angle_sine2(b)), std::sqrt(half_angle_sine2(a)));
  }
  auto point = [n](double radius, double cos_angle, double sin_angle) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(n + 1));
    v(0) = std::cosh(radius);
    v(1) = std::sinh(radius) * cos_angle;
    v(2) = std::sinh(radius) * sin_angle;
    return HPoint::project(v);
  };
  return {point(half, -1.0, 0.0), point(half, 1.0, 0.0), point(r, -std::cos(theta), std::sin(theta))};
}

Outcome delta_hyperbolicity() {
  Outcome o;
  Rng rng(2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double bound = std::log(3.0) + 1e-6;
  double worst = 0.0;
  double worst_side_error = 0.0;
  std::size_t trials = 0;
  for (std::size_t n : {2U, 3U, 4U}) {
    for (int t = 0; t < 10000;) {
      // Two sides and the angle between them fix the third.
      const double d12 = side_length(rng);
      const double d13 = side_length(rng);
      const double angle = std::numbers::pi * unit(rng);
      const double half_diff = std::sinh((d12 - d13) / 2.0);
      const double s2 = std::sin(angle / 2.0);
      // cosh d23 - 1 = 2 sinh^2((d12 - d13) / 2) + 2 sinh d12 sinh d13 sin^2(angle / 2)
      const double cosh_minus_1 = 2.0 * half_diff * half_diff + 2.0 * std::sinh(d12) * std::sinh(d13) * s2 * s2;
      const double d23 = 2.0 * std::asinh(std::sqrt(cosh_minus_1 / 2.0));
      if (!(d23 >= 1e-2 && d23 <= 50.0)) continue;
      ++t;
      std::array<double, 3> sides{d12, d13, d23};
      std::sort(sides.begin(), sides.end());
      const auto base = centred_triangle(n, sides[0], sides[1], sides[2]);
      // Random plane, random vertex order.
      const HIsometry g = testing::random_rotation(rng, n);
      std::array<HPoint, 3> tri{g(base[0]), g(base[1]), g(base[2])};
      std::shuffle(tri.begin(), tri.end(), rng);
      const double realized = hyperbolic::dist(tri[0], tri[1]) + hyperbolic::dist(tri[0], tri[2]) + hyperbolic::dist(tri[1], tri[2]);
      worst_side_error = std::max(worst_side_error, std::abs(realized - (d12 + d13 + d23)));
      const double thin = hyperbolic::thinness(tri, 24);
      worst = std::max(worst, thin);
      ++trials;
      if (thin > bound) o.fail(fmt::format("H^{} sides ({:.6g}, {:.6g}, {:.6g}) thinness {:.17g}", n, d12, d13, d23, thin));
    }
  }
  if (worst_side_error > 1e-4) o.fail(fmt::format("constructed perimeters off by {:.3e}", worst_side_error));
  o.detail = fmt::format("{} triangles, worst thinness {:.9f} (bound ln 3 + 1e-6 = {:.9f})", trials, worst, bound);
  return o;
}

// --- 3 ---------------------------------------------------------------------

Outcome midpoint_estimate() {
  Outcome o;
  Rng rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::vector<double> radii{0.0, 0.5, 2.0};
  const std::vector<double> epsilons{0.1, 0.5, 1.0};
  double worst_ratio = 0.0;
  std::size_t trials = 0;
  for (std::size_t n : {2U, 3U}) {
    for (int t = 0; t < 1000; ++t) {
      const double R = radii[static_cast<std::size_t>(t) % 3];
      const double eps = epsilons[(static_cast<std::size_t>(t) / 3) % 3];
      // Fix(s) is spanned by e0 and axes 1..f, so s negates axes f+1..n.
      const std::size_t f = 1 + static_cast<std::size_t>(t) % (n - 1);
      std::vector<Vector> basis{Vector::Unit(static_cast<Eigen::Index>(n + 1), 0)};
      for (std::size_t i = 1; i <= f; ++i) basis.push_back(Vector::Unit(static_cast<Eigen::Index>(n + 1), static_cast<Eigen::Index>(i)));
      const HIsometry s = hyperbolic::reflection_through(basis);

      // Endpoints: a foot point on Fix(s) pushed off it by at most R/2 in a
      // random normal direction, so d(x, s x) = 2 d(x, Fix) <= R. Pushing both
      // to the same side is the adversarial case, so bias towards it. The
      // endpoints sit about 20 from e0, where rounding moves them by ~1e-5, so
      // the largest offset stays that far inside R / 2.
      const double reach = hyperbolic::lambda(eps, R);
      auto endpoint = [&](double along, const Vector& normal) {
        const double off = 0.5 * std::max(0.0, R - 1e-4) * (unit(rng) < 0.5 ? 1.0 : unit(rng));
        Vector v = Vector::Zero(static_cast<Eigen::Index>(n + 1));
        v.segment(static_cast<Eigen::Index>(f + 1), static_cast<Eigen::Index>(n - f)) = normal;
        const HPoint pushed = hyperbolic::exp_map(HPoint::origin(n), off * v);
        return hyperbolic::boost(n, 1, along)(pushed);
      };
      Vector normal_a = testing::random_direction(rng, n - f);
      Vector normal_b = unit(rng) < 0.5 ? normal_a : testing::random_direction(rng, n - f);
      const double half = 0.5 * (reach + R) + 3.0 * unit(rng);
      const HPoint a0 = endpoint(-half, normal_a);
      const HPoint b0 = endpoint(half, normal_b);

      // Random orientation by a rotation preserving Fix(s) and its normal
      // space, so it commutes with s. The endpoints sit about 20 from e0, where
      // a general conjugate of s would already be off by ~1e-6.
      Matrix spin = Matrix::Identity(static_cast<Eigen::Index>(n + 1), static_cast<Eigen::Index>(n + 1));
      const auto fe = static_cast<Eigen::Index>(f);
      const auto ne = static_cast<Eigen::Index>(n - f);
      spin.block(1, 1, fe, fe) = testing::random_rotation(rng, f).matrix().bottomRightCorner(fe, fe);
      spin.block(1 + fe, 1 + fe, ne, ne) = testing::random_rotation(rng, n - f).matrix().bottomRightCorner(ne, ne);
      const HIsometry g(spin);
      const HPoint a = g(a0);
      const HPoint b = g(b0);
      const HIsometry& sg = s;
      const hyperbolic::GeodesicSegment seg(a, b);
      ++trials;
      if (seg.length() < reach) {
        o.fail(fmt::format("generated length {:.6g} below lambda {:.6g}", seg.length(), reach));
        continue;
      }
      const double da = hyperbolic::dist(a, sg(a));
      const double db = hyperbolic::dist(b, sg(b));
      if (std::max(da, db) > R + 1e-6) {
        o.fail(fmt::format("generated endpoint displacement {:.6g} above R = {}", std::max(da, db), R));
        continue;
      }
      const HPoint m = seg.midpoint();
      const double moved = hyperbolic::dist(m, sg(m));
      worst_ratio = std::max(worst_ratio, moved / eps);
      if (moved > eps + 1e-9) {
        o.fail(fmt::format("H^{} R={} eps={} length={:.6g}: d(m, s m) = {:.17g}", n, R, eps, seg.length(), moved));
      }
      const auto check = hyperbolic::midpoint_estimate_check(seg, sg, eps, R);
      if (!check.applicable || !check.holds) o.fail("midpoint_estimate_check disagrees");
    }
  }
  o.detail = fmt::format("{} pairs, worst d(m, s m) / eps = {:.3e}", trials, worst_ratio);
  return o;
}

// --- 4 ---------------------------------------------------------------------

std::size_t smallest_c(std::size_t size) {
  std::size_t c = 1;
  while (size > (std::size_t{1} << c) + 2) ++c;
  return c;
}

Outcome gat_suite() {
  Outcome o;
  Rng rng(4);
  std::size_t pairs = 0;
  std::size_t sets = 0;
  for (std::size_t n : {2U, 3U}) {
    for (int t = 0; t < 200; ++t) {
      const std::size_t count = 1 + static_cast<std::size_t>(t) % 10;
      std::vector<HPoint> sites;
      for (std::size_t i = 0; i < count; ++i) sites.push_back(testing::random_point(rng, n, 15.0));
      const approx::ApproximatingTree at = approx::build_tree(sites);
      ++sets;
      const double c = static_cast<double>(smallest_c(count));
      const double slack = 2.0 * c * std::log(3.0);
      for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
          ++pairs;
          const double dh = hyperbolic::dist(sites[i], sites[j]);
          const double dt = testing::brute_tree_distance(at.tree, at.site_map[i], at.site_map[j]);
          const double tol = 1e-9 * (1.0 + dh);
          if (dt > dh + tol) o.fail(fmt::format("H^{} |X|={} pair ({},{}): d_T {:.17g} > d_H {:.17g}", n, count, i, j, dt, dh));
          if (dt < dh - slack - tol) {
            o.fail(fmt::format("H^{} |X|={} pair ({},{}): d_T {:.17g} < d_H - 2c delta = {:.17g}", n, count, i, j, dt, dh - slack));
          }
        }
      }
      for (std::size_t leaf : at.tree.leaves()) {
        if (std::find(at.site_map.begin(), at.site_map.end(), leaf) == at.site_map.end()) {
          o.fail(fmt::format("H^{} |X|={}: leaf {} is not a site vertex", n, count, leaf));
        }
      }
    }
  }
  o.detail = fmt::format("{} site sets, {} pairs", sets, pairs);
  return o;
}

// --- 5 ---------------------------------------------------------------------

// Every check on one labelling system; returns a description of the first
// disagreement, or an empty string.
std::string helly_instance(const trees::MetricTree& tree, const trees::Labelling& lab) {
  if (!trees::is_labelling_system(tree, lab)) return "generated labelling is not a labelling system";
  std::vector<std::size_t> useful;
  for (std::size_t e = 0; e < tree.edge_count(); ++e) {
    const bool brute = testing::brute_useful(tree, lab, e);
    const auto fwd = trees::classify_edge(tree, lab, {e, true});
    const auto back = trees::classify_edge(tree, lab, {e, false});
    if ((fwd == trees::EdgeClass::kUseful) != brute) return fmt::format("edge {} misclassified", e);
    if (fwd != back) return fmt::format("edge {} depends on orientation", e);
    if (brute) useful.push_back(e);
  }
  const auto full = trees::full_vertex(tree, lab);
  if (full != testing::brute_full_vertex(tree, lab)) return "full_vertex differs from the oracle";
  if (full.has_value() != useful.empty()) return "all-edges-useless does not match full-vertex existence";
  const trees::Subtree sub = trees::useful_subtree(tree, lab);
  if (sub.edges != useful) return "useful_subtree differs from the oracle";
  if (!testing::edges_connected(tree, sub.edges)) return "useful subtree is disconnected";
  if (!sub.empty()) {
    IndexSet seen;
    for (std::size_t v : sub.vertices) seen |= lab.at(v);
    if (seen != lab.full()) return "useful subtree misses a label";
  }
  return {};
}

std::string describe(const trees::MetricTree& tree, const trees::Labelling& lab) {
  std::string s = "edges";
  for (const auto& e : tree.edges()) s += fmt::format(" {}-{}", e.u, e.v);
  s += " labels";
  for (std::size_t v = 0; v < lab.size(); ++v) s += fmt::format(" {:#x}", lab.at(v).bits());
  return s;
}

Outcome helly_suite() {
  Outcome o;
  std::size_t exhaustive = 0;
  // A labelling is a labelling system exactly when every label class is a
  // nonempty connected vertex set, so choosing one connected set per label
  // runs through all labelling systems on each tree shape.
  for (std::size_t v = 1; v <= 7; ++v) {
    for (const trees::MetricTree& tree : testing::all_tree_shapes(v)) {
      const auto classes = testing::connected_vertex_sets(tree);
      for (std::size_t universe = 1; universe <= 3; ++universe) {
        std::vector<std::size_t> choice(universe, 0);
        while (true) {
          std::vector<IndexSet> sets(v);
          for (std::size_t label = 0; label < universe; ++label) {
            classes[choice[label]].for_each([&](std::size_t x) { sets[x].insert(label); });
          }
          const trees::Labelling lab(universe, std::move(sets));
          ++exhaustive;
          const std::string why = helly_instance(tree, lab);
          if (!why.empty()) o.fail(why + ": " + describe(tree, lab));
          std::size_t pos = 0;
          while (pos < universe && ++choice[pos] == classes.size()) choice[pos++] = 0;
          if (pos == universe) break;
        }
      }
    }
  }
  Rng rng(5);
  std::size_t random = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t v = 1 + static_cast<std::size_t>(t) % 12;
    const std::size_t universe = 1 + static_cast<std::size_t>(t / 12) % 5;
    const auto tree = testing::random_tree(rng, v);
    const auto lab = trees::Labelling(universe, testing::brute_canonical_extension(
                                                    tree, testing::random_labelling_system(rng, tree, universe, 0.2)));
    ++random;
    const std::string why = helly_instance(tree, lab);
    if (!why.empty()) o.fail(why + ": " + describe(tree, lab));
  }
  o.detail = fmt::format("{} exhaustive labelling systems (V <= 7, N <= 3), {} random (V <= 12, N <= 5)", exhaustive, random);
  return o;
}

// --- 6 ---------------------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

testing::SplitKey key_of(const coxeter::SpecialSplitting& s) {
  return {s.plus.bits(), s.core.bits(), s.minus.bits()};
}

Outcome splitting_enumeration() {
  Outcome o;
  const auto path = coxeter::parse_system(read_file(testing::data_path("systems/path4.json")));
  const auto path_splittings = coxeter::enumerate_special_splittings(coxeter::diagram_of(path));
  const testing::SplitKey example{IndexSet{0, 1, 2}.bits(), IndexSet{0, 2}.bits(), IndexSet{0, 2, 3}.bits()};
  if (std::none_of(path_splittings.begin(), path_splittings.end(),
                   [&](const coxeter::SpecialSplitting& s) { return key_of(s.canonical()) == example; })) {
    o.fail("path s1-s2-s3-s4 lacks (<s1,s2,s3>, <s1,s3>, <s1,s3,s4>)");
  }

  const auto quad = coxeter::parse_system(read_file(testing::data_path("systems/quadrilateral.json")));
  std::vector<IndexSet> cores;
  for (const auto& s : coxeter::enumerate_special_splittings(coxeter::diagram_of(quad))) {
    if (std::find(cores.begin(), cores.end(), s.core) == cores.end()) cores.push_back(s.core);
    if (!coxeter::classify_smallness(s.core, quad).small) o.fail("quadrilateral core not classified small");
  }
  std::sort(cores.begin(), cores.end(), [](IndexSet a, IndexSet b) { return a.bits() < b.bits(); });
  if (cores != std::vector<IndexSet>{IndexSet{0, 2}, IndexSet{1, 3}}) o.fail("quadrilateral cores are not {s1,s3}, {s2,s4}");

  std::size_t checked = 0;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(testing::data_path("systems"))) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    const auto system = coxeter::parse_system(read_file(file.string()));
    if (system.rank() > 6) continue;
    std::set<testing::SplitKey> got;
    for (const auto& s : coxeter::enumerate_special_splittings(coxeter::diagram_of(system))) {
      got.insert(key_of(s.canonical()));
    }
    if (got != testing::brute_splittings(system)) o.fail("enumeration differs from the oracle on " + file.filename().string());
    ++checked;
  }
  if (checked < 10) o.fail(fmt::format("only {} corpus systems with k <= 6", checked));
  o.detail = fmt::format("path example found, quadrilateral cores {{s1,s3}} and {{s2,s4}} small, {} corpus systems match", checked);
  return o;
}

// --- 7 ---------------------------------------------------------------------

Outcome end_to_end() {
  Outcome o;
  std::vector<std::string> parts;
  for (const std::string name : {"dihedral3", "quadrilateral"}) {
    const std::string system_path = testing::data_path(name + ".system.json");
    const std::string rep_path = testing::data_path(name + ".representation.json");
    std::ostringstream out;
    std::ostringstream err;
    const auto start = std::chrono::steady_clock::now();
    const int code = cli::run({"analyze", system_path, rep_path, "--margulis", "0.104", "--dump-tree"}, out, err);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (code != cli::kExitOk && code != cli::kExitSplitting) {
      o.fail(fmt::format("{}: exit {} ({})", name, code, err.str()));
      continue;
    }
    if (seconds > 60.0) o.fail(fmt::format("{}: analyze took {:.1f} s", name, seconds));
    const auto report = nlohmann::json::parse(out.str());
    const auto v = cli::validate_report(nlohmann::json::parse(read_file(system_path)),
                                        nlohmann::json::parse(read_file(rep_path)), report);
    for (const auto& violation : v.violations) o.fail(name + ": " + violation);
    parts.push_back(fmt::format("{} -> {} ({} checks, {:.2f} s)", name, report.at("outcome").get<std::string>(), v.checks, seconds));
  }
  for (const auto& p : parts) o.detail += (o.detail.empty() ? "" : "; ") + p;
  return o;
}

// --- 8 ---------------------------------------------------------------------

coxeter::CoxeterSystem finite_system(std::size_t k, const std::vector<std::tuple<std::size_t, std::size_t, coxeter::Order>>& edges) {
  std::vector<coxeter::Order> orders(k * k, 2);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    orders[i * k + i] = 1;
    names.push_back("s" + std::to_string(i + 1));
  }
  for (auto [i, j, m] : edges) orders[i * k + j] = orders[j * k + i] = m;
  return coxeter::CoxeterSystem(names, orders);
}

Outcome displacement_minimization() {
  Outcome o;
  Rng rng(8);
  const std::vector<coxeter::CoxeterSystem> systems{
      testing::dihedral_system(3), testing::dihedral_system(5), testing::dihedral_system(8),
      finite_system(3, {{0, 1, 3}, {1, 2, 3}}),    // A3
      finite_system(3, {{0, 1, 4}, {1, 2, 3}}),    // B3
      finite_system(3, {{0, 1, 5}, {1, 2, 3}}),    // H3
      finite_system(4, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}}),  // A4
  };
  double worst = 0.0;
  std::size_t runs = 0;
  for (const auto& system : systems) {
    const std::size_t n = system.rank();
    const HPoint centre = testing::random_point(rng, n, 1.0);
    const auto rep = testing::spherical_representation(system, centre);
    for (int start = 0; start < 20; ++start) {
      const HPoint x = testing::random_point_near(rng, centre, 10.0);
      const auto result = pipeline::minimize_displacement(rep, x, 2000);
      worst = std::max(worst, result.value);
      ++runs;
      if (result.value > 1e-6) {
        o.fail(fmt::format("rank {} start at distance {:.3f}: value {:.3e}", n, hyperbolic::dist(x, centre), result.value));
      }
    }
  }
  const auto quad = testing::quadrilateral_representation();
  const auto grid = testing::grid_minimum(quad, 3.0, 120, 8);
  double spread = 0.0;
  for (int start = 0; start < 20; ++start) {
    const auto result = pipeline::minimize_displacement(quad, testing::random_point(rng, 2, 3.0), 2000);
    spread = std::max(spread, std::abs(result.value - grid.value));
    if (std::abs(result.value - grid.value) > 1e-3) {
      o.fail(fmt::format("quadrilateral: minimizer {:.12g} vs grid {:.12g}", result.value, grid.value));
    }
  }
  o.detail = fmt::format("{} fixed-point runs, worst value {:.2e}; quadrilateral grid {:.10f}, max deviation {:.2e}", runs, worst,
                         grid.value, spread);
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "constants reproduction", 1.0, constants_reproduction},
      {2, "delta-hyperbolicity", 30.0, delta_hyperbolicity},
      {3, "midpoint estimate", 30.0, midpoint_estimate},
      {4, "approximating trees", 60.0, gat_suite},
      {5, "Helly and labelling oracles", 60.0, helly_suite},
      {6, "splitting enumeration", 10.0, splitting_enumeration},
      {7, "end-to-end self-consistency", 120.0, end_to_end},
      {8, "displacement minimization", 60.0, displacement_minimization},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) o.fail(fmt::format("took {:.2f} s, limit {:.0f} s", seconds, c.limit_seconds));
    std::cout << fmt::format("{} [{}] {}: {} ({:.2f} s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail, seconds);
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    if (!o.pass) ++failed;
  }
  std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
