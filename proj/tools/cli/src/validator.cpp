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

#include "coxcompact/cli/validator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>

#include <fmt/format.h>

namespace coxcompact::cli {
namespace {

using nlohmann::json;
using Vec = std::vector<double>;

struct Mat {
  std::size_t n = 0;  // side length
  Vec a;
  double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

double lorentz(const Vec& x, const Vec& y) {
  double s = -x[0] * y[0];
  for (std::size_t i = 1; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Vec apply(const Mat& m, const Vec& x) {
  Vec out(m.n, 0.0);
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) out[i] += m.at(i, j) * x[j];
  }
  return out;
}

Mat multiply(const Mat& p, const Mat& q) {
  Mat out{p.n, Vec(p.n * p.n, 0.0)};
  for (std::size_t i = 0; i < p.n; ++i) {
    for (std::size_t k = 0; k < p.n; ++k) {
      for (std::size_t j = 0; j < p.n; ++j) out.a[i * p.n + j] += p.at(i, k) * q.at(k, j);
    }
  }
  return out;
}

// 2 asinh(|x - y|_L / 2): arccosh(-<x,y>) rewritten so that nearby points keep their digits.
double distance(const Vec& x, const Vec& y) {
  Vec diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - y[i];
  return 2.0 * std::asinh(std::sqrt(std::max(0.0, lorentz(diff, diff))) / 2.0);
}

double number(const json& v, const std::string& what) {
  if (!v.is_number()) throw std::runtime_error(what + " is not a number");
  return v.get<double>();
}

Vec point(const json& v, std::size_t dim, const std::string& what) {
  if (!v.is_array() || v.size() != dim) throw std::runtime_error(what + " is not a point of the right dimension");
  Vec out;
  for (const auto& x : v) out.push_back(number(x, what));
  return out;
}

double binomial2(std::size_t k) { return static_cast<double>(k) * static_cast<double>(k - (k > 0 ? 1 : 0)) / 2.0; }

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)}); }

class Checker {
 public:
  explicit Checker(Validation& v) : v_(v) {}

  void require(bool ok, const std::string& message) {
    ++v_.checks;
    if (!ok) v_.violations.push_back(message);
  }

 private:
  Validation& v_;
};

struct Inputs {
  std::vector<std::string> names;
  std::vector<std::uint64_t> orders;  // 0 for infinity
  std::size_t dim = 0;
  std::vector<Mat> images;
  double tol_point = 1e-9;
  double tol_isometry = 1e-8;
  double tol_fix = 1e-6;

  std::size_t k() const { return names.size(); }
  std::uint64_t order(std::size_t i, std::size_t j) const { return orders[i * k() + j]; }

  std::size_t index(const std::string& name) const {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::runtime_error("unknown generator " + name);
    return static_cast<std::size_t>(it - names.begin());
  }

  std::uint64_t set_of(const json& list, const std::string& what) const {
    if (!list.is_array()) throw std::runtime_error(what + " is not a list of generators");
    std::uint64_t bits = 0;
    for (const auto& g : list) bits |= std::uint64_t{1} << index(g.get<std::string>());
    return bits;
  }
};

Inputs read_inputs(const json& system_doc, const json& rep_doc, const json& report) {
  Inputs in;
  for (const auto& g : system_doc.at("generators")) in.names.push_back(g.get<std::string>());
  const std::size_t k = in.k();
  in.orders.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) in.orders[i * k + i] = 1;
  if (system_doc.contains("orders")) {
    for (const auto& row : system_doc.at("orders")) {
      const std::size_t i = in.index(row.at(0).get<std::string>());
      const std::size_t j = in.index(row.at(1).get<std::string>());
      const std::uint64_t m = row.at(2).is_string() ? 0 : row.at(2).get<std::uint64_t>();
      in.orders[i * k + j] = in.orders[j * k + i] = m;
    }
  }

  in.dim = rep_doc.at("dimension").get<std::size_t>() + 1;
  for (const auto& name : in.names) {
    Mat m{in.dim, {}};
    for (const auto& x : rep_doc.at("matrices").at(name)) m.a.push_back(x.get<double>());
    if (m.a.size() != in.dim * in.dim) throw std::runtime_error("matrix for " + name + " has the wrong size");
    in.images.push_back(std::move(m));
  }

  for (const json* source : {&rep_doc, &report}) {
    if (!source->contains("tolerances")) continue;
    const json& t = source->at("tolerances");
    in.tol_point = t.value("point", in.tol_point);
    in.tol_isometry = t.value("isometry", in.tol_isometry);
    in.tol_fix = t.value("fix", in.tol_fix);
  }
  return in;
}

void check_matrices(const Inputs& in, Checker& check) {
  for (std::size_t g = 0; g < in.k(); ++g) {
    const Mat& m = in.images[g];
    double scale = 1.0;
    for (double x : m.a) scale = std::max(scale, x * x);
    const Mat sq = multiply(m, m);
    double lorentz_residual = 0.0;
    double involution_residual = 0.0;
    for (std::size_t i = 0; i < in.dim; ++i) {
      for (std::size_t j = 0; j < in.dim; ++j) {
        // (M^T J M)_ij against J.
        double s = 0.0;
        for (std::size_t r = 0; r < in.dim; ++r) s += (r == 0 ? -1.0 : 1.0) * m.at(r, i) * m.at(r, j);
        const double target = i == j ? (i == 0 ? -1.0 : 1.0) : 0.0;
        lorentz_residual = std::max(lorentz_residual, std::abs(s - target));
        involution_residual = std::max(involution_residual, std::abs(sq.at(i, j) - (i == j ? 1.0 : 0.0)));
      }
    }
    check.require(lorentz_residual <= in.tol_isometry * scale,
                  fmt::format("matrix of {} is not Lorentz (residual {:.3e})", in.names[g], lorentz_residual));
    check.require(involution_residual <= in.tol_isometry * scale,
                  fmt::format("matrix of {} is not an involution (residual {:.3e})", in.names[g], involution_residual));
  }
}

struct ConstantsView {
  double mu = 0.0;
  double R = 0.0;
  double lambda_n = 0.0;
  double C = 0.0;
};

ConstantsView check_constants(const Inputs& in, const json& c, Checker& check) {
  const auto k = c.at("k").get<std::size_t>();
  const auto size_x = c.at("sizeX").get<std::size_t>();
  const auto reported_c = c.at("c").get<std::size_t>();
  check.require(k == in.k(), "constants.k differs from the number of generators");
  check.require(size_x >= 1 && static_cast<double>(size_x) <= std::max(1.0, binomial2(in.k())),
                "constants.sizeX is outside [1, k choose 2]");
  std::size_t c_min = 1;
  while (static_cast<double>(size_x) > std::ldexp(1.0, static_cast<int>(c_min)) + 2.0) ++c_min;
  check.require(reported_c == c_min, fmt::format("constants.c is {} but sizeX needs c = {}", reported_c, c_min));

  ConstantsView v;
  const double delta = std::log(3.0);
  v.mu = number(c.at("mu"), "constants.mu");
  v.R = number(c.at("R"), "constants.R");
  v.lambda_n = number(c.at("lambda_n"), "constants.lambda_n");
  v.C = number(c.at("C"), "constants.C");
  const double cd = static_cast<double>(reported_c) * delta;
  const double R = 256.0 * (static_cast<double>(size_x) * (20.0 * cd + 12.0 * delta) + 4.0 * cd);
  const double lambda_n = 4.0 / v.mu + 2.0 * R;
  const double C = R + 2.0 * binomial2(k) * lambda_n;
  check.require(v.mu > 0.0, "constants.mu is not positive");
  check.require(close(number(c.at("delta"), "constants.delta"), delta, 1e-15), "constants.delta is not ln 3");
  check.require(close(v.R, R, 1e-12), fmt::format("constants.R = {:.17g}, recomputed {:.17g}", v.R, R));
  check.require(close(v.lambda_n, lambda_n, 1e-12),
                fmt::format("constants.lambda_n = {:.17g}, recomputed {:.17g}", v.lambda_n, lambda_n));
  check.require(close(v.C, C, 1e-12), fmt::format("constants.C = {:.17g}, recomputed {:.17g}", v.C, C));
  return v;
}

void check_on_hyperboloid(const Inputs& in, const Vec& x, const std::string& what, Checker& check) {
  check.require(x[0] > 0.0 && std::abs(lorentz(x, x) + 1.0) <= in.tol_point * std::max(1.0, x[0] * x[0]),
                what + " is not on the hyperboloid");
}

// Every reported displacement is recomputed; returns the largest recomputed one.
double check_displacements(const Inputs& in, const Vec& x, const json& reported, std::uint64_t expected,
                           const std::string& what, Checker& check) {
  std::uint64_t seen = 0;
  double largest = 0.0;
  for (const auto& [name, value] : reported.items()) {
    const std::size_t g = in.index(name);
    seen |= std::uint64_t{1} << g;
    const double d = distance(x, apply(in.images[g], x));
    largest = std::max(largest, d);
    check.require(std::abs(d - number(value, what)) <= 1e-9 * std::max(1.0, d),
                  fmt::format("{}: {} moves the point {:.17g}, report says {:.17g}", what, name, d,
                              number(value, what)));
  }
  check.require(seen == expected, what + " does not list exactly the expected generators");
  return largest;
}

void check_splitting(const Inputs& in, const json& s, const ConstantsView& c, Checker& check) {
  const std::uint64_t all = in.k() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << in.k()) - 1;
  const std::uint64_t plus = in.set_of(s.at("plus"), "splitting.plus");
  const std::uint64_t core = in.set_of(s.at("core"), "splitting.core");
  const std::uint64_t minus = in.set_of(s.at("minus"), "splitting.minus");
  check.require((plus | minus) == all, "splitting sides do not cover the generators");
  check.require((plus & minus) == core, "splitting core is not the intersection of the sides");
  check.require(plus != all && minus != all, "splitting is trivial");
  const std::uint64_t a = plus & ~core;
  const std::uint64_t b = minus & ~core;
  for (std::size_t i = 0; i < in.k(); ++i) {
    for (std::size_t j = 0; j < in.k(); ++j) {
      if (((a >> i) & 1U) == 0 || ((b >> j) & 1U) == 0) continue;
      check.require(in.order(i, j) == 0, fmt::format("diagram edge {}-{} crosses the core {}", in.names[i],
                                                     in.names[j], s.at("core").dump()));
    }
  }

  if (s.at("free_product").get<bool>()) {
    check.require(core == 0, "free product with a nonempty core");
    return;
  }
  if (core == 0) return;
  const Vec m = point(s.at("midpoint"), in.dim, "splitting.midpoint");
  check_on_hyperboloid(in, m, "splitting.midpoint", check);
  const double largest = check_displacements(in, m, s.at("displacements"), core, "splitting.displacements", check);
  check.require(largest <= c.mu + in.tol_fix,
                fmt::format("core moves the midpoint {:.17g}, more than mu = {:.17g}", largest, c.mu));
  check.require(number(s.at("shadow_length"), "splitting.shadow_length") >= c.lambda_n,
                "certifying edge is shorter than lambda_n");
}

void check_bound(const Inputs& in, const json& b, const ConstantsView& c, Checker& check) {
  const Vec x = point(b.at("witness"), in.dim, "bound.witness");
  check_on_hyperboloid(in, x, "bound.witness", check);
  const std::uint64_t all = in.k() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << in.k()) - 1;
  const double largest = check_displacements(in, x, b.at("displacements"), all, "bound.displacements", check);
  check.require(close(number(b.at("C"), "bound.C"), c.C, 1e-15), "bound.C differs from constants.C");
  check.require(std::abs(number(b.at("value"), "bound.value") - largest) <= 1e-9 * std::max(1.0, largest),
                "bound.value is not the largest displacement");
  check.require(largest <= c.C + in.tol_fix,
                fmt::format("witness displacement {:.17g} exceeds C = {:.17g}", largest, c.C));
}

void check_sites(const Inputs& in, const json& sites, Checker& check) {
  for (const auto& site : sites) {
    const std::size_t i = in.index(site.at("pair").at(0).get<std::string>());
    const std::size_t j = in.index(site.at("pair").at(1).get<std::string>());
    const Vec x = point(site.at("point"), in.dim, "site");
    check.require(in.order(i, j) != 0, "site for a pair with infinite order");
    check_on_hyperboloid(in, x, "site", check);
    for (std::size_t g : {i, j}) {
      const double d = distance(x, apply(in.images[g], x));
      check.require(d <= in.tol_fix, fmt::format("site for ({}, {}) is moved {:.3e} by {}", in.names[i],
                                                 in.names[j], d, in.names[g]));
    }
  }
}

// Labelled vertices of a dumped tree are R-fixed by their labels.
void check_tree(const Inputs& in, const json& tree, const ConstantsView& c, Checker& check) {
  if (!tree.contains("labels") || !tree.contains("witnesses")) return;
  const auto& labels = tree.at("labels");
  const auto& witnesses = tree.at("witnesses");
  for (std::size_t v = 0; v < labels.size(); ++v) {
    const Vec q = point(witnesses.at(v), in.dim, "tree witness");
    for (const auto& label : labels.at(v)) {
      const std::size_t g = label.get<std::size_t>() - 1;
      const double d = distance(q, apply(in.images.at(g), q));
      check.require(d <= c.R + in.tol_fix, fmt::format("vertex {} is moved {:.17g} > R by {}", v, d, in.names[g]));
    }
  }
}

}  // namespace

Validation validate_report(const json& system_doc, const json& representation_doc, const json& report) {
  Validation out;
  Checker check(out);
  try {
    const Inputs in = read_inputs(system_doc, representation_doc, report);
    check_matrices(in, check);
    const ConstantsView c = check_constants(in, report.at("constants"), check);
    const std::string outcome = report.at("outcome").get<std::string>();
    if (outcome == "splitting") {
      check_splitting(in, report.at("splitting"), c, check);
    } else if (outcome == "bound") {
      check_bound(in, report.at("bound"), c, check);
    } else {
      check.require(false, "unknown outcome " + outcome);
    }
    if (report.contains("sites")) check_sites(in, report.at("sites"), check);
    if (report.contains("tree")) check_tree(in, report.at("tree"), c, check);
  } catch (const std::exception& e) {
    check.require(false, std::string("unreadable document: ") + e.what());
  }
  return out;
}

}  // namespace coxcompact::cli
