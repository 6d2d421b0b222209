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

#include "coxcompact/cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "coxcompact/cli/documents.hpp"
#include "coxcompact/cli/render.hpp"
#include "coxcompact/cli/report.hpp"
#include "coxcompact/cli/validator.hpp"
#include "coxcompact/coxeter/diagram.hpp"
#include "coxcompact/coxeter/smallness.hpp"
#include "coxcompact/coxeter/splitting.hpp"
#include "coxcompact/error.hpp"
#include "coxcompact/pipeline/analyze.hpp"
#include "coxcompact/pipeline/constants.hpp"

namespace coxcompact::cli {
namespace {

using nlohmann::ordered_json;

// Margulis constants accepted through `--margulis table`, keyed by dimension.
const std::map<std::size_t, double> kMargulisTable = {{3, 0.104}};

constexpr const char* kMargulisHelp =
    "Margulis constant mu_n (> 0), or 'table' for the documented value of the representation's dimension "
    "(n=3: 0.104, a published lower bound). No other dimension has a built-in value.";

double margulis_value(const std::string& text, std::optional<std::size_t> dimension) {
  if (text == "table") {
    if (!dimension) throw Error(ErrorCode::kInvalidArgument, "--margulis table needs a representation");
    const auto it = kMargulisTable.find(*dimension);
    if (it == kMargulisTable.end()) {
      throw Error(ErrorCode::kInvalidArgument, fmt::format("no tabulated Margulis constant for n = {}", *dimension));
    }
    return it->second;
  }
  std::size_t used = 0;
  double mu = 0.0;
  try {
    mu = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(mu > 0.0) || !std::isfinite(mu)) {
    throw Error(ErrorCode::kInvalidArgument, "--margulis must be a positive number or 'table', got " + text);
  }
  return mu;
}

void emit(const ordered_json& doc, const std::string& out_path, std::ostream& out) {
  const std::string text = render_json(doc);
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  file << text;
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + out_path);
}

int cmd_splittings(const std::string& system_path, std::ostream& out) {
  const auto system = load_system_file(system_path);
  const auto diagram = coxeter::diagram_of(system);
  ordered_json list = ordered_json::array();
  for (const auto& s : coxeter::enumerate_special_splittings(diagram)) {
    ordered_json item = splitting_to_json(s, system);
    item["smallness"] = smallness_to_json(coxeter::classify_smallness(s.core, system), system);
    list.push_back(std::move(item));
  }
  ordered_json doc;
  doc["generators"] = system.generators();
  doc["connected"] = system.has_connected_diagram();
  doc["splittings"] = std::move(list);
  emit(doc, "", out);
  return kExitOk;
}

int cmd_constants(std::size_t k, std::optional<std::size_t> size_x, const std::string& margulis, std::ostream& out) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  const double mu = margulis_value(margulis, std::nullopt);
  const auto constants =
      pipeline::constants_for(k, size_x.value_or(std::max<std::size_t>(1, pipeline::pairs(k))), mu);
  ordered_json doc;
  doc["constants"] = constants_to_json(constants);
  doc["alternatives"] = alternatives_to_json(pipeline::alternatives_for(constants));
  emit(doc, "", out);
  return kExitOk;
}

struct AnalyzeFlags {
  std::string system_path;
  std::string representation_path;
  std::string margulis;
  std::optional<double> tol_point;
  std::optional<double> tol_fix;
  std::size_t budget = pipeline::AnalyzeOptions{}.budget;
  std::string out_path;
  bool dump_tree = false;
};

int cmd_analyze(const AnalyzeFlags& flags, std::ostream& out) {
  const auto system = load_system_file(flags.system_path);
  auto doc = load_representation_file(flags.representation_path);
  if (flags.tol_point) doc.tolerances.point = *flags.tol_point;
  if (flags.tol_fix) doc.tolerances.fix = *flags.tol_fix;
  const double mu = margulis_value(flags.margulis, doc.dimension);
  const auto rep = pipeline::load_representation(system, doc);
  pipeline::AnalyzeOptions options;
  options.budget = flags.budget;
  const auto report = pipeline::analyze(system, rep, mu, options);
  emit(report_to_json(report, system, rep.tolerances(), flags.dump_tree), flags.out_path, out);
  return report.is_splitting() ? kExitSplitting : kExitOk;
}

nlohmann::json parse_file(const std::string& path) {
  const std::string text = read_text(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kMalformedDocument, path + ": " + e.what());
  }
}

int cmd_check(const std::string& system_path, const std::string& representation_path, const std::string& report_path,
              std::ostream& out) {
  const auto system = load_system_file(system_path);
  ordered_json doc;
  doc["system"] = {{"generators", system.rank()}, {"connected", system.has_connected_diagram()}};
  if (!representation_path.empty()) {
    const auto rep = pipeline::load_representation(system, load_representation_file(representation_path));
    doc["representation"] = {{"dimension", rep.dimension()}, {"valid", true}};
  }
  int code = kExitOk;
  if (!report_path.empty()) {
    if (representation_path.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "--report needs the representation document");
    }
    const auto v = validate_report(parse_file(system_path), parse_file(representation_path), parse_file(report_path));
    doc["report"] = {{"checks", v.checks}, {"violations", v.violations}};
    if (!v.ok()) code = kExitNumericalFailure;
  }
  emit(doc, "", out);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Effective compactness toolkit for Coxeter groups acting on hyperbolic space", "coxcompact"};
  app.require_subcommand(1);

  std::string system_path;
  auto* splittings = app.add_subcommand("splittings", "List nontrivial special splittings with smallness verdicts");
  splittings->add_option("system", system_path, "Coxeter system document")->required();

  std::size_t k = 0;
  std::optional<std::size_t> size_x;
  std::string margulis;
  auto* constants = app.add_subcommand("constants", "Evaluate c, delta, R, Lambda_n and C_n(k)");
  constants->add_option("-k,--rank", k, "Number of generators")->required();
  constants->add_option("--size-x", size_x, "Number of sites |X| (default: k choose 2, at least 1)");
  constants->add_option("--margulis", margulis, kMargulisHelp)->required();

  AnalyzeFlags flags;
  auto* analyze = app.add_subcommand("analyze", "Find a small splitting or certify the displacement bound");
  analyze->add_option("system", flags.system_path, "Coxeter system document")->required();
  analyze->add_option("representation", flags.representation_path, "Representation document")->required();
  analyze->add_option("--margulis", flags.margulis, kMargulisHelp)->required();
  analyze->add_option("--tol-point", flags.tol_point, "Hyperboloid membership tolerance");
  analyze->add_option("--tol-fix", flags.tol_fix, "Fixed-point tolerance");
  analyze->add_option("--budget", flags.budget, "Iterations for displacement minimization");
  analyze->add_option("--out", flags.out_path, "Write the report here instead of stdout");
  analyze->add_flag("--dump-tree", flags.dump_tree, "Include the approximating tree in the report");

  std::string check_system;
  std::string check_representation;
  std::string check_report;
  auto* check = app.add_subcommand("check", "Validate documents, and optionally a report against them");
  check->add_option("system", check_system, "Coxeter system document")->required();
  check->add_option("representation", check_representation, "Representation document");
  check->add_option("--report", check_report, "Report to re-validate from the raw matrices");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*splittings) return cmd_splittings(system_path, out);
    if (*constants) return cmd_constants(k, size_x, margulis, out);
    if (*analyze) return cmd_analyze(flags, out);
    return cmd_check(check_system, check_representation, check_report, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_input_error(e.code()) ? kExitInputError : kExitNumericalFailure;
  }
}

}  // namespace coxcompact::cli
