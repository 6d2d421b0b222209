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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "coxcompact/cli/app.hpp"
#include "coxcompact/cli/documents.hpp"
#include "coxcompact/cli/render.hpp"
#include "coxcompact/cli/validator.hpp"
#include "fixtures.hpp"

namespace coxcompact::cli {
namespace {

using nlohmann::json;
using testing::data_path;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("coxcompact_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json"))
                .string();
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

std::vector<std::string> cores_of(const json& doc) {
  std::vector<std::string> out;
  for (const auto& s : doc.at("splittings")) out.push_back(s.at("core").dump());
  return out;
}

TEST(Splittings, Quadrilateral) {
  const CliRun r = run_cli({"splittings", data_path("quadrilateral.system.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(cores_of(doc), (std::vector<std::string>{R"(["s1","s3"])", R"(["s2","s4"])"}));
  for (const auto& s : doc.at("splittings")) {
    EXPECT_TRUE(s.at("smallness").at("small").get<bool>());
    ASSERT_EQ(s.at("smallness").at("components").size(), 1U);
    EXPECT_EQ(s.at("smallness").at("components")[0].at("type"), "~A1");
  }
}

TEST(Splittings, SingleEdgeHasNone) {
  const CliRun r = run_cli({"splittings", data_path("dihedral3.system.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(json::parse(r.out).at("splittings").empty());
}

TEST(Splittings, MalformedDocument) {
  const TempFile broken("{\n  \"generators\": [\"a\", \"b\"],\n  \"orders\": [[\"a\", \"b\", 3]\n");
  const CliRun r = run_cli({"splittings", broken.path()});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("line"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("column"), std::string::npos) << r.err;

  const TempFile bad_order(R"({"generators": ["a", "b"], "orders": [["a", "b", 0]]})");
  EXPECT_EQ(run_cli({"splittings", bad_order.path()}).code, kExitInputError);
  EXPECT_EQ(run_cli({"splittings", "/nonexistent/system.json"}).code, kExitInputError);
}

TEST(Constants, RankFour) {
  const CliRun r = run_cli({"constants", "-k", "4", "--margulis", "0.104"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json c = json::parse(r.out).at("constants");
  EXPECT_EQ(c.at("sizeX"), 6);
  EXPECT_EQ(c.at("c"), 2);
  EXPECT_NEAR(c.at("R").get<double>(), 81920.0 * std::log(3.0), 1e-9);
  EXPECT_NEAR(c.at("C").get<double>() / 1e6, 2.2504, 5e-5);
}

TEST(Constants, RankTwoAndErrors) {
  const CliRun r = run_cli({"constants", "--rank", "2", "--margulis", "0.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json c = json::parse(r.out).at("constants");
  EXPECT_EQ(c.at("sizeX"), 1);
  EXPECT_EQ(c.at("c"), 1);
  EXPECT_EQ(run_cli({"constants", "-k", "4", "--margulis", "0"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"constants", "-k", "0", "--margulis", "0.1"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"constants", "-k", "4"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"constants", "-k", "4", "--size-x", "10", "--margulis", "0.1"}).code, kExitOk);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kExitInputError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
  EXPECT_EQ(run_cli({"analyze", data_path("dihedral3.system.json"), data_path("dihedral3.representation.json")}).code,
            kExitInputError);
}

TEST(Analyze, DihedralBound) {
  const CliRun r = run_cli({"analyze", data_path("dihedral3.system.json"), data_path("dihedral3.representation.json"),
                         "--margulis", "0.104"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json report = json::parse(r.out);
  EXPECT_EQ(report.at("outcome"), "bound");
  EXPECT_LE(report.at("bound").at("value").get<double>(), 1e-6);
  const Validation v = validate_report(json::parse(slurp(data_path("dihedral3.system.json"))),
                                       json::parse(slurp(data_path("dihedral3.representation.json"))), report);
  EXPECT_TRUE(v.ok()) << v.violations.front();
  EXPECT_GT(v.checks, 5U);
}

TEST(Analyze, DisconnectedSplits) {
  const CliRun r = run_cli({"analyze", data_path("disconnected.system.json"), data_path("disconnected.representation.json"),
                         "--margulis", "0.104"});
  ASSERT_EQ(r.code, kExitSplitting) << r.err;
  const json report = json::parse(r.out);
  EXPECT_EQ(report.at("outcome"), "splitting");
  EXPECT_TRUE(report.at("splitting").at("free_product").get<bool>());
  EXPECT_TRUE(report.at("splitting").at("core").empty());
}

TEST(Analyze, QuadrilateralValidatesAndIsDeterministic) {
  const std::vector<std::string> args{"analyze", data_path("quadrilateral.system.json"),
                                      data_path("quadrilateral.representation.json"), "--margulis", "0.104",
                                      "--dump-tree"};
  const CliRun a = run_cli(args);
  const CliRun b = run_cli(args);
  ASSERT_TRUE(a.code == kExitOk || a.code == kExitSplitting) << a.err;
  EXPECT_EQ(a.out, b.out);
  const json report = json::parse(a.out);
  EXPECT_TRUE(report.contains("tree"));
  const Validation v = validate_report(json::parse(slurp(data_path("quadrilateral.system.json"))),
                                       json::parse(slurp(data_path("quadrilateral.representation.json"))), report);
  EXPECT_TRUE(v.ok()) << v.violations.front();
}

TEST(Analyze, MargulisTable) {
  // The table only knows n = 3.
  EXPECT_EQ(run_cli({"analyze", data_path("dihedral3.system.json"), data_path("dihedral3.representation.json"),
                     "--margulis", "table"})
                .code,
            kExitInputError);
  const TempFile system(R"({"generators": ["s1", "s2", "s3"], "orders": [["s1", "s2", 3], ["s2", "s3", 3], ["s1", "s3", 2]]})");
  const auto a3 = load_system_file(system.path());
  const TempFile rep(pipeline::serialize_representation(
      a3, testing::spherical_representation(a3, hyperbolic::HPoint::origin(3))));
  const CliRun r = run_cli({"analyze", system.path(), rep.path(), "--margulis", "table"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_DOUBLE_EQ(json::parse(r.out).at("constants").at("mu").get<double>(), 0.104);
}

TEST(Analyze, OutFile) {
  const TempFile target("");
  const CliRun r = run_cli({"analyze", data_path("dihedral3.system.json"), data_path("dihedral3.representation.json"),
                         "--margulis", "0.104", "--out", target.path()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(slurp(target.path())).at("outcome"), "bound");
}

TEST(Analyze, InputErrors) {
  const TempFile not_involution(R"({"dimension": 2, "matrices": {"a": [1,0,0, 0,1,0, 0,0,1], "b": [2,0,0, 0,1,0, 0,0,1]}})");
  EXPECT_EQ(run_cli({"analyze", data_path("dihedral3.system.json"), not_involution.path(), "--margulis", "0.1"}).code,
            kExitInputError);
  EXPECT_EQ(run_cli({"analyze", data_path("dihedral3.system.json"), data_path("quadrilateral.representation.json"),
                     "--margulis", "0.1"})
                .code,
            kExitInputError);
  EXPECT_EQ(run_cli({"analyze", data_path("dihedral3.system.json"), data_path("dihedral3.representation.json"),
                     "--margulis", "-1"})
                .code,
            kExitInputError);
}

TEST(Validator, CatchesTamperedReports) {
  const json system = json::parse(slurp(data_path("quadrilateral.system.json")));
  const json rep = json::parse(slurp(data_path("quadrilateral.representation.json")));
  const CliRun r = run_cli({"analyze", data_path("quadrilateral.system.json"),
                         data_path("quadrilateral.representation.json"), "--margulis", "0.104"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json report = json::parse(r.out);
  ASSERT_EQ(report.at("outcome"), "bound");

  json lower = report;
  lower["bound"]["value"] = 0.5;
  EXPECT_FALSE(validate_report(system, rep, lower).ok());

  json moved = report;
  moved["bound"]["witness"][1] = moved["bound"]["witness"][1].get<double>() + 0.25;
  EXPECT_FALSE(validate_report(system, rep, moved).ok());

  json constants = report;
  constants["constants"]["R"] = constants["constants"]["R"].get<double>() * 0.5;
  EXPECT_FALSE(validate_report(system, rep, constants).ok());

  json site = report;
  site["sites"][0]["pair"] = json::array({"s1", "s3"});
  EXPECT_FALSE(validate_report(system, rep, site).ok());
}

TEST(Validator, CatchesABadSplitting) {
  const json system = json::parse(slurp(data_path("disconnected.system.json")));
  const json rep = json::parse(slurp(data_path("disconnected.representation.json")));
  const CliRun r = run_cli({"analyze", data_path("disconnected.system.json"), data_path("disconnected.representation.json"),
                         "--margulis", "0.104"});
  ASSERT_EQ(r.code, kExitSplitting);
  json report = json::parse(r.out);
  EXPECT_TRUE(validate_report(system, rep, report).ok());
  // Putting a and b on different sides cuts a finite edge.
  report["splitting"]["plus"] = json::array({"a"});
  report["splitting"]["minus"] = json::array({"b", "c"});
  EXPECT_FALSE(validate_report(system, rep, report).ok());
}

TEST(Check, Documents) {
  const CliRun ok = run_cli({"check", data_path("quadrilateral.system.json"), data_path("quadrilateral.representation.json")});
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_EQ(run_cli({"check", data_path("quadrilateral.system.json")}).code, kExitOk);
  EXPECT_EQ(run_cli({"check", data_path("dihedral3.system.json"), data_path("quadrilateral.representation.json")}).code,
            kExitInputError);
}

TEST(Check, ReportFile) {
  const CliRun r = run_cli({"analyze", data_path("quadrilateral.system.json"),
                         data_path("quadrilateral.representation.json"), "--margulis", "0.104"});
  const TempFile good(r.out);
  EXPECT_EQ(run_cli({"check", data_path("quadrilateral.system.json"), data_path("quadrilateral.representation.json"),
                     "--report", good.path()})
                .code,
            kExitOk);
  json tampered = json::parse(r.out);
  tampered["bound"]["value"] = 0.5;
  const TempFile bad(tampered.dump());
  EXPECT_EQ(run_cli({"check", data_path("quadrilateral.system.json"), data_path("quadrilateral.representation.json"),
                     "--report", bad.path()})
                .code,
            kExitNumericalFailure);
}

TEST(Render, Numbers) {
  nlohmann::ordered_json doc;
  doc["x"] = 0.1;
  doc["inf"] = std::numeric_limits<double>::infinity();
  doc["list"] = {1, 2.5};
  const std::string text = render_json(doc);
  EXPECT_NE(text.find("0.10000000000000001"), std::string::npos) << text;
  EXPECT_NE(text.find("\"inf\""), std::string::npos);
  EXPECT_NE(text.find("[1, 2.5]"), std::string::npos) << text;
  EXPECT_EQ(text.back(), '\n');
}

}  // namespace
}  // namespace coxcompact::cli
