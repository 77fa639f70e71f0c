#include <gtest/gtest.h>

#include <cmath>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "cli.hpp"

namespace unit_shapes {
namespace {

using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "unit-shapes");
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream stream(text);
  for (std::string line; std::getline(stream, line);) result.push_back(line);
  return result;
}

TEST(Cli, CatalogRectangleJson) {
  const auto r = run_cli({"catalog", "--family", "rectangle", "--r", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("family"), "rectangle");
  EXPECT_DOUBLE_EQ(j.at("Pi").get<double>(), 4.0);
  EXPECT_EQ(r.out.rfind(R"({"family":"rectangle","Pi":4.0,)", 0), 0u);
}

TEST(Cli, CatalogWithoutFamilyListsDefaults) {
  const auto r = run_cli({"catalog", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  EXPECT_EQ(rows.front(), "family,params,Pi");
  EXPECT_EQ(rows.size(), 14u);
}

TEST(Cli, CatalogDegrees) {
  const auto r = run_cli({"catalog", "--family", "rhombus", "--theta", "90", "--degrees", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(json::parse(r.out).at("Pi").get<double>(), 4.0, 1e-14);
}

TEST(Cli, MinimizeTriangle) {
  const auto r = run_cli({"minimize", "--family", "triangle", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j.at("argmin")[0].get<double>(), 1.0, 1e-6);
  EXPECT_NEAR(j.at("argmin")[1].get<double>(), 1.0, 1e-6);
  EXPECT_NEAR(j.at("min_value").get<double>(), 3.0 * std::numbers::sqrt3, 1e-12);
  EXPECT_TRUE(j.at("converged").get<bool>());
}

TEST(Cli, MinimizeEllipseReportsBoundary) {
  const auto r = run_cli({"minimize", "--family", "ellipse", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_DOUBLE_EQ(json::parse(r.out).at("boundary_infimum").get<double>(), std::numbers::pi);
}

TEST(Cli, VerifyIsoperimetricPasses) {
  const auto r = run_cli({"verify", "--suite", "isoperimetric", "--seed", "42"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.out.rfind("PASS", 0), 0u);
}

TEST(Cli, VerifyJsonLinesPerClaim) {
  const auto r = run_cli({"verify", "--suite", "mgon", "--samples", "20", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  EXPECT_EQ(rows.size(), 4u);
  for (const auto& row : rows) EXPECT_TRUE(json::parse(row).at("pass").get<bool>());
}

TEST(Cli, VerifyFailureExitsOne) {
  // Below roundoff, equal blob areas stop registering as equal.
  const auto r = run_cli({"verify", "--suite", "blob", "--tol", "1e-30"});
  EXPECT_EQ(r.code, 1) << r.out << r.err;
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, SolidsCsv) {
  const auto r = run_cli({"solids", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 6u);
  const char* names[] = {"Tetrahedron", "Cube", "Octahedron", "Dodecahedron", "Icosahedron"};
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(rows[i + 1].rfind(names[i], 0), 0u);
    std::vector<double> cells;
    std::istringstream row(rows[i + 1].substr(rows[i + 1].find(',') + 1));
    for (std::string cell; std::getline(row, cell, ',');) cells.push_back(std::stod(cell));
    ASSERT_EQ(cells.size(), 5u);
    EXPECT_LE(std::abs(cells[3] - cells[4]) / cells[4], 1e-9);
  }
}

TEST(Cli, UnitizeRoundTrip) {
  const std::string square = R"({"pieces":[{"kind":"polyline","vertices":[[0,0],[7,0],[7,7],[0,7],[0,0]]}]})";
  const auto first = run_cli({"unitize", "--shape", "-", "--format", "json"}, square);
  ASSERT_EQ(first.code, 0) << first.err;
  const json j = json::parse(first.out);
  EXPECT_DOUBLE_EQ(j.at("fundamental_measure").get<double>(), 4.0);

  const auto second = run_cli({"unitize", "--shape", "-", "--format", "json"}, j.at("unit_shape").dump());
  ASSERT_EQ(second.code, 0) << second.err;
  const json k = json::parse(second.out);
  EXPECT_NEAR(k.at("tong_inradius_reciprocal").get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(k.at("fundamental_measure").get<double>(), 4.0, 1e-12);
  const auto& v0 = j.at("unit_shape").at("pieces")[0].at("vertices");
  const auto& v1 = k.at("unit_shape").at("pieces")[0].at("vertices");
  ASSERT_EQ(v0.size(), v1.size());
  for (std::size_t i = 0; i < v0.size(); ++i) {
    EXPECT_NEAR(v0[i][0].get<double>(), v1[i][0].get<double>(), 1e-12);
    EXPECT_NEAR(v0[i][1].get<double>(), v1[i][1].get<double>(), 1e-12);
  }
}

TEST(Cli, ScanCsv) {
  const auto r = run_cli({"scan", "--quantity", "a", "--lo", "0.1", "--hi", "0.9", "--n", "9", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 10u);
}

TEST(Cli, DeterministicForSeed) {
  const std::vector<std::string> args{"verify", "--suite", "all", "--samples", "30", "--seed", "7", "--format",
                                      "json"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, UsageAndDomainErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"bogus"}).code, 2);
  EXPECT_EQ(run_cli({"catalog", "--family", "kite"}).code, 2);
  EXPECT_EQ(run_cli({"catalog", "--family", "ellipse", "--r", "2"}).code, 2);
  EXPECT_EQ(run_cli({"minimize", "--family", "rhombus", "--lo", "0", "--hi", "1"}).code, 2);
  EXPECT_EQ(run_cli({"unitize", "--shape", "-"}, "not json").code, 2);
  EXPECT_EQ(run_cli({"unitize", "--shape", "-"}, R"({"pieces":[]})").code, 2);
  EXPECT_EQ(run_cli({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run_cli({"--format", "xml", "solids"}).code, 2);
}

}  // namespace
}  // namespace unit_shapes
