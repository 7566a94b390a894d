#include "gqveld/report.hpp"

#include <gtest/gtest.h>

#include "gqveld/export.hpp"

namespace gqveld {
namespace {

const json* find_check(const json& suite, const std::string& check) {
  for (const auto& c : suite["checks"]) {
    if (c["check"] == check) return &c;
  }
  return nullptr;
}

TEST(SuiteReport, ExpectAndDerived) {
  SuiteReport r("demo");
  r.expect("a", "demo.a", 3, 3);
  r.derived("b", "demo.b", json{{"x", 1}});
  EXPECT_TRUE(r.passed());
  r.expect("c", "demo.c", 4, 5);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.failures(), std::vector<std::string>{"demo: demo.c"});
  const auto j = r.to_json();
  EXPECT_TRUE(j["checks"][1]["expected"].is_null());
  for (const char* key : {"claim", "check", "expected", "actual", "pass"}) EXPECT_TRUE(j["checks"][0].contains(key));
}

TEST(Report, SchemaAndOptions) {
  ReportOptions o;
  o.suite = "models";
  o.geometry = GeometryChoice::gq22;
  const auto rep = run_report(o);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.document["schema_version"], kSchemaVersion);
  EXPECT_EQ(rep.document["options"]["geometry"], "gq22");
  ASSERT_EQ(rep.document["suites"].size(), 1u);
  EXPECT_EQ(rep.document["suites"][0]["name"], "models");
}

TEST(Report, UnknownSuiteAndSeed) {
  ReportOptions o;
  o.suite = "nonsense";
  EXPECT_THROW(run_report(o), std::invalid_argument);
  o.suite = "models";
  o.seed_point = 28;
  EXPECT_THROW(run_report(o), std::out_of_range);
}

TEST(Report, SteinerDesign) {
  ReportOptions o;
  o.suite = "steiner";
  o.seed_point = 11;
  const auto rep = run_report(o);
  EXPECT_TRUE(rep.pass) << rep.document.dump(2);
  const auto* c = find_check(rep.document["suites"][0], "steiner.design_parameters");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ((*c)["actual"], (json{{"t", 2}, {"v", 28}, {"k", 12}, {"lambda", 11}}));
}

TEST(Report, VeldkampDimensionPerGeometry) {
  for (auto [g, dim] : {std::pair{GeometryChoice::gq22, 4}, std::pair{GeometryChoice::gq24, 5}, std::pair{GeometryChoice::gq21, 3}}) {
    ReportOptions o;
    o.suite = "veldkamp";
    o.geometry = g;
    const auto rep = run_report(o);
    EXPECT_TRUE(rep.pass);
    bool found = false;
    for (const auto& c : rep.document["suites"][0]["checks"]) {
      if (c["claim"] == "projective dimension") {
        EXPECT_EQ(c["actual"], dim);
        found = true;
      }
    }
    EXPECT_TRUE(found);
  }
}

TEST(Report, AllSuitesPassAndAreDeterministic) {
  const auto a = run_report({});
  const auto b = run_report({});
  EXPECT_TRUE(a.pass) << a.document.dump(2);
  EXPECT_EQ(a.document.dump(), b.document.dump());
  EXPECT_EQ(a.document["suites"].size(), suite_names().size());
  const auto* t1 = find_check(a.document["suites"][2], "veldkamp.classify_lines");
  ASSERT_NE(t1, nullptr);
  EXPECT_EQ((*t1)["actual"], (json{{"I", 45}, {"II", 216}, {"III", 270}, {"IV", 120}}));
}

TEST(Export, Graphs) {
  const auto g6 = export_object("gray", ExportFormat::graph6);
  EXPECT_EQ(from_graph6(g6.substr(0, g6.size() - 1)).order(), 54);
  const auto dot = export_object("clebsch", ExportFormat::dot);
  EXPECT_NE(dot.find("  15;\n"), std::string::npos);
  EXPECT_EQ(dot.find("  16;\n"), std::string::npos);
  const auto js = json::parse(export_object("schlafli", ExportFormat::json));
  EXPECT_EQ(js["order"], 27);
  EXPECT_EQ(js["edges"].size(), 27u * 16 / 2);
  EXPECT_EQ(export_object("schlafli", ExportFormat::json), export_object("schlafli", ExportFormat::json));
}

TEST(Export, VeldkampLines) {
  const auto j = json::parse(export_object("veldkamp-lines", ExportFormat::json));
  ASSERT_EQ(j["lines"].size(), 651u);
  std::map<std::string, int> types;
  for (const auto& l : j["lines"]) ++types[l["type"].get<std::string>()];
  EXPECT_EQ(types, (std::map<std::string, int>{{"I", 45}, {"II", 216}, {"III", 270}, {"IV", 120}}));
  EXPECT_THROW(export_object("veldkamp-lines", ExportFormat::dot), ExportError);
  EXPECT_THROW(export_object("nope", ExportFormat::json), ExportError);
}

TEST(Parse, GeometryAndFormat) {
  EXPECT_EQ(parse_geometry("gq22"), GeometryChoice::gq22);
  EXPECT_FALSE(parse_geometry("gq33").has_value());
  EXPECT_EQ(parse_format("graph6"), ExportFormat::graph6);
  EXPECT_FALSE(parse_format("png").has_value());
}

}  // namespace
}  // namespace gqveld
