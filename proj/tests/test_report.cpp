#include <gtest/gtest.h>

#include <json.hpp>
#include <map>
#include <random>
#include <sstream>

#include "jacnewton/contact.hpp"
#include "jacnewton/error.hpp"
#include "jacnewton/jacobian.hpp"
#include "jacnewton/report.hpp"
#include "printers.hpp"

using namespace jacnewton;
using nlohmann::json;

namespace {

Polygon random_polygon(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 40), den(1, 3), count(0, 4), axis(0, 3);
  std::vector<ElementaryTerm> terms;
  int k = count(rng);
  for (int i = 0; i < k; ++i) terms.push_back({make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng))});
  int a = axis(rng);
  return Polygon::from_terms(terms, a != 1, a != 2);
}

// "a.b: v" lines from the text renderer.
std::map<std::string, std::string> text_fields(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto colon = line.find(": ");
    if (colon == std::string::npos) continue;
    out[line.substr(0, colon)] = line.substr(colon + 2);
  }
  return out;
}

// Same shape from a JSON object; arrays of scalars are joined with "," and
// polygon objects print as polygon text.
void flatten(const json& j, const std::string& prefix, std::map<std::string, std::string>& out) {
  if (j.is_object() && j.contains("terms")) {
    out[prefix] = polygon_text(parse_polygon(j.dump()));
    return;
  }
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    return;
  }
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_array()) {
    std::string joined;
    for (std::size_t i = 0; i < j.size(); ++i) joined += (i ? "," : "") + scalar(j[i]);
    out[prefix] = joined;
    return;
  }
  out[prefix] = scalar(j);
}

TEST(ReportTest, PolygonTextRoundTrip) {
  EXPECT_EQ(polygon_text(parse_polygon("{6|1}+{14|2}")), "{6|1}+{14|2}");
  EXPECT_EQ(polygon_text(parse_polygon(" {14|2} + {6|1} ")), "{6|1}+{14|2}");
  EXPECT_EQ(polygon_text(parse_polygon("{13/2|1}")), "{13/2|1}");
  EXPECT_EQ(polygon_text(Polygon()), "{}");
  EXPECT_EQ(polygon_text(Polygon::from_terms({{2, 1}}, true, false)), "{2|1}[h]");
  std::mt19937 rng(61);
  for (int k = 0; k < 300; ++k) {
    Polygon p = random_polygon(rng);
    EXPECT_EQ(parse_polygon(polygon_text(p)), p) << polygon_text(p);
    EXPECT_EQ(parse_polygon(render_polygon(p, Format::json)), p) << render_polygon(p, Format::json);
  }
}

TEST(ReportTest, PolygonParseErrors) {
  for (const char* bad : {"", "{6|1", "{6|0}", "{6|-1}", "{a|1}", "{6|1}+", "{6|1}[x]", "{\"terms\":3}"})
    EXPECT_THROW(parse_polygon(bad), Error) << bad;
  EXPECT_EQ(parse_polygon(R"({"terms":[[6,1],["14","2"]],"horizontal":true,"vertical":true})"),
            parse_polygon("{6|1}+{14|2}"));
}

TEST(ReportTest, PolygonJsonUsesDecimalStrings) {
  json j = json::parse(render_polygon(parse_polygon("{6|1}+{13/2|2}"), Format::json));
  EXPECT_EQ(j["terms"][0][0], "13/2");
  EXPECT_EQ(j["terms"][1][1], "1");
  EXPECT_TRUE(j["horizontal"].get<bool>());
}

TEST(ReportTest, TextAndJsonCarryTheSameFields) {
  std::vector<std::pair<std::string, std::string>> reports;
  for (const char* p : {"{6|1}+{14|2}", "{6|1}+{13|2}", "{2|3}", "{}"})
    reports.emplace_back(render_criteria(parse_polygon(p), Format::text),
                         render_criteria(parse_polygon(p), Format::json));
  for (const char* f : {"(y^2-x^3)^2-x^7", "(y^2-x^3)^2-4x^5y-x^7", "x*y"}) {
    IrreducibilityVerdict v = test_irreducible(parse_poly(f));
    reports.emplace_back(render_irreducible(v, Format::text), render_irreducible(v, Format::json));
  }
  IntSeq gens{4, 6, 14};
  reports.emplace_back(render_bresinsky(gens, Format::text), render_bresinsky(gens, Format::json));
  reports.emplace_back(render_approximate_root(parse_poly("(y^2-x^3)^2-4x^5y-x^7"), 2, Format::text),
                       render_approximate_root(parse_poly("(y^2-x^3)^2-4x^5y-x^7"), 2, Format::json));
  for (const auto& [text, js] : reports) {
    std::map<std::string, std::string> flat;
    flatten(json::parse(js), "", flat);
    EXPECT_EQ(text_fields(text), flat) << text << "\n" << js;
  }
}

TEST(ReportTest, Sequences) {
  EXPECT_EQ(render_sequence("semigroup", IntSeq{4, 6, 13}, Format::text), "4,6,13");
  json j = json::parse(render_sequence("semigroup", IntSeq{4, 6, 13}, Format::json));
  EXPECT_EQ(j["semigroup"], json({"4", "6", "13"}));
}

TEST(ReportTest, Errors) {
  json j = json::parse(render_error("not_squarefree", "f has a multiple factor", Format::json));
  EXPECT_EQ(j["error"]["code"], "not_squarefree");
  EXPECT_EQ(j["error"]["message"], "f has a multiple factor");
  EXPECT_EQ(render_error("syntax", "bad", Format::text), "error (syntax): bad");
}

TEST(ReportTest, NjpAndPolar) {
  JacobianResult kuo = jacobian_polygon(parse_poly("(y^2-x^3)^2-x^7"));
  EXPECT_EQ(render_njp(kuo, Format::text), "{6|1}+{14|2}");
  EXPECT_EQ(render_polar(kuo, Format::text), "<6:1, 7:2>");
  JacobianResult node = jacobian_polygon(parse_poly("x*y"));
  EXPECT_NE(render_njp(node, Format::text).find("shear: "), std::string::npos);
  json j = json::parse(render_njp(node, Format::json));
  EXPECT_TRUE(j["shear_flagged"].get<bool>());
  EXPECT_EQ(parse_polygon(render_njp(node, Format::json)), node.polygon);
}

TEST(ReportTest, TreeAndSvg) {
  ContactTree tree = build_tree(parse_roots_json(R"({"cyclotomic_order":1,"roots":[
      {"terms":[{"exp":"3/2","coeff":["1"]},{"exp":"2","coeff":["1/2"]}]},
      {"terms":[{"exp":"3/2","coeff":["1"]},{"exp":"2","coeff":["-1/2"]}]},
      {"terms":[{"exp":"3/2","coeff":["-1"]},{"exp":"2","coeff":["-1/2"]}]},
      {"terms":[{"exp":"3/2","coeff":["-1"]},{"exp":"2","coeff":["1/2"]}]}]})"));
  std::string text = render_tree(tree, Format::text);
  EXPECT_NE(text.find("node h=3/2 t=2 q=6 members=0,1,2,3"), std::string::npos);
  EXPECT_NE(text.find("polygon: {6|1}+{14|2}"), std::string::npos);
  json j = json::parse(render_tree(tree, Format::json));
  EXPECT_EQ(parse_polygon(j["polygon"].dump()), parse_polygon("{6|1}+{14|2}"));
  std::string svg = render_svg(parse_polygon("{6|1}+{14|2}"));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

}  // namespace
