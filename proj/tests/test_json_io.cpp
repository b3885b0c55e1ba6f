#include <gtest/gtest.h>

#include <fstream>
#include <iterator>

#include <siegel/catalog.hpp>
#include <siegel/json_io.hpp>

using namespace siegel;
using io::Json;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

std::string sample(const std::string& file) {
  std::ifstream in(std::string(SIEGEL_SAMPLES_DIR) + "/" + file, std::ios::binary);
  if (!in) throw std::runtime_error("missing sample " + file);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string error_path(const std::string& text) {
  try {
    io::parse_domain(text);
  } catch (const io::document_error& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST(JsonScalars, RationalsAreStrings) {
  EXPECT_EQ(io::to_json(q(-3, 4)), Json("-3/4"));
  EXPECT_EQ(io::rational_from_json(Json("6/8"), ""), q(3, 4));
  EXPECT_EQ(io::rational_from_json(Json(5), ""), q(5));
  EXPECT_THROW(io::rational_from_json(Json(0.5), "/x"), io::document_error);
  const GaussianRational z(q(1, 2), q(-2));
  EXPECT_EQ(io::complex_from_json(io::to_json(z), ""), z);
  EXPECT_EQ(io::complex_from_json(Json("7"), ""), GaussianRational(7));
}

TEST(DomainDocument, RoundTrip) {
  for (const auto& name : {"D6", "D8", "T4", "D3"}) {
    const auto dom = named_domain(name);
    io::DomainDocument doc{dom.name, {}, dom.spec.cone, dom.spec.form};
    const auto text = io::emit(io::to_json(doc));
    const auto back = io::parse_domain(text);
    EXPECT_EQ(back, doc) << name;
    EXPECT_EQ(io::emit(io::to_json(back)), text);
    EXPECT_EQ(io::to_spec(back).form, dom.spec.form);
  }
  const io::DomainDocument shortcut{"ball", {q(4)}, {}, {}};
  EXPECT_EQ(io::parse_domain(io::emit(io::to_json(shortcut))), shortcut);
  EXPECT_EQ(io::to_spec(shortcut).m(), 3u);
}

TEST(DomainDocument, SamplesLoad) {
  EXPECT_EQ(io::to_spec(io::parse_domain(sample("ball3.json"))).m(), 2u);
  EXPECT_EQ(compute_algebra(io::to_spec(io::parse_domain(sample("d6.json")))).total(), 10u);
  EXPECT_EQ(compute_algebra(io::to_spec(io::parse_domain(sample("b1_x_t3.json")))).total(), 13u);
  const auto skewed = io::to_spec(io::parse_domain(sample("skewed_ball.json")));
  EXPECT_EQ(skewed.form[0](0, 1), GaussianRational::i());
  EXPECT_EQ(compute_algebra(skewed).total(), 15u);  // linearly equivalent to B^3
  EXPECT_EQ(compute_algebra(io::to_spec(io::parse_domain(sample("d8.json")))).dims()[2], 7u);
  try {
    io::to_spec(io::parse_domain(sample("not-omega-hermitian.json")));
    FAIL() << "expected a validation error";
  } catch (const validation_error& e) {
    EXPECT_EQ(e.condition(), "omega-hermitian");
  }
}

TEST(DomainDocument, SyntaxErrorsAreLocated) {
  try {
    io::parse_domain(sample("malformed.json"));
    FAIL() << "expected a parse error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 5u);
  }
  try {
    io::parse_domain("{\n  \"name\": \"ball\",\n  \"params\": [3,]\n}");
    FAIL() << "expected a parse error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 16u);
  }
}

TEST(DomainDocument, SemanticErrorsCarryAPath) {
  EXPECT_EQ(error_path(R"({"cone": {"type": "lorentz", "dim": 2}})"), "/cone/dim");
  EXPECT_EQ(error_path(R"({"cone": {"type": "cube"}})"), "/cone/type");
  EXPECT_EQ(error_path(R"({"cone": {"type": "halfline"}, "hermitian": [[["1", "2"], ["3", "1"]]]})"), "/hermitian/0");
  EXPECT_EQ(error_path(R"({"cone": {"type": "halfline"}, "hermitian": [[["1"]], [["1"]]]})"), "/hermitian");
  EXPECT_EQ(error_path(R"({"cone": {"type": "halfline"}, "hermitian": [[["x"]]]})"), "/hermitian/0/0/0");
  EXPECT_EQ(error_path(R"({"schema": "other/2", "name": "ball"})"), "/schema");
  EXPECT_EQ(error_path(R"({"params": ["1"]})"), "");
  EXPECT_EQ(error_path("[1, 2]"), "");
}

TEST(ReportDocument, RoundTrip) {
  for (const bool generators : {false, true})
    for (const auto& name : {"D6", "D8", "T3"}) {
      const auto dom = named_domain(name);
      const ReportOptions opt{5, 9, generators};
      const auto doc = io::make_report_document(report(dom.spec, opt), opt, dom.name);
      EXPECT_EQ(doc.generators.has_value(), generators);
      const auto text = io::emit(io::to_json(doc));
      const auto back = io::parse_report(text);
      EXPECT_EQ(back, doc) << name;
      EXPECT_EQ(io::emit(io::to_json(back)), text);
    }
}

TEST(ReportDocument, Shape) {
  const ReportOptions opt{};
  const auto j = io::to_json(io::make_report_document(report(named_domain("D6").spec, opt), opt, "D6"));
  EXPECT_EQ(j["schema"], "siegel-report/1");
  EXPECT_EQ(j["d"], 10);
  EXPECT_EQ(j["dims"]["-1"], 3);
  EXPECT_EQ(j["dims"]["-1/2"], 2);
  EXPECT_EQ(j["dims"]["0"], 4);
  EXPECT_EQ(j["dims"]["1/2"], 0);
  EXPECT_EQ(j["dims"]["1"], 1);
  EXPECT_EQ(j["s"], 1);
  ASSERT_TRUE(j["bounds"].is_array());
  for (const auto& b : j["bounds"]) {
    EXPECT_TRUE(b["lhs"].is_string());
    EXPECT_TRUE(b["holds"].get<bool>());
  }
}

TEST(Tables, Serialize) {
  const auto s = io::to_json(bound_scan(5, 6));
  EXPECT_EQ(s["kind"], "bound-scan");
  EXPECT_TRUE(s["pattern_holds"].get<bool>());
  const auto c = io::to_json(case_analysis(4));
  EXPECT_EQ(c["kind"], "case-analysis");
  ASSERT_EQ(c["survivors"].size(), 1u);
  EXPECT_EQ(c["survivors"][0]["d"], 13);
}
