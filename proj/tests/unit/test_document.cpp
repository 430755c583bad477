#include "dmckit/document.hpp"
#include "dmckit/report.hpp"

#include <gtest/gtest.h>

using namespace dmckit;

namespace {
FnPtr load(const char* text) { return load_function(std::string_view(text)); }
}  // namespace

TEST(Document, Quadratic) {
  FnPtr f = load(R"({"kind":"quadratic","dim":2,"Q":[[1,"4/5"],["4/5",1]]})");
  ASSERT_NE(dynamic_cast<const QuadraticFn*>(f.get()), nullptr);
  EXPECT_EQ(f->dim(), 2u);
  EXPECT_EQ((*f)({1, 1}), ExtValue(Rational(18, 5)));
  EXPECT_THROW(load(R"({"kind":"quadratic","dim":2,"Q":[[1,2],[3,1]]})"), DocumentError);
  EXPECT_THROW(load(R"({"kind":"quadratic","dim":2,"Q":[[1,2]]})"), DocumentError);
}

TEST(Document, TableDefaultsToEntryBoundingBox) {
  FnPtr f = load(R"({"kind":"table","dim":2,"entries":[{"x":[0,0],"v":0}]})");
  EXPECT_EQ((*f)({0, 0}), ExtValue(0));
  EXPECT_TRUE((*f)({0, 1}).is_inf());
  FnPtr g = load(R"({"kind":"table","dim":1,"box":{"lo":[0],"hi":[3]},"entries":[{"x":[1],"v":"-1/2"},{"x":[3],"v":"inf"}]})");
  EXPECT_EQ((*g)({1}), ExtValue(Rational(-1, 2)));
  EXPECT_TRUE((*g)({0}).is_inf());
  EXPECT_TRUE((*g)({3}).is_inf());
  EXPECT_THROW(load(R"({"kind":"table","dim":1,"entries":[{"x":[1],"v":0},{"x":[1],"v":1}]})"), DocumentError);
  EXPECT_THROW(load(R"({"kind":"table","dim":1,"box":{"lo":[0],"hi":[1]},"entries":[{"x":[4],"v":0}]})"), DocumentError);
}

TEST(Document, IndicatorSeparableLinear) {
  FnPtr s = load(R"({"kind":"indicator","dim":2,"points":[[1,0],[0,1]]})");
  ASSERT_NE(dynamic_cast<const IndicatorFn*>(s.get()), nullptr);
  EXPECT_EQ((*s)({0, 1}), ExtValue(0));
  EXPECT_TRUE((*s)({0, 0}).is_inf());

  FnPtr p = load(R"({"kind":"separable","dim":2,"phi":[{"lo":-1,"values":[1,0,1]},{"lo":0,"values":[0,"1/2",1]}]})");
  EXPECT_EQ((*p)({1, 2}), ExtValue(2));
  EXPECT_THROW(load(R"({"kind":"separable","dim":1,"phi":[{"lo":0,"values":[0,2,3]}]})"), DocumentError);

  FnPtr l = load(R"({"kind":"linear_on_set","dim":2,"c":[-1,0],"box":{"lo":[0,0],"hi":[2,1]}})");
  EXPECT_EQ((*l)({2, 1}), ExtValue(-2));
  EXPECT_TRUE((*l)({3, 0}).is_inf());
}

TEST(Document, Combinators) {
  FnPtr f = load(R"({"kind":"sum","dim":2,"terms":[
      {"weight":1,"fn":{"kind":"quadratic","dim":2,"Q":[[1,0],[0,0]]}},
      {"weight":"1/2","fn":{"kind":"translate","dim":2,"z":[1,0],
        "fn":{"kind":"permute","dim":2,"sigma":[2,1],"fn":{"kind":"quadratic","dim":2,"Q":[[0,0],[0,2]]}}}}]})");
  // x1^2 + 1/2 * 2 * (x1 + 1)^2
  EXPECT_EQ((*f)({1, 5}), ExtValue(5));
  FnPtr g = load(R"({"kind":"scale","dim":1,"alpha":2,"box":{"lo":[-1],"hi":[1]},
      "fn":{"kind":"negate","dim":1,"fn":{"kind":"table","dim":1,"entries":[{"x":[-2],"v":7},{"x":[2],"v":9}]}}})");
  EXPECT_EQ((*g)({1}), ExtValue(7));
  EXPECT_EQ((*g)({-1}), ExtValue(9));
  EXPECT_TRUE((*g)({0}).is_inf());
}

TEST(Document, RejectsMalformedInput) {
  const char* bad[] = {
      R"(not json)",
      R"([1,2])",
      R"({"dim":1,"Q":[[1]]})",
      R"({"kind":"bogus","dim":1})",
      R"({"kind":"quadratic","dim":0,"Q":[]})",
      R"({"kind":"quadratic","dim":1,"Q":[["1/0"]]})",
      R"({"kind":"quadratic","dim":1,"Q":[[1.5]]})",
      R"({"kind":"quadratic","dim":1,"Q":[[1]],"extra":1})",
      R"({"kind":"indicator","dim":2,"points":[[1]]})",
      R"({"kind":"indicator","dim":1,"points":[[1.5]]})",
      R"({"kind":"indicator","dim":1,"points":[[99999999999999999999]]})",
      R"({"kind":"permute","dim":2,"sigma":[1,1],"fn":{"kind":"quadratic","dim":2,"Q":[[1,0],[0,1]]}})",
      R"({"kind":"permute","dim":2,"sigma":[0,1],"fn":{"kind":"quadratic","dim":2,"Q":[[1,0],[0,1]]}})",
      R"({"kind":"translate","dim":2,"z":[1,0],"fn":{"kind":"quadratic","dim":1,"Q":[[1]]}})",
      R"({"kind":"sum","dim":1,"terms":[{"weight":-1,"fn":{"kind":"quadratic","dim":1,"Q":[[1]]}}]})",
      R"({"kind":"scale","dim":1,"alpha":0,"fn":{"kind":"quadratic","dim":1,"Q":[[1]]}})",
      R"({"kind":"linear_on_set","dim":1,"c":[1]})",
      R"({"kind":"quadratic","dim":1,"box":{"lo":[2],"hi":[1]},"Q":[[1]]})",
  };
  for (const char* t : bad) EXPECT_THROW(load(t), DocumentError) << t;
}

TEST(Document, ReportsRoundTripByteExactly) {
  Verdict v = Verdict::fail(Witness{{0, 0}, {3, -3}, ExtValue(0), ExtValue(2)}, 17);
  std::string text = report_text(verdict_to_json("dmc-ge2", Box::cube(2, -3, 3), v));
  EXPECT_EQ(report_text(parse_json(text)), text);
  EXPECT_NE(text.find("\"lhs\": \"0\""), std::string::npos);
  Json q = quad_report_to_json(QuadReport{});
  EXPECT_EQ(report_text(parse_json(report_text(q))), report_text(q));
}
