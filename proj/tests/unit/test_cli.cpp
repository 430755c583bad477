#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace dmckit;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const char* name) { return std::string(DMCKIT_SAMPLES_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("dmckit_cli_" + name);
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST(Cli, DecomposeD2) {
  Outcome r = invoke({"decompose", "--vector", "5,3,-3,-5", "--stage", "d2"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = parse_json(r.out);
  EXPECT_EQ(j["stage"], "d2");
  EXPECT_EQ(j["vectors"].size(), 5u);
  EXPECT_EQ(j["vectors"][0], Json::parse("[1,0,-1,-1]"));
}

TEST(Cli, ClassifyQuad) {
  Outcome r = invoke({"classify", "--class", "quad", "--fn", sample("quad_half.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = parse_json(r.out);
  EXPECT_EQ(j["lnat"], false);
  EXPECT_EQ(j["globally_dmc"], true);
  EXPECT_EQ(j["locally_dmc"], true);

  Outcome d = invoke({"classify", "--class", "quad", "--fn", sample("quad_diag_dominant.json")});
  Json k = parse_json(d.out);
  EXPECT_EQ(k["diag_dominant"], true);
  EXPECT_EQ(k["locally_dmc"], false);
}

TEST(Cli, ClassifyExitCodes) {
  Outcome yes = invoke({"classify", "--class", "dmc2", "--fn", sample("abs_sum.json")});
  EXPECT_EQ(yes.code, 0) << yes.err;
  EXPECT_EQ(parse_json(yes.out)["holds"], true);
  Outcome no = invoke({"classify", "--class", "dmc-ge2", "--fn", sample("abs_sum.json")});
  EXPECT_EQ(no.code, 1);
  Json j = parse_json(no.out);
  EXPECT_EQ(j["holds"], false);
  EXPECT_FALSE(j["witness"].is_null());
  Outcome boxed = invoke({"classify", "--class", "submodular", "--fn", sample("quad_half.json"), "--box", "-1..1,-1..1"});
  EXPECT_EQ(boxed.code, 1);
  EXPECT_EQ(parse_json(boxed.out)["box"], Json::parse(R"({"lo":[-1,-1],"hi":[1,1]})"));
}

TEST(Cli, MinimizeSd2) {
  Outcome r = invoke({"minimize", "--algo", "sd2", "--fn", sample("abs_sum.json"), "--start", "3,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = parse_json(r.out);
  EXPECT_EQ(j["value"], "0");
  EXPECT_EQ(j["iterations"], 2);  // (1,-1) and (2,-2) are both at distance 2
}

TEST(Cli, MinimizeScalingAndBrute) {
  Outcome s = invoke({"minimize", "--algo", "scaling", "--fn", sample("staircase_2_3.json"), "--start", "0,0"});
  ASSERT_EQ(s.code, 0) << s.err;
  Outcome b = invoke({"minimize", "--algo", "brute", "--fn", sample("staircase_2_3.json")});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(parse_json(s.out)["value"], parse_json(b.out)["value"]);
}

TEST(Cli, Envelope) {
  Outcome r = invoke({"envelope", "--fn", sample("abs_sum.json"), "--at", "3/2,-3/2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_json(r.out)["value"], "0");
}

TEST(Cli, SetCheck) {
  Outcome pair = invoke({"set-check", "--set", sample("pair_set.json")});
  EXPECT_EQ(pair.code, 0) << pair.err;
  Outcome anti = invoke({"set-check", "--set", sample("antidiagonal_set.json")});
  EXPECT_EQ(anti.code, 1);
  Json j = parse_json(anti.out);
  EXPECT_EQ(j["class"], "dmc-set");
  EXPECT_FALSE(j["witness"].is_null());
  Outcome scaled = invoke({"set-check", "--set", sample("pair_set.json"), "--scale", "2"});
  EXPECT_EQ(parse_json(scaled.out)["scale"], 2);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"classify", "--class", "nope", "--fn", sample("abs_sum.json")}).code, 2);
  EXPECT_EQ(invoke({"classify", "--class", "dmc2", "--fn", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(invoke({"classify", "--class", "quad", "--fn", sample("abs_sum.json")}).code, 2);
  EXPECT_EQ(invoke({"minimize", "--algo", "sd2", "--fn", sample("abs_sum.json")}).code, 2);
  EXPECT_EQ(invoke({"minimize", "--algo", "sd2", "--fn", sample("abs_sum.json"), "--start", "1,x"}).code, 2);
  EXPECT_EQ(invoke({"minimize", "--algo", "sd2", "--fn", sample("abs_sum.json"), "--start", "9,9"}).code, 2);
  EXPECT_EQ(invoke({"decompose", "--vector", "1,2", "--stage", "d9"}).code, 2);
  EXPECT_EQ(invoke({"envelope", "--fn", sample("abs_sum.json"), "--at", "1/0,1"}).code, 2);
  EXPECT_EQ(invoke({"classify", "--class", "dmc2", "--fn", sample("abs_sum.json"), "--box", "0..1"}).code, 2);
  EXPECT_EQ(invoke({"repro", "--example", "no-such-report"}).code, 2);

  std::string bad = write_temp("bad.json", R"({"kind":"table","dim":2,"entries":[],"extra":1})");
  Outcome r = invoke({"classify", "--class", "dmc2", "--fn", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error"), std::string::npos);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, JobsDoNotChangeOutput) {
  for (const char* cls : {"submodular", "dmc2", "dmc-ge2", "lnat", "intconv"}) {
    Outcome one = invoke({"--jobs", "1", "classify", "--class", cls, "--fn", sample("abs_sum.json")});
    Outcome four = invoke({"--jobs", "4", "classify", "--class", cls, "--fn", sample("abs_sum.json")});
    EXPECT_EQ(one.code, four.code) << cls;
    EXPECT_EQ(one.out, four.out) << cls;
  }
  Outcome a = invoke({"--jobs", "1", "set-check", "--set", sample("antidiagonal_set.json")});
  Outcome b = invoke({"--jobs", "4", "set-check", "--set", sample("antidiagonal_set.json")});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ReportsRoundTripByteForByte) {
  for (auto args : std::vector<std::vector<std::string>>{
           {"classify", "--class", "dmc-ge2", "--fn", sample("abs_sum.json")},
           {"minimize", "--algo", "sd2", "--fn", sample("staircase_2_3.json"), "--start", "0,0"},
           {"decompose", "--vector", "5,3,-3,-5", "--stage", "d1"},
           {"set-check", "--set", sample("antidiagonal_set.json")}}) {
    Outcome r = invoke(args);
    EXPECT_EQ(report_text(parse_json(r.out)), r.out) << args[0];
    EXPECT_EQ(invoke(args).out, r.out) << args[0];
  }
}

TEST(Cli, ReproList) {
  Outcome r = invoke({"repro", "--list"});
  ASSERT_EQ(r.code, 0);
  std::string want;
  for (const auto& [name, _] : repro::registry()) want += name + "\n";
  EXPECT_EQ(r.out, want);
}

TEST(Cli, ReproDetectsDrift) {
  auto dir = std::filesystem::temp_directory_path() / "dmckit_cli_repro";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "decompose.json") << "{}\n";
  Outcome r = invoke({"repro", "--example", "decompose", "--data-dir", dir.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("differs"), std::string::npos);
  EXPECT_EQ(invoke({"repro", "--example", "envelope", "--data-dir", dir.string()}).code, 2);  // no pinned file
}

class ReproExample : public ::testing::TestWithParam<std::string> {};

TEST_P(ReproExample, MatchesPinnedReport) {
  Outcome r = invoke({"repro", "--example", GetParam()});
  EXPECT_EQ(r.code, 0) << r.err;
}

INSTANTIATE_TEST_SUITE_P(Registry, ReproExample, ::testing::Values("quad-thresholds", "abs-sum", "sign-inversion", "diag-dominant",
                                                                   "decompose", "staircase-proximity", "staircase-descent",
                                                                   "envelope", "restricted-midpoint"),
                         [](const auto& info) {
                           std::string s = info.param;
                           std::replace(s.begin(), s.end(), '-', '_');
                           return s;
                         });
