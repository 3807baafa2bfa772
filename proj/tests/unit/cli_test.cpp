#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = lendens::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json invoke_json(std::vector<std::string> args) {
  args.push_back("--json");
  auto r = invoke(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, NumericalElementReport) {
  auto j = invoke_json({"ns", "6,9,20", "--element", "60"});
  EXPECT_EQ(j["command"], "ns");
  EXPECT_EQ(j["results"]["element"]["ld"], "4/7");
  EXPECT_EQ(j["results"]["element"]["length_set"], nlohmann::json({3, 7, 8, 9, 10}));
  EXPECT_EQ(j["flags"]["complete"], true);
  EXPECT_FALSE(j.contains("timing"));
}

TEST(Cli, HumanOutput) {
  auto r = invoke({"ns", "6,9,20", "--element", "60"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("element.ld: 4/7"), std::string::npos);
  EXPECT_NE(r.out.find("element.length_set: {3,7,8,9,10}"), std::string::npos);
}

TEST(Cli, SearchAndBetti) {
  auto s = invoke_json({"search", "ns", "6,9,20", "--bound", "400"});
  EXPECT_EQ(s["results"]["minimum_ld"], "4/7");
  EXPECT_EQ(s["results"]["witness"], "60");
  EXPECT_EQ(s["results"]["delta_scan"], nlohmann::json({1, 2, 3, 4}));
  auto b = invoke_json({"betti", "ns", "20,28,42,73", "--bound", "300"});
  ASSERT_EQ(b["results"]["betti"].size(), 3u);
  EXPECT_EQ(b["results"]["betti"][1]["element"], "140");
  EXPECT_EQ(b["results"]["attained_at_betti"], false);
}

TEST(Cli, BlockRestrict) {
  auto j = invoke_json({"block", "Z5", "--restrict", "(1);(4)", "--element", "(1)^5(4)^5"});
  EXPECT_EQ(j["results"]["atom_count"], 3);
  EXPECT_EQ(j["results"]["element"]["length_set"], nlohmann::json({2, 5}));
}

TEST(Cli, CatenaryAndTame) {
  auto j = invoke_json({"catenary", "ns", "6,9,20", "--element", "60", "--tame-wrt", "(0,0,1)"});
  EXPECT_EQ(j["results"]["catenary_degree"], 7);
  EXPECT_EQ(j["results"]["tame_degree"], 10);
}

TEST(Cli, NoasymSeries) {
  auto j = invoke_json({"puiseux", "--noasym", "0", "--n", "99,100"});
  EXPECT_EQ(j["results"]["series"][0]["ld"], "1/1");
  EXPECT_EQ(j["results"]["series"][1]["ld"], "101/701");
}

TEST(Cli, MabcAndChain) {
  auto m = invoke_json({"mabc", "1,3,1/2,4", "--i", "4", "--t", "1"});
  EXPECT_EQ(m["results"]["power"]["length_set"], nlohmann::json({4, 5, 6, 7, 8, 12}));
  EXPECT_EQ(m["results"]["power"]["elasticity"], "3/1");
  auto c = invoke_json({"chain", "4"});
  EXPECT_EQ(c["results"]["element"]["length_set"], nlohmann::json({3, 4, 6, 8}));
}

TEST(Cli, DirectSumSpec) {
  auto j = invoke_json({"search", "sum", "ns:4,7|ns:4,7", "--bound", "60"});
  EXPECT_EQ(j["results"]["minimum_ld"], "1/3");
}

TEST(Cli, ErrorsUseExitCodeTwo) {
  EXPECT_EQ(invoke({"ns", "4,6"}).code, 2);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({"ns", "6,9,20", "--element", "43"}).code, 2);
  auto r = invoke({"affine", "(1,0);(1)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("DimensionMismatch"), std::string::npos) << r.err;
}

TEST(Cli, OutputIndependentOfThreads) {
  auto one = invoke({"search", "block", "Z6", "--json", "--threads", "1"});
  auto four = invoke({"search", "block", "Z6", "--json", "--threads", "4"});
  ASSERT_EQ(one.code, 0);
  auto a = nlohmann::json::parse(one.out), b = nlohmann::json::parse(four.out);
  a.erase("argv");
  b.erase("argv");
  EXPECT_EQ(a, b);
  EXPECT_EQ(invoke({"search", "block", "Z6", "--json"}).out, invoke({"search", "block", "Z6", "--json"}).out);
}
