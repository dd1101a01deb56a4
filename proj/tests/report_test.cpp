#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "steiner_ecc/report_io.hpp"

namespace steiner_ecc {
namespace {

TEST(Json, RationalCarriesExactAndDecimal) {
  const auto j = to_json(Rational(37, 7));
  EXPECT_EQ(j["exact"], "37/7");
  EXPECT_EQ(j["decimal"], "5.285714");
}

TEST(Json, ReportIsByteIdenticalAcrossRuns) {
  const auto a = to_json(verify(Theorem::Thm1_1, 7)).dump();
  const auto b = to_json(verify(Theorem::Thm1_1, 7)).dump();
  EXPECT_EQ(a, b);
  const auto parsed = nlohmann::json::parse(a);
  EXPECT_EQ(parsed["theorem"], "thm1_1");
  EXPECT_EQ(parsed["n"], 7);
  EXPECT_EQ(parsed["passed"], true);
  EXPECT_EQ(parsed["classes"].size(), 7u);
  for (const auto& c : parsed["classes"]) {
    EXPECT_EQ(c["extremal"]["exact"], c["claimed"]["exact"]);
    EXPECT_EQ(c["status"], "pass");
    for (const auto& w : c["argext"]) EXPECT_EQ(w["edges"].size(), 6u);
  }
}

TEST(Json, TransformOutcome) {
  const Tree t = fixtures::s222();
  const auto j = to_json(sigma_transform(t, find_sigma_sites(t).front()));
  EXPECT_EQ(j["kind"], "sigma");
  EXPECT_EQ(j["delta"]["exact"], "1/7");
  EXPECT_EQ(j["before"].size(), 6u);
  EXPECT_EQ(j["after"].size(), 6u);
}

TEST(Csv, HeaderAndQuotedKeys) {
  std::ostringstream out;
  write_csv(out, verify(Theorem::Thm1_1, 5));
  const std::string s = out.str();
  EXPECT_EQ(s.rfind("theorem,n,key,extremal,claimed,class_size,status\n", 0), 0u);
  EXPECT_NE(s.find("thm1_1,5,\"(4,1,1,1,1)\",14/5,14/5,1,pass"), std::string::npos) << s;
}

TEST(Text, SummaryLine) {
  std::ostringstream out;
  write_text(out, verify(Theorem::Cor3_2, 6));
  EXPECT_EQ(out.str().rfind("cor3_2 n=6: PASS", 0), 0u) << out.str();
}

}  // namespace
}  // namespace steiner_ecc
