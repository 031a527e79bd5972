#include <gtest/gtest.h>

#include <cmath>

#include "pnspace/report.hpp"

namespace {

using namespace pnspace;

TEST(AxiomResult, TracksWorstMarginAndFirstFailure) {
  AxiomResult a;
  a.record(true, 0.5);
  a.record(true, 0.25);
  EXPECT_TRUE(a.passed);
  EXPECT_EQ(a.worst_margin, 0.25);
  a.record(false, -1.0, nlohmann::json{{"trial", 2}});
  a.record(false, -2.0, nlohmann::json{{"trial", 3}});
  EXPECT_FALSE(a.passed);
  EXPECT_EQ(a.checks, 4);
  EXPECT_EQ(a.worst_margin, -2.0);
  EXPECT_EQ(a.counterexample.at("trial"), 2);
}

TEST(AxiomResult, NanSlackDoesNotPoisonMargin) {
  AxiomResult a;
  a.record(true, std::nan(""));
  EXPECT_TRUE(std::isinf(a.worst_margin));
  EXPECT_TRUE(to_json(a).at("worst_margin").is_null());
}

TEST(AxiomResult, WitnessBuiltOnlyOnFailure) {
  AxiomResult a;
  int built = 0;
  a.check(true, 1.0, [&] { ++built; return nlohmann::json(1); });
  EXPECT_EQ(built, 0);
  a.check(false, -1.0, [&] { ++built; return nlohmann::json(1); });
  EXPECT_EQ(built, 1);
}

TEST(AxiomReport, AxiomReferencesStayValid) {
  AxiomReport r;
  AxiomResult& first = r.axiom("a");
  for (int i = 0; i < 100; ++i) r.axiom("x" + std::to_string(i));
  first.record(false, -1.0);
  EXPECT_EQ(&r.axiom("a"), &first);
  EXPECT_FALSE(r.find("a")->passed);
  EXPECT_EQ(r.find("missing"), nullptr);
  EXPECT_FALSE(r.all_passed());
}

TEST(Json, ReportShapeAndFixedFormatting) {
  AxiomReport r;
  r.suite = "demo";
  r.trials = 3;
  r.axiom("only").record(true, 0.125);
  const nlohmann::json j = to_json(r);
  EXPECT_EQ(j.at("suite"), "demo");
  EXPECT_TRUE(j.at("all_passed").get<bool>());
  EXPECT_EQ(j.at("axioms").size(), 1u);
  EXPECT_EQ(fixed12(0.5), "0.500000000000");
  const std::string text = dump_fixed(nlohmann::json{{"v", 0.1}}, -1);
  EXPECT_NE(text.find("0.100000000000"), std::string::npos) << text;
}

}  // namespace
