#include <gtest/gtest.h>

#include "lieder/campaign.hpp"
#include "lieder/error.hpp"

namespace lieder {
namespace {

std::string config_message(const CampaignConfig& c) {
  try {
    validate(c);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConfigError);
    return e.what();
  }
  return "";
}

CampaignConfig small(std::string mode) {
  CampaignConfig c;
  c.mode = std::move(mode);
  c.n_min = 3;
  c.n_max = 3;
  c.trials = 2;
  c.seed = 42;
  return c;
}

TEST(ParseNRange, SingleAndRange) {
  EXPECT_EQ(parse_n_range("5"), (std::pair<std::size_t, std::size_t>{5, 5}));
  EXPECT_EQ(parse_n_range("3..6"), (std::pair<std::size_t, std::size_t>{3, 6}));
  EXPECT_THROW(parse_n_range("three"), Error);
  EXPECT_THROW(parse_n_range("3..x"), Error);
  EXPECT_THROW(parse_n_range(""), Error);
}

TEST(Validate, FieldPreciseMessages) {
  auto c = small("twolocal");
  c.n_min = c.n_max = 2;
  const std::string msg = config_message(c);
  EXPECT_NE(msg.find("n: "), std::string::npos) << msg;
  EXPECT_NE(msg.find("n >= 3"), std::string::npos) << msg;

  c = small("bogus");
  EXPECT_NE(config_message(c).find("mode: "), std::string::npos);
  c = small("twolocal");
  c.ring = "reals";
  EXPECT_NE(config_message(c).find("ring: "), std::string::npos);
  c = small("local");
  c.ring = "poly";
  EXPECT_NE(config_message(c).find("ring: "), std::string::npos);
  c = small("twolocal");
  c.ring = "fnring";
  c.omega = 0;
  EXPECT_NE(config_message(c).find("omega: "), std::string::npos);
  c = small("symcheck");
  c.lemma = "7.7";
  EXPECT_NE(config_message(c).find("lemma: "), std::string::npos);
  c = small("twolocal");
  c.n_min = 5;
  c.n_max = 4;
  EXPECT_NE(config_message(c).find("n: "), std::string::npos);
  c = small("twolocal");
  c.trials = 0;
  EXPECT_NE(config_message(c).find("trials: "), std::string::npos);
}

TEST(Validate, AxiomsAllowSmallN) {
  auto c = small("axioms");
  c.n_min = c.n_max = 1;
  EXPECT_EQ(config_message(c), "");
}

TEST(RunCampaign, TwolocalGaussPasses) {
  const auto report = run_campaign(small("twolocal"));
  EXPECT_TRUE(report.all_passed());
  EXPECT_GT(report.records().size(), 0U);
  for (const auto& r : report.records()) EXPECT_FALSE(r.anchor.empty()) << r.name;
}

TEST(RunCampaign, TwolocalFunctionRingAndSweep) {
  auto c = small("twolocal");
  c.ring = "fnring";
  c.omega = 2;
  c.p_sweep = true;
  const auto report = run_campaign(c);
  EXPECT_TRUE(report.all_passed());
  bool projection = false;
  for (const auto& r : report.records()) projection = projection || r.anchor == "theorem 2.7";
  EXPECT_TRUE(projection);
}

TEST(RunCampaign, TwolocalPolynomialRing) {
  auto c = small("twolocal");
  c.ring = "poly";
  EXPECT_TRUE(run_campaign(c).all_passed());
}

TEST(RunCampaign, LocalPasses) {
  auto c = small("local");
  c.n_max = 4;
  EXPECT_TRUE(run_campaign(c).all_passed());
  c.ring = "fnring";
  c.omega = 3;
  EXPECT_TRUE(run_campaign(c).all_passed());
}

TEST(RunCampaign, AxiomsAllRings) {
  for (const char* ring : {"gauss", "fnring", "poly"}) {
    auto c = small("axioms");
    c.ring = ring;
    c.trials = 30;
    EXPECT_TRUE(run_campaign(c).all_passed()) << ring;
  }
}

TEST(RunCampaign, SymcheckSingleLemma) {
  auto c = small("symcheck");
  c.lemma = "3.6";
  c.n_min = c.n_max = 4;
  const auto report = run_campaign(c);
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.records().size(), 6U);
  EXPECT_EQ(report.records()[0].name.rfind("symcheck/n=4/", 0), 0U);
}

TEST(RunCampaign, ReplayIsByteIdenticalAndWorkerIndependent) {
  auto c = small("all");
  c.trials = 3;
  c.lemma = "3.41";
  const auto a = run_campaign(c).to_json(false).dump();
  const auto b = run_campaign(c).to_json(false).dump();
  EXPECT_EQ(a, b);
  c.workers = 3;
  EXPECT_EQ(run_campaign(c).to_json(false).dump(), a);
}

TEST(RunCampaign, ReportSchema) {
  const auto j = run_campaign(small("twolocal")).to_json();
  EXPECT_EQ(j.at("schema_version"), VerificationReport::kSchemaVersion);
  EXPECT_EQ(j.at("replay_seed"), 42);
  EXPECT_EQ(j.at("config").at("mode"), "twolocal");
  EXPECT_TRUE(j.contains("duration_ms"));
  EXPECT_TRUE(j.at("header").contains("continuity"));
  EXPECT_EQ(j.at("summary").at("failed"), 0);
}

TEST(SummaryTable, CountsPerAnchor) {
  VerificationReport r;
  r.add("a", "x", true);
  r.add("b", "x", false);
  r.add("c", "y", true);
  const std::string t = summary_table(r);
  EXPECT_NE(t.find("x"), std::string::npos);
  EXPECT_NE(t.find("total"), std::string::npos);
  EXPECT_EQ(r.passed(), 2U);
  EXPECT_EQ(r.failures().size(), 1U);
}

}  // namespace
}  // namespace lieder
