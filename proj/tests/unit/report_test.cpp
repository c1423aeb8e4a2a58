#include "choquet/report_json.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace choquet {
namespace {

KorovkinReport TwoRowReport() {
  KorovkinReport r;
  r.family = Family::kBernstein;
  r.distortion = "moebius";
  r.function = "t";
  r.c = 2.0;
  KorovkinRow ok;
  ok.n = 4;
  ok.x = 0.5;
  ok.fx = 0.5;
  ok.knfx = 0.55;
  ok.abs_error = 0.05;
  ok.bound = 0.1;
  ok.holds = true;
  KorovkinRow bad = ok;
  bad.x = 0.25;
  bad.abs_error = 0.2;
  bad.holds = false;
  r.rows = {ok, bad};
  return r;
}

TEST(FormatRealTest, ShortestRoundTrip) {
  EXPECT_EQ(FormatReal(0.1), "0.1");
  EXPECT_EQ(FormatReal(-2.0), "-2");
  EXPECT_EQ(std::stod(FormatReal(1.0 / 3.0)), 1.0 / 3.0);
  EXPECT_EQ(FormatReal(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(FormatReal(std::nan("")), "nan");
}

TEST(KorovkinCsvTest, HeaderAndRows) {
  std::ostringstream out;
  WriteKorovkinCsv(out, TwoRowReport());
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "family,distortion,c,n,x,fx,knfx,abs_error,delta,bound,holds");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("bernstein,moebius,2,4,0.5,", 0), 0u) << line;
  EXPECT_EQ(line.substr(line.size() - 4), "true");
  std::getline(in, line);
  EXPECT_EQ(line.substr(line.size() - 5), "false");
  EXPECT_FALSE(std::getline(in, line));
}

TEST(KorovkinCsvTest, NoHeader) {
  std::ostringstream out;
  WriteKorovkinCsv(out, TwoRowReport(), false);
  EXPECT_EQ(out.str().rfind("bernstein", 0), 0u);
}

TEST(KorovkinJsonTest, SummaryCounts) {
  const auto j = KorovkinSummary(TwoRowReport());
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["totals"], 2);
  EXPECT_EQ(j["held"], 1);
  EXPECT_EQ(j["violations"], 1);
  EXPECT_DOUBLE_EQ(j["max_slack_utilization"].get<double>(), 2.0);
  EXPECT_FALSE(j.contains("rows"));
  EXPECT_EQ(ToJson(TwoRowReport())["rows"].size(), 2u);
}

TEST(PropertyJsonTest, FailureWitness) {
  PropertyReport r;
  r.subject = "moebius";
  r.seed = 42;
  r.trials = 3;
  CheckOutcome c;
  c.name = "lemma2_comonotone";
  c.trials = 3;
  c.passed = 2;
  c.failed = 1;
  c.first_failure = Witness{1, 0.3, 0.1, {1.0}, {2.0}};
  r.checks.push_back(c);
  const auto j = ToJson(r);
  EXPECT_EQ(j["failures"], 1);
  EXPECT_EQ(j["checks"][0]["check"], "lemma2_comonotone");
  EXPECT_EQ(j["checks"][0]["first_failure"]["trial"], 1);
}

TEST(CEstimateJsonTest, Unbounded) {
  CEstimate c;
  c.bounded = false;
  c.c = std::numeric_limits<double>::infinity();
  const auto j = ToJson(c);
  EXPECT_FALSE(j["bounded"].get<bool>());
  EXPECT_EQ(j["c"], "inf");
}

TEST(ConvergenceCsvTest, QuotesFunctionText) {
  ConvergenceTable t;
  t.family = Family::kSzasz;
  t.distortion = "identity";
  t.function = "min(t, 1)";
  t.rows = {{2, 0.5, 0.1}};
  std::ostringstream out;
  WriteConvergenceCsv(out, t, false);
  EXPECT_EQ(out.str(), "szasz,identity,\"min(t, 1)\",2,0.5,0.1\n");
}

}  // namespace
}  // namespace choquet
