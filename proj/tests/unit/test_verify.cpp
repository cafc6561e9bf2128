#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "charsum/char_sums.hpp"
#include "charsum/format.hpp"
#include "charsum/grid.hpp"
#include "charsum/verify.hpp"
#include "json.hpp"

using namespace charsum;

TEST(Format, Reals) {
  EXPECT_EQ(format_real(6.0), "6.0");
  EXPECT_EQ(format_real(0.1 + 0.2), "0.3");
  EXPECT_EQ(format_real(1e20), "1e+20");
  EXPECT_EQ(format_real(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_real(2.0 / 3.0), "0.666666666667");
}

TEST(Format, CsvField) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
}

TEST(Grid, Parse) {
  const Grid g = Grid::parse("# comment\nq = 5, 7..11:2, 20..22  # trailing\nr=2\nq = 100\n\n");
  EXPECT_EQ(g.get("q"), (std::vector<i64>{5, 7, 9, 11, 20, 21, 22, 100}));
  EXPECT_EQ(g.get("r"), (std::vector<i64>{2}));
  EXPECT_TRUE(g.get("V").empty());
  EXPECT_FALSE(g.has("V"));
  EXPECT_TRUE(Grid::parse("").empty());
  EXPECT_TRUE(Grid::parse("q = 5..4").get("q").empty());
}

TEST(Grid, Errors) {
  EXPECT_THROW(Grid::parse("q 5"), std::invalid_argument);
  EXPECT_THROW(Grid::parse("= 5"), std::invalid_argument);
  EXPECT_THROW(Grid::parse("q = 5x"), std::invalid_argument);
  EXPECT_THROW(Grid::parse("q = 1..9:0"), std::invalid_argument);
  EXPECT_THROW(Grid::load("/nonexistent/grid"), std::invalid_argument);
}

TEST(Grid, RepositoryGridsLoad) {
  for (const auto& id : scan_ids()) {
    const Grid g = Grid::load(std::string(CHARSUM_SOURCE_DIR) + "/grids/" + id + ".grid");
    EXPECT_FALSE(g.get("q").empty()) << id;
  }
}

TEST(BoundReport, Formats) {
  const auto rep = BoundReport::make("demo", {{"q", "5"}, {"chi", "15:1,2"}}, 3.0, 4.0, Verdict::ExactPass);
  EXPECT_DOUBLE_EQ(rep.ratio, 0.75);
  EXPECT_EQ(rep.params_text(), "q=5;chi=15:1,2");
  EXPECT_EQ(BoundReport::csv_header(), "statement,params,lhs,rhs,ratio,verdict");
  EXPECT_EQ(rep.csv_row(), "demo,\"q=5;chi=15:1,2\",3.0,4.0,0.75,exact-pass");
  EXPECT_EQ(rep.json(),
            R"({"statement":"demo","params":{"q":"5","chi":"15:1,2"},"lhs":3.0,"rhs":4.0,"ratio":0.75,"verdict":"exact-pass"})");
  const auto parsed = nlohmann::json::parse(reports_json({rep, rep}));
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(parsed[1]["verdict"], "exact-pass");
  EXPECT_EQ(reports_csv({rep}), BoundReport::csv_header() + "\n" + rep.csv_row() + "\n");
  EXPECT_EQ(reports_json({}), "[]\n");
}

TEST(BoundReport, RatioEdgeCases) {
  EXPECT_EQ(BoundReport::make("x", {}, 0.0, 0.0, Verdict::ReportOnly).ratio, 0.0);
  EXPECT_TRUE(std::isinf(BoundReport::make("x", {}, 1.0, 0.0, Verdict::ReportOnly).ratio));
  EXPECT_EQ(to_string(Verdict::ExactFail), "exact-fail");
  EXPECT_EQ(to_string(Verdict::ReportOnly), "report-only");
}

TEST(Rhs, Formulas) {
  // Prime q: q1 = q, s = c = 1.
  const double q = 101, V = 3;
  EXPECT_DOUBLE_EQ(rhs_main1(101, 3, 2), q * V * V + std::sqrt(q) * std::pow(V, 2.5) + std::sqrt(q) * std::pow(V, 4));
  EXPECT_DOUBLE_EQ(rhs_weil_moment(101, 3, 2), q * V * V + std::sqrt(q) * std::pow(V, 4));
  EXPECT_DOUBLE_EQ(rhs_cor1(101, 3, 2), q * V * V + std::pow(q, 0.75) * std::pow(V, 2.5) + std::sqrt(q) * std::pow(V, 4));
  // Cube-full q = 2^5: c = 32, s = 1.
  EXPECT_DOUBLE_EQ(rhs_main1(32, 1, 2), 32 + std::sqrt(32.0) * std::sqrt(32.0) + std::sqrt(32.0) * std::pow(32.0, 0.5 - 1.0 / 32));
  EXPECT_DOUBLE_EQ(rhs_cor11(16, 2, 2), 16.0 / 2.0 + 4.0);
  EXPECT_DOUBLE_EQ(rhs_burgess(10000, 16, 2), 4.0 * std::pow(10000.0, 3.0 / 16.0));
  EXPECT_DOUBLE_EQ(rhs_charsumest(101, 16, 2), rhs_burgess(101, 16, 2));  // c = 1
  EXPECT_THROW(rhs_main1(101, 3, 1), std::domain_error);
  EXPECT_THROW(rhs_cor1(101, 3, 1), std::domain_error);
  EXPECT_THROW(rhs_cor11(101, 3, 1), std::domain_error);
}

TEST(Lemma1, SquarefreeClosedForms) {
  // V = 1: only t_j = s_j = 1; each of the 2r-1 K-terms is (3^{2r})^{1/2r} = 3.
  EXPECT_NEAR(lemma1_rhs(30, 1, 2), 30 + std::sqrt(30.0) * 27, 1e-9);
  // q = 6, V = 2: the prime 2 sits in no slot or in one of three.
  const double sum = 125 + 3 * 75 * std::sqrt(2.0);
  EXPECT_NEAR(lemma1_rhs(6, 2, 2), 24 + std::sqrt(6.0) * 2 * sum, 1e-9);
}

TEST(Lemma1, ReportAndErrors) {
  const BoundReport rep = verify_lemma1_rhs(49, 3, 2);
  EXPECT_EQ(rep.statement, "lemma1");
  EXPECT_EQ(rep.verdict, Verdict::ReportOnly);
  EXPECT_NE(rep.params_text().find("divisor_rule=tjsj<=V"), std::string::npos);
  double best = 0;
  for (const auto& chi : enumerate_characters(49, true)) best = std::max(best, moment(chi, 3, 2).value);
  EXPECT_DOUBLE_EQ(rep.lhs, best);
  EXPECT_LE(rep.lhs, rep.rhs);
  EXPECT_THROW(lemma1_rhs(30, 31, 2), std::domain_error);
  try {
    lemma1_rhs(2ULL * 3 * 5 * 7 * 11 * 13 * 17 * 19 * 23, 10, 3);
    FAIL() << "expected a budget refusal";
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("divisor combinations"), std::string::npos);
  }
}

TEST(PrimePowerLemmas, SmallCases) {
  for (const auto& rep : verify_prime_power_lemmas(3, 1, 1, 0, 3)) EXPECT_EQ(rep.verdict, Verdict::ExactPass) << rep.csv_row();
  for (const auto& rep : verify_prime_power_lemmas(2, 1, 1, 0, 3)) EXPECT_EQ(rep.verdict, Verdict::ExactPass) << rep.csv_row();
  EXPECT_THROW(verify_prime_power_lemma(PrimePowerLemma::EvenPower, 27, 1, 0, 1), std::domain_error);
  EXPECT_THROW(verify_prime_power_lemma(PrimePowerLemma::OddPower, 8, 1, 0, 1), std::domain_error);
  EXPECT_THROW(verify_prime_power_lemma(PrimePowerLemma::TwoOddPower, 2, 1, 0, 1), std::domain_error);
  EXPECT_THROW(verify_prime_power_lemma(PrimePowerLemma::EvenPower, 36, 1, 0, 1), std::domain_error);
}

TEST(SquarefreeLemma, SmallCase) {
  const auto reps = verify_squarefree_lemma(15, 1, 3);
  EXPECT_FALSE(reps.empty());
  for (const auto& rep : reps) EXPECT_EQ(rep.verdict, Verdict::ExactPass);
  EXPECT_THROW(verify_squarefree_lemma(12, 1, 3), std::domain_error);
}

TEST(Suites, FastSuitesPass) {
  for (const char* id : {"lemma-nmult", "lemma4", "eq43", "adjugate", "res-gcd"}) {
    const SuiteResult r = run_suite(id);
    EXPECT_TRUE(r.passed()) << r.summary();
    EXPECT_GT(r.instances, 0u);
    EXPECT_EQ(r.summary().rfind(std::string(id) + ": ", 0), 0u);
  }
  EXPECT_THROW(run_suite("nope"), std::invalid_argument);
}

TEST(Suites, SeedReproducible) {
  EXPECT_EQ(reports_csv(run_suite("kmitm", 4).reports), reports_csv(run_suite("kmitm", 4).reports));
}

TEST(Scans, EmptyGridAndUnknownId) {
  const ScanResult r = scan_theorem("theorem2", Grid::parse(""));
  EXPECT_TRUE(r.reports.empty());
  EXPECT_EQ(r.summary(), "theorem2 points=0\nsanity checks=0 failures=0\n");
  EXPECT_THROW(scan_theorem("theorem99", Grid::parse("")), std::invalid_argument);
}

TEST(Scans, SmallGridSanity) {
  const Grid g = Grid::parse("q = 9, 16\nr = 2\nV = 1..3\n");
  const ScanResult r = scan_theorem("theorem2", g);
  EXPECT_GT(r.sanity_checks, 0u);
  EXPECT_EQ(r.sanity_failures, 0u);
  for (const auto& rep : r.reports) EXPECT_EQ(rep.verdict, Verdict::ReportOnly);
  const ScanResult k = scan_theorem("corollary11", Grid::parse("q = 35\nr = 2\nV = 1..3\n"));
  EXPECT_EQ(k.sanity_failures, 0u);
  EXPECT_EQ(k.reports.size(), 3u);
}

TEST(Scans, Lemma9Readings) {
  // q = 256: k = 2 gives V <= 256^{1/8} = 2; k = 3 gives V <= 256^{1/24} = 1.
  const ScanResult r = scan_theorem("lemma9", Grid::parse("q = 256\nr = 2\n"));
  ASSERT_EQ(r.reports.size(), 3u);
  EXPECT_EQ(r.reports[0].params_text(), "q=256;r=2;reading=k=r;V=1");
  EXPECT_EQ(r.reports[2].params_text(), "q=256;r=2;reading=k=r+1;V=1");
}
