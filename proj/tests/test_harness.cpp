#include <gtest/gtest.h>

#include <sstream>

#include "sigmaperm/catalog.hpp"
#include "sigmaperm/errors.hpp"
#include "sigmaperm/harness.hpp"
#include "sigmaperm/report.hpp"
#include "support.hpp"

using namespace sigmaperm;

namespace {

std::vector<CatalogEntry> just(const char* spec) { return {make_entry(spec)}; }

SuiteOptions options_for(std::vector<ClaimId> claims) {
  SuiteOptions o;
  o.claims = std::move(claims);
  o.record_timing = false;
  return o;
}

}  // namespace

TEST(ClaimIdTest, ParsesLists) {
  EXPECT_EQ(all_claims(), parse_claim_list("all"));
  EXPECT_EQ(18u, all_claims().size());
  EXPECT_EQ((std::vector<ClaimId>{ClaimId::T1, ClaimId::CONJ1}), parse_claim_list("T1, CONJ1"));
  EXPECT_EQ((std::vector<ClaimId>{ClaimId::T4}), parse_claim_list("T4,T4"));
  EXPECT_THROW(parse_claim_list(""), ParseError);
  EXPECT_THROW(parse_claim_list("T9"), ParseError);
  for (auto c : all_claims()) EXPECT_EQ(c, parse_claim(to_string(c)));
  EXPECT_FALSE(is_theorem_claim(ClaimId::CONJ1));
  EXPECT_TRUE(is_theorem_claim(ClaimId::C7));
}

TEST(VerifyClaimTest, SymmetricFourSingletonsT2) {
  const auto& l = support::lattice("S4");
  const auto sigma = canonicalize_sigma(parse_sigma_spec("s1"), l.group());
  const auto report = verify_claim("S4", l, sigma, ClaimId::T2);
  EXPECT_EQ(Status::Pass, report.status);
  EXPECT_TRUE(report.witnesses.empty());
  EXPECT_EQ("2|3", report.sigma);
  EXPECT_EQ("S4", report.group_id);
}

TEST(VerifyClaimTest, AlternatingFiveT2) {
  const auto& l = support::lattice("A5");
  const auto sigma = canonicalize_sigma(parse_sigma_spec("2,5|3"), l.group());
  EXPECT_EQ(Status::Pass, verify_claim("A5", l, sigma, ClaimId::T2).status);
  // C2 needs Hall subgroups for every block; A5 has no subgroup of order 20.
  EXPECT_EQ(Status::Inapplicable, verify_claim("A5", l, sigma, ClaimId::C2).status);
  EXPECT_EQ(Status::Inapplicable, verify_claim("A5", l, sigma, ClaimId::C1).status);
}

TEST(VerifyClaimTest, TrivialGroupIsVacuous) {
  const auto& l = support::lattice("C1");
  const auto sigma = canonicalize_sigma(parse_sigma_spec("s1"), l.group());
  for (auto claim : all_claims()) {
    EXPECT_NE(Status::Fail, verify_claim("C1", l, sigma, claim).status) << to_string(claim);
  }
}

TEST(VerifyClaimTest, SingletonCorollariesApplyOnlyToSingletons) {
  const auto& l = support::lattice("S4");
  const auto single = canonicalize_sigma(parse_sigma_spec("2,3"), l.group());
  for (auto claim : {ClaimId::C1, ClaimId::C4, ClaimId::C5, ClaimId::C7}) {
    EXPECT_EQ(Status::Inapplicable, verify_claim("S4", l, single, claim).status);
  }
  const auto s1 = canonicalize_sigma(parse_sigma_spec("s1"), l.group());
  for (auto claim : {ClaimId::C1, ClaimId::C4, ClaimId::C5, ClaimId::C7}) {
    EXPECT_EQ(Status::Pass, verify_claim("S4", l, s1, claim).status);
  }
}

TEST(VerifyClaimTest, ReportInvariants) {
  const auto result = run_suite(build_catalog(24), 24, options_for(all_claims()));
  for (const auto& r : result.reports) {
    if (r.status == Status::Fail) {
      EXPECT_FALSE(r.witnesses.empty());
    } else {
      EXPECT_TRUE(r.witnesses.empty());
    }
  }
  EXPECT_EQ(0u, result.summary.failed);
  EXPECT_EQ(0u, result.summary.findings);
  EXPECT_EQ(kExitOk, result.summary.exit_code);
}

TEST(RunSuiteTest, SymmetricThreeAllClaims) {
  const auto result = run_suite(just("S3"), 6, options_for(all_claims()));
  EXPECT_EQ(1u, result.summary.groups);
  EXPECT_EQ(2 * all_claims().size(), result.reports.size());
  for (const auto& r : result.reports) EXPECT_NE(Status::Fail, r.status) << to_string(r.claim);
  EXPECT_EQ(kExitOk, result.summary.exit_code);
}

TEST(RunSuiteTest, SublatticeClaimUpToSixty) {
  const auto result = run_suite(build_catalog(60), 60, options_for({ClaimId::T4}));
  EXPECT_EQ(result.summary.reports, result.summary.passed);
  EXPECT_GT(result.summary.reports, 100u);
}

TEST(RunSuiteTest, EmptyFilterAndCatalog) {
  EXPECT_THROW(run_suite(just("S3"), 6, options_for({})), InvalidArgument);
  EXPECT_TRUE(check_conjecture1({}, 60).empty());
  const auto result = run_suite({}, 60, options_for({ClaimId::T1}));
  EXPECT_EQ(0u, result.summary.reports);
}

TEST(RunSuiteTest, MaxOrderFilters) {
  const auto catalog = build_catalog(24);
  const auto result = run_suite(catalog, 6, options_for({ClaimId::T1}));
  for (const auto& r : result.reports) EXPECT_LE(make_entry(r.group_id).group->order(), 6u);
}

TEST(RunSuiteTest, FixedSigma) {
  SuiteOptions o = options_for({ClaimId::T1});
  o.sigma = parse_sigma_spec("s1");
  const auto result = run_suite(just("A5"), 60, o);
  ASSERT_EQ(1u, result.reports.size());
  EXPECT_EQ("2|3|5", result.reports[0].sigma);
}

TEST(ConjectureTest, SymmetricThreeGivesTwoPassingReports) {
  const auto reports = check_conjecture1(just("S3"), 6);
  ASSERT_EQ(2u, reports.size());
  for (const auto& r : reports) EXPECT_EQ(Status::Pass, r.status);
}

TEST(ConjectureTest, NoFindingsUpToTwentyFour) {
  for (const auto& r : check_conjecture1(build_catalog(24), 24)) {
    EXPECT_EQ(Status::Pass, r.status) << r.group_id << " " << r.sigma;
  }
}

TEST(DeterminismTest, RunsAreIdenticalAcrossThreadCounts) {
  const auto catalog = build_catalog(30);
  SuiteOptions serial = options_for(all_claims());
  SuiteOptions parallel = serial;
  parallel.jobs = 4;
  std::ostringstream a, b, c;
  write_reports(a, run_suite(catalog, 30, serial).reports, true);
  write_reports(b, run_suite(catalog, 30, parallel).reports, true);
  write_reports(c, run_suite(catalog, 30, serial).reports, true);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str(), c.str());
}

TEST(DeterminismTest, SingleClaimEqualsSliceOfFullRun) {
  const auto catalog = build_catalog(24);
  const auto full = run_suite(catalog, 24, options_for(all_claims()));
  const auto alone = run_suite(catalog, 24, options_for({ClaimId::T2}));
  std::vector<VerificationReport> slice;
  for (const auto& r : full.reports) {
    if (r.claim == ClaimId::T2) slice.push_back(r);
  }
  EXPECT_EQ(slice, alone.reports);
}

TEST(ReportTest, JsonRoundTrip) {
  VerificationReport r;
  r.group_id = "S4";
  r.sigma = "2|3";
  r.claim = ClaimId::CONJ1;
  r.status = Status::Fail;
  r.timing_ms = 1.5;
  r.witnesses.push_back(Witness{"<(1 2)> order 2", "2", "does not permute", {"()", "(1 2)"}});
  r.witnesses.push_back(Witness{"<()> order 1", "", "x", {}});
  const std::string line = to_json_line(r);
  EXPECT_EQ(std::string::npos, line.find('\n'));
  EXPECT_EQ(r, parse_report_line(line));

  SuiteSummary s;
  s.groups = 3;
  s.reports = 9;
  s.passed = 8;
  s.findings = 1;
  s.exit_code = kExitFinding;
  const SuiteSummary back = parse_summary_line(to_json_line(s));
  EXPECT_EQ(s.reports, back.reports);
  EXPECT_EQ(s.findings, back.findings);
  EXPECT_EQ(s.exit_code, back.exit_code);

  EXPECT_THROW(parse_report_line("{"), ParseError);
  EXPECT_THROW(parse_report_line("{\"group_id\": \"S4\"}"), ParseError);
  EXPECT_THROW(parse_report_line("[]"), ParseError);
}

TEST(ReportTest, TextAndJsonAgree) {
  const auto result = run_suite(just("S4"), 24, options_for({ClaimId::T1, ClaimId::T4}));
  for (const auto& r : result.reports) {
    const auto text = to_text(r);
    EXPECT_NE(std::string::npos, text.find(to_string(r.status)));
    EXPECT_EQ(r.status, parse_report_line(to_json_line(r)).status);
  }
  EXPECT_NE(std::string::npos, to_text(result.summary).find("exit 0"));
}
