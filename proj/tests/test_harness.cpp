#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace cyclo;
using cyclo::test::corpus;

namespace {

std::string md(const Report& r) {
  std::ostringstream os;
  write_report_md(os, r);
  return os.str();
}

}  // namespace

TEST(Harness, EverySuiteIdIsRegistered) {
  std::vector<std::string> ids = {"prop2.2", "prop2.4", "prop2.5", "prop2.6", "prop3.1", "thm3.2", "prop3.4",
                                  "lem4.3",  "thm4.4",  "thm4.6",  "cor4.7",  "prop5.1", "lem5.2", "prop5.5",
                                  "prop5.6", "lem6.1",  "prop6.2", "prop6.5", "prop7.2", "lem7.3", "thm7.5"};
  ASSERT_EQ(suites().size(), ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) EXPECT_EQ(suites()[i].id, ids[i]);
  EXPECT_EQ(find_suite("prop9.9"), nullptr);
}

TEST(Harness, UnknownSuiteRejected) {
  Lab lab(corpus().caps);
  EXPECT_THROW(run_verify(corpus(), lab, {"nope", ""}), ValidationError);
}

TEST(Harness, StarSuiteOnIdentity) {
  Lab lab(corpus().caps);
  Report r = run_verify(corpus(), lab, {"thm3.2", "idOnDualnum"});
  EXPECT_TRUE(r.ok());
  for (const auto& rec : r.records) EXPECT_EQ(rec.suite, "thm3.2");
}

TEST(Harness, CorruptedMeasuringFailsWithWitness) {
  // x -> 1 + x is not multiplicative on the dual numbers
  Measuring bad = *corpus().measuring("idOnDualnum");
  bad.name = "corrupted";
  SparseVec col = bad.phi[0].col(1);
  col.insert(col.begin(), {0, Rational(1)});
  bad.phi[0].set_col(1, col);
  EXPECT_FALSE(validate_measuring(bad).ok());
  Lab lab(corpus().caps);
  Report r;
  suite_star(lab, bad, r);
  ASSERT_FALSE(r.ok());
  bool witnessed = false;
  for (const auto& rec : r.records)
    if (rec.status == Status::Fail) witnessed = witnessed || rec.witness.find(" vs ") != std::string::npos;
  EXPECT_TRUE(witnessed);
}

TEST(Harness, ReportsIdenticalAcrossThreadCounts) {
  VerifyOptions opt{"all", "derivDualnum"};
  Lab l1(corpus().caps), l3(corpus().caps);
  std::string a = md(run_verify(corpus(), l1, opt, 1)), b = md(run_verify(corpus(), l3, opt, 3));
  EXPECT_EQ(a, b);
}

TEST(Harness, ComputeTables) {
  Lab lab(corpus().caps);
  auto hh = run_compute(corpus(), lab, {"hh", "dualnum", "", 4, 1});
  ASSERT_EQ(hh.size(), 1u);
  ASSERT_EQ(hh[0].rows.size(), 4u);
  EXPECT_EQ(hh[0].rows[3][1], "1");
  auto hc = run_compute(corpus(), lab, {"hc", "Q", "", 5, 1});
  ASSERT_EQ(hc[0].rows.size(), 4u);
  EXPECT_EQ(hc[0].rows[2][1], "1");
  auto withm = run_compute(corpus(), lab, {"hh", "dualnum", "derivDualnum", 3, 1});
  EXPECT_EQ(withm[0].header.size(), 4u);
  EXPECT_THROW(run_compute(corpus(), lab, {"hh", "Q", "derivDualnum", 3, 1}), ValidationError);
  EXPECT_THROW(run_compute(corpus(), lab, {"hh", "M2Q", "", 7, 1}), TruncationTooLarge);
}

TEST(Harness, CsvQuoting) {
  Report r;
  Recorder(r, "prop2.2", "a", "s").fail("c", "n=1", "entry (0,1): 1 vs 0");
  std::ostringstream os;
  write_report_csv(os, r);
  EXPECT_NE(os.str().find("\"entry (0,1): 1 vs 0\""), std::string::npos);
}
