#include <gtest/gtest.h>

#include "support.hpp"

using namespace cyclo;
using cyclo::test::corpus;
using cyclo::test::dims_of;

TEST(Cyclic, CyclicOperatorOnTwoLetters) {
  auto a = corpus().algebra("dualnum");
  CyclicModule cm(a, 2);
  // t_1(a0, a1) = -(a1, a0)
  Index w = encode({0, 1}, 2), v = encode({1, 0}, 2);
  EXPECT_EQ(cm.t(1).at(v, w), Rational(-1));
}

TEST(Cyclic, HochschildOfDualNumbers) {
  Lab lab(corpus().caps);
  auto a = corpus().algebra("dualnum");
  EXPECT_EQ(dims_of(*lab.hh(a, 4)), (std::vector<std::size_t>{2, 1, 1, 1}));
}

TEST(Cyclic, DifferentialIdentities) {
  for (const auto& a : corpus().algebras) {
    CyclicModule cm(a, 3);
    EXPECT_EQ(cm.hochschild().square_defect(), -1) << a->name;
    for (std::size_t n = 0; n + 1 < 3; ++n) EXPECT_TRUE((cm.connes_B(n + 1) * cm.connes_B(n)).is_zero()) << a->name;
    for (std::size_t n = 1; n < 3; ++n)
      EXPECT_TRUE((cm.b(n + 1) * cm.connes_B(n) + cm.connes_B(n - 1) * cm.b(n)).is_zero()) << a->name;
  }
}

TEST(Cyclic, ThreeRoutesAgree) {
  Lab lab(corpus().caps);
  for (const auto& a : corpus().algebras) {
    auto tot = dims_of(lab.bicomplex(a, 4)->tot.homology_upto(2));
    auto norm = dims_of(lab.normalized_tot(a, 4)->homology_upto(2));
    auto tilde = dims_of(lab.ctilde(a, 4)->cc.homology_upto(2));
    EXPECT_EQ(tot, norm) << a->name;
    EXPECT_EQ(tot, tilde) << a->name;
  }
}

TEST(Cyclic, CyclicHomologyOfQ) {
  Lab lab(corpus().caps);
  auto s = lab.sbi(corpus().algebra("Q"), 5);
  EXPECT_EQ(dims_of(s->hc), (std::vector<std::size_t>{1, 0, 1, 0}));
}

TEST(Cyclic, InducedMapsFromIdentityAreIdentities) {
  const Workspace& ws = corpus();
  auto m = ws.measuring("idOnTrunc3");
  ChainMap f = hochschild_map(*m, unit_vec(0), 3);
  for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(f[n], Matrix::identity(ipow(3, n + 1)));
}

TEST(Cyclic, DerivationMeasuringIsChainMap) {
  const Workspace& ws = corpus();
  auto m = ws.measuring("derivTrunc3");
  CyclicModule cm(m->source, 3);
  ChainComplex h = cm.hochschild();
  for (Index x = 0; x < 2; ++x) EXPECT_EQ(chain_map_defect(hochschild_map(*m, unit_vec(x), 3), h, h), -1);
}

TEST(Cyclic, TruncationCap) {
  auto a = corpus().algebra("M2Q");
  EXPECT_THROW(CyclicModule(a, 6, 5000), TruncationTooLarge);
}

TEST(Cyclic, SuiteRecordsSkipsBeyondCertifiedDegrees) {
  Lab lab(corpus().caps);
  Report r;
  suite_sbi(lab, *corpus().measuring("idOnQ"), r);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.count(Status::Skipped), 1u);
}
