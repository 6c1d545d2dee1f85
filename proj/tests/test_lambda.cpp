#include <gtest/gtest.h>

#include "support.hpp"

using namespace cyclo;
using cyclo::test::corpus;

TEST(Lambda, EulerianIdempotentsDecomposeIdentity) {
  Eulerian eu = eulerian_idempotents(2, 4);
  for (std::size_t n = 0; n <= 4; ++n) {
    Matrix sum(ipow(2, n), ipow(2, n));
    for (std::size_t i = 0; i <= 4; ++i) {
      EXPECT_EQ(eu.at(n, i) * eu.at(n, i), eu.at(n, i));
      sum = sum + eu.at(n, i);
      if (i > n) EXPECT_TRUE(eu.at(n, i).is_zero());
    }
    EXPECT_EQ(sum, Matrix::identity(ipow(2, n)));
  }
}

TEST(Lambda, EulerianIdempotentsInDegreeTwo) {
  // permutations act with their sign, so e_2^{(2)} is the antisymmetrizer (1 - tau)/2
  Eulerian eu = eulerian_idempotents(2, 2);
  Index ab = encode({0, 1}, 2), ba = encode({1, 0}, 2);
  EXPECT_EQ(eu.at(2, 2).at(ab, ab), Rational(1, 2));
  EXPECT_EQ(eu.at(2, 2).at(ba, ab), Rational(-1, 2));
  EXPECT_EQ(eu.at(2, 1).at(ba, ab), Rational(1, 2));
}

TEST(Lambda, ShuffleProductOfDegreeOneChains) {
  auto a = corpus().algebra("dualnum");
  Matrix sh = shuffle_product(*a, 1, 1);
  // (1, x) x (1, x) = (1, x, x) - (1, x, x) = 0
  Index u = encode({0, 1}, 2);
  EXPECT_TRUE(sh.apply(unit_vec(static_cast<Index>(u * 4 + u))).empty());
}

TEST(Lambda, SummandTablesSumToHomology) {
  Lab lab(corpus().caps);
  auto tables = run_compute(corpus(), lab, {"lambda", "dualnum", "", 0, 1});
  ASSERT_EQ(tables.size(), 2u);
  for (const auto& t : tables)
    for (const auto& row : t.rows) {
      std::size_t s = 0;
      for (std::size_t c = 2; c < row.size(); ++c) s += std::stoul(row[c]);
      EXPECT_EQ(std::to_string(s), row[1]) << t.title << " n=" << row[0];
    }
}

TEST(Lambda, RequiresCommutativity) {
  Lab lab(corpus().caps);
  EXPECT_THROW(lab.eulerian(corpus().algebra("upper2"), 3), NotCommutative);
}

TEST(Lambda, SuitesPassOnDerivation) {
  Lab lab(corpus().caps);
  const Measuring& m = *corpus().measuring("derivDualnum");
  Report r;
  suite_star(lab, m, r);
  suite_comodule(lab, m, r);
  suite_eulerian(lab, m, r);
  suite_lambda_hh(lab, m, r);
  suite_lambda_hc(lab, m, r);
  suite_lambda_sbi(lab, m, r);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.count(Status::Pass), 100u);
}
