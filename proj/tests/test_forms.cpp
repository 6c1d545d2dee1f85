#include <gtest/gtest.h>

#include "support.hpp"

using namespace cyclo;
using cyclo::test::corpus;

TEST(Forms, KahlerDifferentials) {
  Lab lab(corpus().caps);
  EXPECT_EQ(lab.forms(corpus().algebra("Q"), 2)->dim(1), 0u);
  EXPECT_EQ(lab.forms(corpus().algebra("dualnum"), 2)->dim(1), 1u);
  EXPECT_EQ(lab.forms(corpus().algebra("trunc3"), 2)->dim(1), 2u);
}

TEST(Forms, SecondExteriorPowerOfDualNumbersVanishes) {
  // Omega^1 = Q dx with x dx = 0 is cyclic over A, so Lambda^2 = 0
  Lab lab(corpus().caps);
  EXPECT_EQ(lab.forms(corpus().algebra("dualnum"), 3)->dim(2), 0u);
}

TEST(Forms, PiOfEpsIsFactorial) {
  Lab lab(corpus().caps);
  auto f = lab.forms(corpus().algebra("trunc3"), 3);
  EXPECT_EQ(f->pi[2] * f->eps[2], Matrix::identity(f->dim(2)) * Rational(2));
}

TEST(Forms, DeRhamOfTruncatedPolynomials) {
  Lab lab(corpus().caps);
  auto f = lab.forms(corpus().algebra("trunc3"), 3);
  EXPECT_EQ(de_rham(*f, 0).dim(), 1u);
  // d(x^2) = 2x dx spans with dx; H^1 = Omega^1 / d(A)
  EXPECT_EQ(de_rham(*f, 1).dim(), f->dim(1) - 2u);
}

TEST(Forms, AntisymmetrizationComplex) {
  Lab lab(corpus().caps);
  for (const char* name : {"Q", "dualnum", "upper2", "M2Q"}) {
    auto a = corpus().algebra(name);
    auto e = lab.lie_E(a, 3);
    EXPECT_EQ(e->cc.square_defect(), -1) << name;
    EXPECT_EQ(chain_map_defect(e->eps, e->cc, lab.cyclic(a, 3)->hochschild()), -1) << name;
  }
}

TEST(Forms, SuitesPassOnAugmentation) {
  Lab lab(corpus().caps);
  const Measuring& m = *corpus().measuring("derivAugTrunc3");
  Report r;
  suite_antisym(lab, m, r);
  suite_eps_pi(lab, m, r);
  suite_pibar(lab, m, r);
  EXPECT_TRUE(r.ok());
}
