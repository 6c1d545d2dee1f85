#include <gtest/gtest.h>

#include "support.hpp"

using namespace cyclo;
using cyclo::test::corpus;
using cyclo::test::dims_of;

TEST(Lie, GlOfMatricesSatisfiesJacobi) {
  for (const auto& a : corpus().algebras) {
    EXPECT_FALSE(lie_failure(gl_lie(*a, 2))) << a->name;
    EXPECT_FALSE(leibniz_failure(gl_lie(*a, 2))) << a->name;
  }
}

TEST(Lie, AbelianHomology) {
  // gl_1 of a commutative algebra is abelian, so d = 0 in both complexes
  Lab lab(corpus().caps);
  auto a = corpus().algebra("dualnum");
  EXPECT_EQ(dims_of(lab.ce(a, 1, 3)->cc.homology_upto(2)), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(dims_of(lab.cl(a, 1, 3)->cc.homology_upto(2)), (std::vector<std::size_t>{1, 2, 4}));
}

TEST(Lie, LeibnizFailureDetected) {
  LieAlgebra g{"bad", 2, {{{}, {{0, Rational(1)}}}, {{{1, Rational(1)}}, {}}}};
  EXPECT_TRUE(lie_failure(g));
}

TEST(Lie, TraceIsAnIsomorphismOnHC0) {
  Lab lab(corpus().caps);
  auto q = corpus().algebra("Q");
  auto m2 = lab.matrix(q, 2);
  auto ctM = lab.ctilde(m2, 2), ctQ = lab.ctilde(q, 2);
  Matrix tr = descend(trace_map(1, 2, 0), ctM->q[0], ctQ->q[0], "trace");
  Matrix h = induced_on_subquotient(tr, ctM->cc.homology(0), ctQ->cc.homology(0));
  EXPECT_EQ(h.rows(), 1u);
  EXPECT_EQ(h.cols(), 1u);
  EXPECT_EQ(rank(h), 1u);
}

TEST(Lie, CyclicWordsOmegaTable) {
  CyclicWords w(4);
  EXPECT_EQ(w.cycles[3].size(), 6u);
  for (const Word& L : w.cycles[3]) EXPECT_EQ(CyclicWords::omega(L)[0], 0u);
}

TEST(Lie, VComplexHomologyMatchesHochschild) {
  Lab lab(corpus().caps);
  auto a = corpus().algebra("dualnum");
  auto v = lab.vcomplex(a, 3);
  EXPECT_EQ(dims_of(v->cc.homology_upto(2)), dims_of(lab.cyclic(a, 3)->hochschild().homology_upto(2)));
}

TEST(Lie, CoinvariantsOfAbelianAction) {
  Lab lab(corpus().caps);
  auto a = corpus().algebra("dualnum");
  auto ce = lab.ce(a, 1, 3);
  auto bar = lab.ce_bar(a, 1, 3);
  for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(bar->cc.dims[n], ce->cc.dims[n]);
}

TEST(Lie, ProductSuitesPassOnDerivation) {
  Lab lab(corpus().caps);
  const Measuring& m = *corpus().measuring("derivDualnum");
  Report r;
  suite_ce_coproduct(lab, m, r);
  suite_cl(lab, m, r);
  suite_ce_product(lab, m, r);
  suite_cl_product(lab, m, r);
  suite_coinv(lab, m, r);
  EXPECT_TRUE(r.ok());
}
