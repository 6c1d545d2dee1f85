#include <gtest/gtest.h>

#include "support.hpp"

using namespace cyclo;
using cyclo::test::corpus;
using cyclo::test::dims_of;

TEST(Dihedral, HomologyOfQ) {
  Lab lab(corpus().caps);
  auto d = lab.dihedral(corpus().algebra("Q"), 4);
  EXPECT_EQ(dims_of(d->cc.homology_upto(3)), (std::vector<std::size_t>{1, 0, 0, 0}));
  EXPECT_EQ(d->cc.dims[4], 1u);
}

TEST(Dihedral, DegreeZeroOfGroupAlgebra) {
  Lab lab(corpus().caps);
  auto d = lab.dihedral(corpus().algebra("groupZ2"), 2);
  EXPECT_EQ(d->cc.dims[0], 2u);
}

TEST(Dihedral, GroupRelations) {
  Lab lab(corpus().caps);
  for (const auto& a : corpus().algebras) {
    if (!a->involution) continue;
    auto d = lab.dihedral(a, 3);
    for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(dihedral_relation_failure(*d, n), "") << a->name;
  }
}

TEST(Dihedral, RequiresInvolution) {
  EXPECT_THROW(require_involution(*corpus().algebra("upper2")), NotInvolutive);
}

TEST(Dihedral, ClassicalLieAlgebrasOverQ) {
  auto q = corpus().algebra("Q");
  EXPECT_EQ(sk_algebra(*q, 2).g->dim, 1u);
  EXPECT_EQ(sp_algebra(*q, 1).g->dim, 3u);
  EXPECT_FALSE(lie_failure(*sp_algebra(*q, 1).g));
}

TEST(Dihedral, SymplecticOperatorSquaresToIdentity) {
  for (const char* name : {"Q", "dualnum", "M2Q"}) {
    Matrix T = symplectic_T(*corpus().algebra(name), 1);
    EXPECT_EQ(T * T, Matrix::identity(T.rows())) << name;
  }
}

TEST(Dihedral, LadderPassesOnInclusion) {
  Lab lab(corpus().caps);
  const Measuring& m = *corpus().measuring("inclDualnum");
  Report r;
  suite_dihedral(lab, m, r);
  suite_restrict(lab, m, r);
  suite_ladder(lab, m, r);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.count(Status::Pass), 50u);
}
