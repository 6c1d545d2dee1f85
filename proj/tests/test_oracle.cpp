#include <gtest/gtest.h>

#include "frozen.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace cyclo;
using cyclo::test::corpus;
using cyclo::test::dims_of;

TEST(Oracle, ReproducesFrozenValues) {
  EXPECT_EQ(oracle::hh_dims(oracle::truncated_poly(2), 3), frozen::hh_dualnum);
  EXPECT_EQ(oracle::hh_dims(oracle::truncated_poly(3), 3), frozen::hh_trunc3);
  EXPECT_EQ(oracle::hc_dims(oracle::truncated_poly(1), 3), frozen::hc_q);
  EXPECT_EQ(oracle::hc_dims(oracle::truncated_poly(2), 3), frozen::hc_dualnum);
  EXPECT_EQ(oracle::omega1_dim(oracle::truncated_poly(2)), frozen::omega1_dualnum);
  EXPECT_EQ(oracle::omega1_dim(oracle::truncated_poly(3)), frozen::omega1_trunc3);
  EXPECT_EQ(oracle::omega2_dim(oracle::truncated_poly(2)), frozen::omega2_dualnum);
  auto [hc0, tr] = oracle::hc0_trace(2);
  EXPECT_EQ(hc0, frozen::hc0_m2);
  EXPECT_EQ(tr, frozen::trace_rank_m2);
  EXPECT_EQ(oracle::sk2_dim(), frozen::sk2_q);
  EXPECT_EQ(oracle::sp2_dim(), frozen::sp2_q);
  EXPECT_EQ(oracle::hd_of_q(3), frozen::hd_q);
}

TEST(Oracle, LibraryMatchesHochschildAndCyclic) {
  Lab lab(corpus().caps);
  EXPECT_EQ(dims_of(*lab.hh(corpus().algebra("dualnum"), 4)), frozen::hh_dualnum);
  EXPECT_EQ(dims_of(*lab.hh(corpus().algebra("trunc3"), 4)), frozen::hh_trunc3);
  EXPECT_EQ(dims_of(lab.sbi(corpus().algebra("Q"), 5)->hc), frozen::hc_q);
  EXPECT_EQ(dims_of(lab.sbi(corpus().algebra("dualnum"), 5)->hc), frozen::hc_dualnum);
}

TEST(Oracle, LibraryMatchesForms) {
  Lab lab(corpus().caps);
  EXPECT_EQ(lab.forms(corpus().algebra("dualnum"), 3)->dim(1), frozen::omega1_dualnum);
  EXPECT_EQ(lab.forms(corpus().algebra("trunc3"), 3)->dim(1), frozen::omega1_trunc3);
  EXPECT_EQ(lab.forms(corpus().algebra("dualnum"), 3)->dim(2), frozen::omega2_dualnum);
}

TEST(Oracle, LibraryMatchesTraceAndClassical) {
  Lab lab(corpus().caps);
  auto q = corpus().algebra("Q");
  auto ctM = lab.ctilde(lab.matrix(q, 2), 2), ctQ = lab.ctilde(q, 2);
  Matrix tr = descend(trace_map(1, 2, 0), ctM->q[0], ctQ->q[0], "trace");
  Matrix h = induced_on_subquotient(tr, ctM->cc.homology(0), ctQ->cc.homology(0));
  EXPECT_EQ(h.cols(), frozen::hc0_m2);
  EXPECT_EQ(rank(h), frozen::trace_rank_m2);
  EXPECT_EQ(lab.classical("sk", q, 2)->g->dim, frozen::sk2_q);
  EXPECT_EQ(lab.classical("sp", q, 1)->g->dim, frozen::sp2_q);
  EXPECT_EQ(dims_of(lab.dihedral(q, 4)->cc.homology_upto(3)), frozen::hd_q);
}

TEST(Oracle, LibraryMatchesLieHomology) {
  Lab lab(corpus().caps);
  auto a = corpus().algebra("dualnum");
  EXPECT_EQ(dims_of(lab.ce(a, 1, 3)->cc.homology_upto(2)), frozen::ce_gl1_dualnum);
  EXPECT_EQ(dims_of(lab.cl(a, 1, 3)->cc.homology_upto(2)), frozen::cl_gl1_dualnum);
}
