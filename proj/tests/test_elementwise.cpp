#include <gtest/gtest.h>

#include "support.hpp"

using namespace cyclo;
using cyclo::test::corpus;

namespace {

WordVec column_words(const Matrix& m, std::size_t j, std::size_t d, std::size_t len) {
  WordVec out;
  for (const auto& [i, c] : m.col(j)) add_to(out, decode(i, d, len), c);
  return out;
}

}  // namespace

TEST(Elementwise, CanonicalFormKillsExactlyTheCyclicRelations) {
  Lab lab(corpus().caps);
  for (const char* name : {"dualnum", "trunc3"}) {
    auto a = corpus().algebra(name);
    auto ct = lab.ctilde(a, 3);
    for (std::size_t n = 0; n <= 3; ++n) {
      const std::size_t len = n + 1;
      for (std::size_t k = 0; k < ipow(a->dim, len); ++k) {
        Word w = decode(k, a->dim, len);
        WordVec v = cyclic_t(w);
        add_to(v, w, Rational(-1));
        EXPECT_TRUE(canonical(v).empty()) << name << " n=" << n;
      }
      EXPECT_EQ(cyclic_classes(a->dim, n).size(), ct->q[n].dim()) << name << " n=" << n;
    }
  }
}

TEST(Elementwise, BoundaryMatchesMatrix) {
  Lab lab(corpus().caps);
  auto a = corpus().algebra("upper2");
  auto cm = lab.cyclic(a, 3);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t j = 0; j < cm->dim(n); ++j)
      EXPECT_EQ(hochschild_b(*a, decode(j, a->dim, n + 1)), column_words(cm->b(n), j, a->dim, n));
}

TEST(Elementwise, ThetaAndTraceMatchMatrices) {
  Lab lab(corpus().caps);
  auto a = corpus().algebra("dualnum");
  const std::size_t r = 2, D = r * r * a->dim;
  auto ce = lab.ce(a, r, 3);
  for (std::size_t n = 0; n <= 2; ++n) {
    Matrix th = theta_raw(*ce, n), tr = trace_map(a->dim, r, n);
    for (std::size_t j = 0; j < ce->wedge[n + 1].size(); ++j)
      EXPECT_EQ(theta_words(ce->wedge[n + 1].word(j)), column_words(th, j, D, n + 1));
    for (std::size_t j = 0; j < tr.cols(); ++j)
      EXPECT_EQ(trace_words(a->dim, r, {{decode(j, D, n + 1), Rational(1)}}), column_words(tr, j, a->dim, n + 1));
  }
}
