#include <gtest/gtest.h>

#include "support.hpp"

using namespace cyclo;
using cyclo::test::dense;

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
}

TEST(Matrix, ProductAndKron) {
  Matrix a = dense(2, 2, {1, 2, 3, 4}), b = dense(2, 2, {0, 1, 1, 0});
  EXPECT_EQ(a * b, dense(2, 2, {2, 1, 4, 3}));
  Matrix k = kron(Matrix::identity(2), b);
  EXPECT_EQ(k.rows(), 4u);
  EXPECT_EQ(k.at(1, 0), Rational(1));
  EXPECT_EQ(k.at(3, 2), Rational(1));
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Matrix, MismatchWitness) {
  auto mm = first_mismatch(dense(1, 2, {1, 2}), dense(1, 2, {1, 3}));
  ASSERT_TRUE(mm);
  EXPECT_NE(mm->describe().find("(0,1)"), std::string::npos);
}

TEST(Linalg, RankKernelInverse) {
  Matrix m = dense(3, 3, {1, 2, 3, 2, 4, 6, 1, 0, 1});
  EXPECT_EQ(rank(m), 2u);
  Matrix k = kernel_basis(m);
  EXPECT_EQ(k.cols(), 1u);
  EXPECT_TRUE((m * k).is_zero());
  Matrix inv_src = dense(2, 2, {2, 1, 1, 1});
  EXPECT_EQ(inverse(inv_src) * inv_src, Matrix::identity(2));
}

TEST(Linalg, PivotOrderIsDeterministic) {
  Matrix m = dense(3, 3, {0, 1, 1, 1, 0, 1, 0, 0, 0});
  EXPECT_EQ(independent_columns(m), (std::vector<std::size_t>{0, 1}));
}

TEST(Linalg, QuotientAndDescend) {
  Quotient q(dense(3, 1, {1, -1, 0}));
  EXPECT_EQ(q.dim(), 2u);
  EXPECT_TRUE((q.projection() * dense(3, 1, {1, -1, 0})).is_zero());
  EXPECT_EQ(q.projection() * q.section(), Matrix::identity(2));
  Matrix swap = dense(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1});
  Matrix s = descend(swap, q, q, "swap");
  EXPECT_EQ(s * q.projection(), q.projection() * swap);
  Matrix bad = dense(3, 3, {1, 0, 0, 0, 0, 0, 0, 0, 1});
  EXPECT_THROW(descend(bad, q, q, "bad"), RelationNotPreserved);
}

TEST(Linalg, SubquotientAndInducedMap) {
  // 0 <- Q^2 <- Q^1 with d = (1,1)^t, homology Q^1 in degree 0
  Matrix d1 = dense(2, 1, {1, 1});
  Subquotient h(Matrix(0, 2), d1);
  EXPECT_EQ(h.dim(), 1u);
  auto c = h.coords(unit_vec(0));
  ASSERT_TRUE(c);
  auto c2 = h.coords(unit_vec(1));
  ASSERT_TRUE(c2);
  // e0 + e1 is the boundary, so the two basis vectors give opposite classes
  EXPECT_EQ(*c, scaled(*c2, Rational(-1)));
  Matrix neg = Matrix::identity(2) * Rational(-1);
  EXPECT_EQ(induced_on_subquotient(neg, h, h), Matrix::identity(1) * Rational(-1));
}

TEST(Complexes, SquareDefectAndChainMap) {
  ChainComplex c;
  c.push(1, Matrix(0, 1));
  c.push(1, dense(1, 1, {1}));
  c.push(1, dense(1, 1, {1}));
  EXPECT_EQ(c.square_defect(), 2);
  ChainComplex ok;
  ok.push(1, Matrix(0, 1));
  ok.push(1, dense(1, 1, {1}));
  EXPECT_EQ(ok.square_defect(), -1);
  EXPECT_EQ(ok.homology(0).dim(), 0u);
  EXPECT_EQ(chain_map_defect({Matrix::identity(1), Matrix::identity(1)}, ok, ok), -1);
  EXPECT_EQ(chain_map_defect({Matrix::identity(1), Matrix(1, 1)}, ok, ok), 1);
}

TEST(Combinatorics, WordsAndPermutations) {
  EXPECT_EQ(decode(encode({1, 0, 2}, 3), 3, 3), (Word{1, 0, 2}));
  EXPECT_EQ(all_perms(3).size(), 6u);
  EXPECT_EQ(perm_sign({1, 0, 2}), -1);
  EXPECT_EQ(shuffles(2, 2).size(), 6u);
  EXPECT_THROW(checked_pow(10, 5, 5000, "big"), TruncationTooLarge);
}
