#include <gtest/gtest.h>

#include "support.hpp"

using namespace cyclo;
using cyclo::test::corpus;
using cyclo::test::fixture;

namespace {

std::string error_of(const std::string& path) {
  try {
    load_workspace(path);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Workspace, BundledCorpusLoads) {
  const Workspace& ws = corpus();
  EXPECT_EQ(ws.algebras.size(), 6u);
  EXPECT_EQ(ws.coalgebras.size(), 2u);
  EXPECT_EQ(ws.measurings.size(), 19u);
  EXPECT_EQ(ws.caps.max_degree, 4u);
  EXPECT_EQ(ws.caps.max_lie_degree, 3u);
  EXPECT_EQ(ws.caps.max_matrix_size, 2u);
  EXPECT_EQ(ws.caps.max_dim, 5000u);
  for (const auto& a : ws.algebras) EXPECT_TRUE(validate_algebra(*a).ok()) << a->name;
  for (const auto& m : ws.measurings) EXPECT_TRUE(validate_measuring(*m).ok()) << m->name;
}

TEST(Workspace, BrokenAssociativityNamesTheTriple) {
  std::string e = error_of(fixture("broken_assoc.json"));
  EXPECT_NE(e.find("associativity fails at (x,x,x)"), std::string::npos) << e;
}

TEST(Workspace, DanglingReferenceRejected) {
  EXPECT_THROW(load_workspace(fixture("dangling.json")), ValidationError);
}

TEST(Workspace, NonCocommutativeFlagRejected) {
  std::string e = error_of(fixture("noncocommutative.json"));
  EXPECT_NE(e.find("flagged cocommutative"), std::string::npos) << e;
}

TEST(Workspace, InvolutionIncompatibleMeasuringRejected) {
  std::string e = error_of(fixture("involution_violation.json"));
  EXPECT_NE(e.find("not compatible with the involutions"), std::string::npos) << e;
}

TEST(Workspace, MalformedDocuments) {
  EXPECT_THROW(parse_workspace("{"), ParseError);
  EXPECT_THROW(parse_workspace(R"({"algebras":[{"name":"a"}]})"), ParseError);
  EXPECT_THROW(load_workspace("/nonexistent/file.json"), ParseError);
}

TEST(Algebra, ConjugationIsMultiplicativeButBreaksInvolution) {
  // the measuring in the fixture is an honest algebra map; only the involution condition fails
  const Workspace& ws = corpus();
  auto m2 = ws.algebra("M2Q");
  Measuring conj{"conj", ws.coalgebra("point"), m2, m2, {}};
  Matrix g(4, 4);
  std::vector<std::vector<long>> rows = {{1, 0, 1, 0}, {-1, 1, -1, 1}, {0, 0, 1, 0}, {0, 0, -1, 1}};
  for (std::size_t j = 0; j < 4; ++j) {
    SparseVec c;
    for (std::size_t i = 0; i < 4; ++i)
      if (rows[i][j]) c.emplace_back(static_cast<Index>(i), Rational(rows[i][j]));
    g.set_col(j, c);
  }
  conj.phi = {g};
  auto rep = validate_measuring(conj);
  ASSERT_FALSE(rep.ok());
  for (const auto& f : rep.failures) EXPECT_NE(f.find("involution"), std::string::npos) << f;
}

TEST(Algebra, MatrixAlgebraOfSizeOneIsIsomorphic) {
  auto a = corpus().algebra("dualnum");
  Algebra m1 = matrix_algebra(*a, 1);
  EXPECT_EQ(m1.dim, a->dim);
  EXPECT_EQ(m1.mult, a->mult);
  EXPECT_TRUE(validate_algebra(matrix_algebra(*a, 2)).ok());
}

TEST(Algebra, MatrixMeasuringValidates) {
  const Workspace& ws = corpus();
  for (const char* name : {"derivDualnum", "inclM2", "augTrunc3"}) {
    Measuring m = matrix_measuring(*ws.measuring(name), 2);
    EXPECT_TRUE(validate_measuring(m).ok()) << name;
  }
}

TEST(Coalgebra, IteratedCoproductOfPrimitive) {
  auto c = corpus().coalgebra("deriv");
  // Delta^2(d) = g g d + g d g + d g g on the lexicographic basis
  SparseVec v = iterated_coproduct(*c, unit_vec(1), 3);
  EXPECT_EQ(v.size(), 3u);
  EXPECT_TRUE(validate_coalgebra(*c).ok());
}
