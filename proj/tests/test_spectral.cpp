#include <gtest/gtest.h>

#include "jdt/spectral.hpp"
#include "jdt/verify.hpp"

namespace jdt {
namespace {

TEST(SeminormalModule, Square2) {
  const auto m = build_module(YoungDiagram::square(2));
  ASSERT_EQ(m.dim(), 2u);
  EXPECT_EQ(m.basis()[0], StandardTableau({{1, 2}, {3, 4}}));
  EXPECT_EQ(m.basis()[1], StandardTableau({{1, 3}, {2, 4}}));
  const auto s3 = m.generator_matrix(3);
  EXPECT_EQ(s3(0, 0), 1);
  EXPECT_EQ(s3(1, 1), -1);
  EXPECT_TRUE(s3.is_diagonal());
}

TEST(SeminormalModule, OneRowAndOneColumn) {
  const auto row = build_module(YoungDiagram({5}));
  const auto col = build_module(YoungDiagram({1, 1, 1, 1, 1}));
  for (int s = 1; s < 5; ++s) {
    EXPECT_EQ(row.generator_matrix(s)(0, 0), 1);
    EXPECT_EQ(col.generator_matrix(s)(0, 0), -1);
  }
}

TEST(SeminormalModule, DimensionAndCoxeterRelations) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& shape : partitions_of(n)) {
      const auto m = build_module(shape);
      EXPECT_EQ(BigInt(m.dim()), hook_dimension(shape));
      EXPECT_EQ(check_coxeter_relations(m), std::nullopt) << shape;
    }
  }
  EXPECT_EQ(check_coxeter_relations(build_module(YoungDiagram({4, 3, 2}))), std::nullopt);
  EXPECT_THROW(build_module(YoungDiagram({11})), InputError);
}

TEST(SeminormalModule, GeneratorMatricesMultiply) {
  const auto m = build_module(YoungDiagram({3, 2, 1}));
  for (int s = 1; s < 6; ++s) {
    const auto g = m.generator_matrix(s);
    EXPECT_EQ(g * g, RationalMatrix::identity(m.dim()));
  }
  EXPECT_EQ(m.word_matrix({1, 2, 1}), m.word_matrix({2, 1, 2}));
}

TEST(JucysMurphy, Square2) {
  const auto m = build_module(YoungDiagram::square(2));
  const auto z2 = jm_matrix(m, 2);
  EXPECT_TRUE(z2.is_diagonal());
  EXPECT_EQ(z2.diagonal(), (std::vector<Rational>{1, -1}));
  const auto z4 = jm_matrix(m, 4);
  EXPECT_TRUE(z4.is_diagonal());
  EXPECT_EQ(z4.diagonal(), (std::vector<Rational>{0, 0}));
  EXPECT_EQ(jm_matrix(m, 1), RationalMatrix(2));
}

TEST(JucysMurphy, DiagonalWithContents) {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& shape : partitions_of(n)) {
      const auto m = build_module(shape);
      for (int s = 2; s <= n; ++s) {
        const auto z = jm_matrix(m, s);
        ASSERT_TRUE(z.is_diagonal()) << shape << " s=" << s;
        for (std::size_t t = 0; t < m.dim(); ++t) {
          EXPECT_EQ(z(t, t), m.basis()[t].position_of(s).u());
          if (s == 2) {
            EXPECT_TRUE(z(t, t) == 1 || z(t, t) == -1);
          }
        }
      }
    }
  }
}

TEST(Polynomial, ParseAndEvaluate) {
  const std::vector<Rational> xs{2, -1, 3};
  EXPECT_EQ(SymmetricPolynomial::parse("p1").evaluate(xs), 4);
  EXPECT_EQ(SymmetricPolynomial::parse("p2").evaluate(xs), 14);
  EXPECT_EQ(SymmetricPolynomial::parse("p1^2").evaluate(xs), 16);
  EXPECT_EQ(SymmetricPolynomial::parse("e2").evaluate(xs), -2 + 6 - 3);
  EXPECT_EQ(SymmetricPolynomial::parse("2*e2 - p2 + 3").evaluate(xs), 2 - 14 + 3);
  EXPECT_EQ(SymmetricPolynomial::parse("p1*p2").evaluate(xs), 56);
  EXPECT_EQ(SymmetricPolynomial::parse("p1^2 - 2*e2").to_string(), "p1^2 - 2*e2");
  EXPECT_THROW(SymmetricPolynomial::parse(""), InputError);
  EXPECT_THROW(SymmetricPolynomial::parse("q1"), InputError);
  EXPECT_THROW(SymmetricPolynomial::parse("p1 p2"), InputError);
  EXPECT_THROW(SymmetricPolynomial::parse("p1*"), InputError);
}

TEST(Expvalue, HandExamples) {
  const auto sq = YoungDiagram::square(2);
  const auto a = lemma_expvalue_check(sq, 4, 4, SymmetricPolynomial::parse("p2"));
  EXPECT_EQ(a.lhs, 0);
  EXPECT_EQ(a.rhs, 0);
  EXPECT_TRUE(a.equal);

  const auto b = lemma_expvalue_check(sq, 3, 4, SymmetricPolynomial::parse("p1"));
  EXPECT_EQ(b.lhs, -1);
  EXPECT_EQ(b.rhs, -1);
  EXPECT_EQ(b.conditioned, 1u);

  const auto c = lemma_expvalue_check(YoungDiagram({1}), 1, 1, SymmetricPolynomial::parse("p1"));
  EXPECT_EQ(c.lhs, 0);
  EXPECT_TRUE(c.equal);
}

TEST(Expvalue, Errors) {
  // 1 and 2 cannot have increasing u in a single column.
  EXPECT_THROW(lemma_expvalue_check(YoungDiagram({1, 1}), 1, 2, SymmetricPolynomial::parse("p1")),
               InputError);
  EXPECT_THROW(lemma_expvalue_check(YoungDiagram({10}), 1, 1, SymmetricPolynomial::parse("p1")),
               InputError);
  EXPECT_THROW(lemma_expvalue_check(YoungDiagram({2}), 2, 3, SymmetricPolynomial::parse("p1")),
               InputError);
}

TEST(Expvalue, Square3SweepIsExact) {
  const auto sq = YoungDiagram::square(3);
  for (const char* poly : {"p1", "p2", "p1^2", "e2"})
    for (int a = 1; a <= 9; ++a)
      for (int b = a; b <= std::min(9, a + 2); ++b) {
        const auto w = SymmetricPolynomial::parse(poly);
        try {
          EXPECT_TRUE(lemma_expvalue_check(sq, a, b, w).equal) << poly << " a=" << a << " b=" << b;
        } catch (const InputError&) {
          // Empty conditioned set.
        }
      }
}

TEST(Expvalue, SweepSkipsEmptyWindows) {
  const auto r = lemma_sweep(4, 3, {"p1", "e2"});
  EXPECT_TRUE(r.ok()) << r.first_failure;
  EXPECT_GT(r.cases, 0u);
  // A single column never orders two indices by increasing u.
  EXPECT_GT(r.skipped, 0u);
  EXPECT_EQ(r.skipped % 2, 0u);
}

}  // namespace
}  // namespace jdt
