#include <gtest/gtest.h>

#include "confal/checks.hpp"
#include "confal/diff_conformal.hpp"

using namespace confal;

namespace {

struct Weyl : ::testing::Test {
  DiffAlgebra w = weyl_algebra();
  const BaseAlgebra& A = w.base();
  ConfElem e = w.generators()[0];
  ConfElem L = w.generators()[1];
  ConfElem f(const AElem& a) const { return w.primitive(a); }
  AElem xpow(int k) const
  {
    AElem r = A.one();
    for (int i = 0; i < k; ++i) r = A.mul(r, A.x());
    return r;
  }
  SkewLaurent mono(const AElem& a, long k) const { return SkewLaurent::monomial(w.context(), a, k); }
};

}  // namespace

TEST_F(Weyl, Primitive)
{
  EXPECT_EQ(f(A.one()), e);
  EXPECT_TRUE(f(AElem()).is_zero());
  EXPECT_EQ(f(A.x()), L);
  EXPECT_EQ(f(A.one() + A.x()), e + L);
}

TEST_F(Weyl, ProductTable)
{
  EXPECT_EQ(w.product(e, e, 0), e);
  EXPECT_EQ(w.product(e, L, 0), L);
  EXPECT_EQ(w.product(L, e, 0), L);
  EXPECT_EQ(w.product(e, L, 1), Rat(-1) * e);
  EXPECT_EQ(w.product(L, L, 0), f(xpow(2)));
  EXPECT_EQ(w.product(L, L, 1), Rat(-1) * L);
  // The published table also lists L(1)e = -e; the coefficient formula gives 0.
  EXPECT_TRUE(w.product(L, e, 1).is_zero());
  EXPECT_TRUE(w.product(L, L, 2).is_zero());
}

TEST_F(Weyl, ProductExamples)
{
  for (int k = 0; k < 4; ++k) EXPECT_EQ(w.product(e, f(xpow(k)), 0), f(xpow(k)));
  EXPECT_EQ(w.product(e.d(), L, 1), Rat(-1) * L);
  EXPECT_TRUE(w.product(e.d(), L, 0).is_zero());
}

TEST_F(Weyl, Coefficients)
{
  for (long k = -3; k <= 3; ++k) EXPECT_EQ(w.coefficient(e, k), SkewLaurent::t_power(w.context(), k));
  EXPECT_TRUE(w.coefficient(f(A.x()).d(), 0).is_zero());
  EXPECT_EQ(w.coefficient(L.d(), 2), Rat(-2) * mono(A.x(), 1));
}

TEST_F(Weyl, OracleExamples)
{
  for (long k = -4; k <= 4; ++k) {
    EXPECT_EQ(w.product_coeff_oracle(e, e, 0, k), SkewLaurent::t_power(w.context(), k));
    EXPECT_TRUE(w.product_coeff_oracle(L, e, 1, k).is_zero());
    EXPECT_EQ(w.product_coeff_oracle(e, L, 1, k), Rat(-1) * SkewLaurent::t_power(w.context(), k));
  }
}

TEST_F(Weyl, LocalityDegrees)
{
  EXPECT_EQ(w.locality_degree(e, e), LocalityDegree(0));
  EXPECT_EQ(w.locality_degree(e, f(xpow(2))), LocalityDegree(2));
  EXPECT_EQ(w.locality_degree(L, L), LocalityDegree(1));
  EXPECT_EQ(w.locality_degree(L.d(), L), LocalityDegree(2));
  EXPECT_EQ(w.locality_degree(e.d(2), f(xpow(2))), LocalityDegree(4));
  EXPECT_TRUE(w.locality_degree(ConfElem(), L).is_all_zero());
}

TEST_F(Weyl, DShiftsLocality)
{
  const std::vector<ConfElem> us{e, L, f(xpow(2)), L + e.d()};
  for (const auto& u : us)
    for (const auto& v : us) {
      auto n = w.locality_degree(u, v);
      if (!n.is_all_zero()) {
        EXPECT_EQ(w.locality_degree(u.d(), v).value(), n.value() + 1);
      }
    }
}

TEST_F(Weyl, DongExamples)
{
  EXPECT_TRUE(dong_check(w, e, L, L, 3).pass);
  EXPECT_TRUE(dong_check(w, ConfElem(), L, e, 3).pass);
  auto c = current_matrix_algebra(2);
  const auto& g = c.generators();
  EXPECT_TRUE(dong_check(c, g[1], g[2], g[0], 2).pass);
}

TEST_F(Weyl, OracleSweepAndAxioms)
{
  EXPECT_TRUE(oracle_sweep(w, 4, 6).pass);
  EXPECT_TRUE(check_derivation_axioms(w, L, L.d() + e, 3, 3).pass);
  EXPECT_TRUE(check_coefficient_locality(w, L, L, 3, 3).pass);
}

TEST(CurrentMatrix, Products)
{
  auto c = current_matrix_algebra(2);
  const auto& g = c.generators();  // u11 u12 u21 u22
  EXPECT_EQ(c.product(g[1], g[2], 0), g[0]);
  EXPECT_TRUE(c.product(g[1], g[1], 0).is_zero());
  EXPECT_TRUE(c.product(g[1], g[2], 1).is_zero());
  EXPECT_EQ(c.product(g[1].d(), g[2], 1), Rat(-1) * g[0]);
  EXPECT_EQ(c.locality_degree(g[1], g[2]), LocalityDegree(0));
  EXPECT_TRUE(c.locality_degree(g[1], g[1]).is_all_zero());
  EXPECT_TRUE(oracle_sweep(c, 4, 6).pass);
  EXPECT_TRUE(check_associativity(c, 2, 2).pass());
}
