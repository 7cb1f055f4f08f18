#include <gtest/gtest.h>

#include "confal/ore.hpp"

using namespace confal;

namespace {

struct WeylFixture : ::testing::Test {
  OreContext ctx = weyl_instance(1);
  const BaseAlgebra& A = ctx->base();
  AElem x = A.x();
  AElem one = A.one();
  SkewLaurent mono(const AElem& a, long k) const { return SkewLaurent::monomial(ctx, a, k); }
  SkewLaurent t(long k = 1) const { return SkewLaurent::t_power(ctx, k); }
};

}  // namespace

TEST(Nilpotency, Examples)
{
  auto w = weyl_instance(1);
  AElem x2 = w->base().mul(w->base().x(), w->base().x());
  EXPECT_EQ(nilpotency_index(*w, x2), 3);

  auto z = make_ore(BaseAlgebra::poly(), Derivation::zero());
  EXPECT_EQ(nilpotency_index(*z, z->base().x()), 1);
  EXPECT_THROW(nilpotency_index(*z, AElem()), std::invalid_argument);

  BaseAlgebra m2 = BaseAlgebra::matrix_units(2);
  auto ad = make_ore(m2, Derivation::ad(m2.matrix_unit(0, 1)));
  EXPECT_EQ(nilpotency_index(*ad, m2.matrix_unit(1, 0)), 3);
}

TEST(OreRing, RejectsNonNilpotentDerivation)
{
  // Dual numbers with delta(eps) = eps: a derivation, but not nilpotent.
  BaseAlgebra dual = BaseAlgebra::findim(2, {1, 0, 0, 1, 0, 1, 0, 0});
  EXPECT_THROW(make_ore(dual, Derivation::matrix({{0, 0}, {0, 1}})), BoundExceeded);
}

TEST(OreRing, RejectsNonDerivation)
{
  BaseAlgebra dual = BaseAlgebra::findim(2, {1, 0, 0, 1, 0, 1, 0, 0});
  EXPECT_THROW(make_ore(dual, Derivation::matrix({{1, 0}, {0, 0}})), std::invalid_argument);
  EXPECT_THROW(make_ore(dual, Derivation::ddx()), std::invalid_argument);
  EXPECT_THROW(make_ore(BaseAlgebra::poly(), Derivation::matrix({{0}})), std::invalid_argument);
}

TEST(FinDim, AssociativityAndUnitChecked)
{
  // b0 b0 = b1, everything else zero except b1 b0 = b0: not associative.
  std::vector<Rat> t(8, Rat(0));
  t[(0 * 2 + 0) * 2 + 1] = 1;
  t[(1 * 2 + 0) * 2 + 0] = 1;
  EXPECT_THROW(BaseAlgebra::findim(2, t), std::invalid_argument);
  // Zero product on Q^1: associative, no unit.
  BaseAlgebra z = BaseAlgebra::findim(1, {0});
  EXPECT_FALSE(z.has_unit());
  BaseAlgebra m2 = BaseAlgebra::matrix_units(2);
  ASSERT_TRUE(m2.has_unit());
  EXPECT_EQ(m2.one(), m2.matrix_unit(0, 0) + m2.matrix_unit(1, 1));
}

TEST_F(WeylFixture, CommutationExamples)
{
  // t x = x t - 1
  EXPECT_EQ(skew_mul(t(), mono(x, 0)), mono(x, 1) - mono(one, 0));
  // 1 b = b
  EXPECT_EQ(skew_mul(mono(one, 0), mono(x, 3)), mono(x, 3));
  // t^-1 x = x t^-1 + t^-2
  EXPECT_EQ(skew_mul(t(-1), mono(x, 0)), mono(x, -1) + mono(one, -2));
  // x t - t x = 1
  EXPECT_EQ(skew_mul(mono(x, 0), t()) - skew_mul(t(), mono(x, 0)), mono(one, 0));
  // t x^2 = x^2 t - 2x, and it agrees with (t x) x
  AElem x2 = A.mul(x, x);
  SkewLaurent rhs = mono(x2, 1) - Rat(2) * mono(x, 0);
  EXPECT_EQ(skew_mul(t(), mono(x2, 0)), rhs);
  EXPECT_EQ(skew_mul(skew_mul(t(), mono(x, 0)), mono(x, 0)), rhs);
}

TEST_F(WeylFixture, LaurentInverse)
{
  EXPECT_EQ(skew_mul(t(1), t(-1)), t(0));
  EXPECT_EQ(skew_mul(t(-3), t(3)), t(0));
}

TEST(Weyl, MatrixInstance)
{
  auto ctx = weyl_instance(2);
  const BaseAlgebra& A = ctx->base();
  auto e12t = SkewLaurent::monomial(ctx, A.matrix_unit(0, 1), 1);
  auto e21 = SkewLaurent::constant(ctx, A.matrix_unit(1, 0));
  EXPECT_EQ(skew_mul(e12t, e21), SkewLaurent::monomial(ctx, A.matrix_unit(0, 0), 1));
  EXPECT_THROW(weyl_instance(0), std::invalid_argument);
}

TEST(BaseAlgebra, Invertibility)
{
  BaseAlgebra p = BaseAlgebra::poly();
  EXPECT_TRUE(p.is_invertible(p.scalar(3)));
  EXPECT_FALSE(p.is_invertible(p.x()));
  BaseAlgebra m = BaseAlgebra::matpoly(2);
  EXPECT_TRUE(m.is_invertible(m.one() + m.mul(m.x(), m.matrix_unit(0, 1))));
  EXPECT_FALSE(m.is_invertible(m.x()));
  EXPECT_FALSE(m.is_invertible(m.matrix_unit(0, 0)));
  BaseAlgebra dual = BaseAlgebra::findim(2, {1, 0, 0, 1, 0, 1, 0, 0});
  EXPECT_TRUE(dual.is_invertible(dual.one() + AElem::unit({1, 0, 0})));
  EXPECT_FALSE(dual.is_invertible(AElem::unit({1, 0, 0})));
}

TEST(Derivation, AdPlusDdx)
{
  BaseAlgebra m = BaseAlgebra::matpoly(2);
  Derivation d = Derivation::ddx_plus_ad(1, m.matrix_unit(0, 1));
  auto ctx = make_ore(m, d);
  // delta(x E21) = E21 + x (E12 E21 - E21 E12) = E21 + x (E11 - E22)
  AElem xe21 = m.mul(m.x(), m.matrix_unit(1, 0));
  AElem expect = m.matrix_unit(1, 0) + m.mul(m.x(), m.matrix_unit(0, 0)) - m.mul(m.x(), m.matrix_unit(1, 1));
  EXPECT_EQ(ctx->delta(xe21), expect);
}
