#include <gtest/gtest.h>

#include "confal/growth.hpp"

using namespace confal;

namespace {

DOp dpow(int k) { return DOp::monomial(Rat(1), k); }

std::vector<long> gammas(const GrowthReport& g)
{
  std::vector<long> out;
  for (const auto& r : g.rows) out.push_back(r.gamma);
  return out;
}

}  // namespace

TEST(ModuleRank, Examples)
{
  EXPECT_EQ(module_rank(std::vector<std::vector<DOp>>{}), 0);
  EXPECT_EQ(module_rank({{DOp(1)}, {dpow(1)}}), 1);
  EXPECT_EQ(module_rank({{DOp(1), DOp(0)}, {dpow(1), DOp(1)}, {DOp(0), dpow(2)}}), 2);
  EXPECT_EQ(module_rank({{DOp(0), DOp(0)}}), 0);
  EXPECT_EQ(module_rank({{DOp(1), DOp(0)}, {DOp(0), DOp(1)}}), 2);
}

TEST(ModuleRank, ElementOverload)
{
  auto w = weyl_algebra();
  const auto& g = w.generators();
  EXPECT_EQ(module_rank(std::vector<ConfElem>{g[0], g[0].d(), g[1].d(3)}), 2);
  EXPECT_EQ(module_rank(std::vector<ConfElem>{}), 0);
}

TEST(EnumerateSpan, Examples)
{
  auto c = current_matrix_algebra(2);
  auto s = enumerate_span(c, 2);
  EXPECT_EQ(s.monomials.size(), 4u);
  EXPECT_EQ(s.order_bound, 0);
  EXPECT_EQ(enumerate_span(c, 1).values(1).size(), 4u);

  auto w = weyl_algebra();
  auto ws = enumerate_span(w, 3);
  EXPECT_EQ(ws.values(1).size(), 2u);
  const ConfElem x3 = w.primitive(w.base().mul(w.base().x(), w.base().mul(w.base().x(), w.base().x())));
  bool found = false;
  for (const auto& v : ws.values(3)) found = found || v.projective_normal() == x3.projective_normal();
  EXPECT_TRUE(found);
  EXPECT_THROW(enumerate_span(w, 0), std::invalid_argument);
}

TEST(GrowthTable, CurrentAlgebraIsConstant)
{
  auto g = growth_table(current_matrix_algebra(2), 6);
  EXPECT_EQ(gammas(g), std::vector<long>(6, 4));
  ASSERT_TRUE(g.degree);
  EXPECT_EQ(*g.degree, 0);
}

TEST(GrowthTable, WeylIsLinear)
{
  auto g = growth_table(weyl_algebra(), 8);
  for (const auto& row : g.rows) {
    EXPECT_EQ(row.gamma, row.r + 1);
    if (row.delta1) {
      EXPECT_EQ(*row.delta1, 1);
    }
  }
  EXPECT_EQ(g.verdict, "degree 1");
}

TEST(GrowthTable, ZeroProducts)
{
  ProductTable t({"a"});
  auto g = growth_table(PresentedAlgebra(t), 4);
  EXPECT_EQ(g.order_bound, -1);
  EXPECT_EQ(gammas(g), std::vector<long>(4, 1));
}

TEST(GrowthTable, EmptyGenerators)
{
  DiffAlgebra empty(make_ore(BaseAlgebra::poly(), Derivation::zero()));
  auto g = growth_table(empty, 3);
  EXPECT_EQ(gammas(g), std::vector<long>(3, 0));
  EXPECT_EQ(g.verdict, "zero");
}

TEST(GrowthTable, ResourceBound)
{
  EXPECT_THROW(growth_table(weyl_algebra(), 6, 5), ResourceBound);
  EXPECT_THROW(coeff_growth_check(weyl_algebra(), -1, 1, 4, 5), ResourceBound);
}

TEST(DetectDegree, Sequences)
{
  EXPECT_EQ(detect_degree({0, 0, 0}).second, "zero");
  EXPECT_EQ(detect_degree({}).second, "inconclusive");
  EXPECT_EQ(detect_degree({1, 2, 4, 8, 16, 32, 64, 128}).second, "inconclusive");
  auto sq = detect_degree({1, 4, 9, 16, 25, 36, 49, 64});
  ASSERT_TRUE(sq.first);
  EXPECT_EQ(*sq.first, 2);
  EXPECT_EQ(sq.second, "degree 2");
  EXPECT_EQ(detect_degree({5, 5, 5, 5}).second, "degree 0");
}

TEST(CoeffGrowth, WeylWindow)
{
  auto g = coeff_growth_check(weyl_algebra(), -1, 1, 6);
  EXPECT_TRUE(g.bound_holds);
  for (const auto& row : g.rows) {
    ASSERT_TRUE(row.coeff_dim && row.bound_rhs);
    EXPECT_LE(*row.coeff_dim, *row.bound_rhs);
  }
  // The dimension keeps growing with r.
  EXPECT_LT(*g.rows.front().coeff_dim, *g.rows.back().coeff_dim);
}

TEST(CoeffGrowth, CurrentAlgebraZeroWindow)
{
  auto g = coeff_growth_check(current_matrix_algebra(2), 0, 0, 4);
  for (const auto& row : g.rows) EXPECT_EQ(*row.coeff_dim, 4);
  EXPECT_TRUE(g.bound_holds);
  EXPECT_THROW(coeff_growth_check(current_matrix_algebra(2), 1, 2, 2), std::invalid_argument);
}

TEST(ExcludedMonomials, VanishOnBothInstances)
{
  auto w = sample_excluded_monomials(weyl_algebra(), 100, 4, 7);
  EXPECT_EQ(w.samples, 100);
  EXPECT_EQ(w.nonzero, 0) << w.witness;
  auto c = sample_excluded_monomials(current_matrix_algebra(2), 100, 4, 7);
  EXPECT_EQ(c.nonzero, 0) << c.witness;
}

TEST(GrowthTable, RedundantGeneratorLeavesGammaUnchanged)
{
  auto w = weyl_algebra();
  const auto& a = w.base();
  DiffAlgebra more(w.context(), {{"e", a.one()}, {"L", a.x()}, {"eL", a.one() + a.x()}, {"e2", Rat(2) * a.one()}});
  EXPECT_EQ(gammas(growth_table(more, 5)), gammas(growth_table(w, 5)));
}

TEST(GrowthTable, SubalgebraIsSmaller)
{
  auto w = weyl_algebra();
  DiffAlgebra sub(w.context(), {{"e", w.base().one()}});
  auto gs = gammas(growth_table(sub, 5));
  auto gw = gammas(growth_table(w, 5));
  for (std::size_t i = 0; i < gs.size(); ++i) {
    EXPECT_EQ(gs[i], 1);
    EXPECT_LE(gs[i], gw[i]);
  }
}
