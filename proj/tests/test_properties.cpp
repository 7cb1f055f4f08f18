#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "confal/dsl.hpp"
#include "confal/growth.hpp"

using namespace confal;

namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int in(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  Rat rat() { return make_rat(in(-5, 5), in(1, 3)); }
};

Poly random_poly(Rng& r, int max_deg)
{
  Poly p;
  for (int k = 0; k <= max_deg; ++k) p += Poly::monomial(r.rat(), k);
  return p;
}

AElem random_base(Rng& r, const BaseAlgebra& a, int max_deg)
{
  AElem out;
  const int n = a.kind() == BaseKind::FinDim ? 1 : a.size();
  for (int t = r.in(1, 3); t > 0; --t) {
    if (a.kind() == BaseKind::FinDim)
      out.add_term({r.in(0, a.size() - 1), 0, 0}, r.rat());
    else
      out.add_term({r.in(0, n - 1), r.in(0, n - 1), r.in(0, max_deg)}, r.rat());
  }
  return out;
}

SkewLaurent random_laurent(Rng& r, const OreContext& ctx)
{
  SkewLaurent s(ctx);
  for (int t = r.in(1, 3); t > 0; --t) s += SkewLaurent::monomial(ctx, random_base(r, ctx->base(), 3), r.in(-3, 3));
  return s;
}

ConfElem random_conf(Rng& r, const DiffAlgebra& m)
{
  ConfElem u;
  for (int t = r.in(1, 3); t > 0; --t) u += r.rat() * m.primitive(random_base(r, m.base(), 2)).d(r.in(0, 2));
  return u;
}

// u_(n) v reduced with the derivation axioms alone, down to products of
// primitives: (d a)_(n) b = -n a_(n-1) b and a_(n) d b = d(a_(n) b) + n a_(n-1) b.
ConfElem reduce_product(const DiffAlgebra& m, const AElem& a, int p, const AElem& b, int q, int n)
{
  if (n < 0) return {};
  if (p > 0) return Rat(-n) * reduce_product(m, a, p - 1, b, q, n - 1);
  if (q > 0) return reduce_product(m, a, 0, b, q - 1, n).d() + Rat(n) * reduce_product(m, a, 0, b, q - 1, n - 1);
  return m.product(m.primitive(a), m.primitive(b), n);
}

}  // namespace

TEST(Properties, PolynomialRingAxioms)
{
  Rng r(1);
  for (int i = 0; i < 50; ++i) {
    const Poly a = random_poly(r, 4), b = random_poly(r, 3), c = random_poly(r, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(poly_derive(a * b), poly_derive(a) * b + a * poly_derive(b));
    if (!b.is_zero()) {
      auto [q, rem] = a.divmod(b);
      EXPECT_EQ(q * b + rem, a);
      EXPECT_LT(rem.degree(), b.degree());
    }
  }
}

TEST(Properties, PascalRule)
{
  for (int n = -20; n <= 20; ++n)
    for (int k = 1; k <= 10; ++k) EXPECT_EQ(gen_binom(n, k), gen_binom(n - 1, k - 1) + gen_binom(n - 1, k)) << n << " " << k;
}

TEST(Properties, SkewLaurentAssociativity)
{
  Rng r(2);
  for (auto ctx : {weyl_instance(1), weyl_instance(2), make_ore(BaseAlgebra::matpoly(2), Derivation::ddx_plus_ad(1, AElem::unit({0, 1, 0})))}) {
    for (int i = 0; i < 25; ++i) {
      auto a = random_laurent(r, ctx), b = random_laurent(r, ctx), c = random_laurent(r, ctx);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
    }
  }
}

TEST(Properties, OreRelation)
{
  Rng r(3);
  for (auto ctx : {weyl_instance(1), weyl_instance(2)}) {
    const auto t = SkewLaurent::t_power(ctx, 1), tinv = SkewLaurent::t_power(ctx, -1);
    EXPECT_EQ(t * tinv, SkewLaurent::constant(ctx, ctx->base().one()));
    EXPECT_EQ(tinv * t, SkewLaurent::constant(ctx, ctx->base().one()));
    for (int i = 0; i < 30; ++i) {
      const AElem b = random_base(r, ctx->base(), 4);
      const auto B = SkewLaurent::constant(ctx, b);
      EXPECT_EQ(B * t - t * B, SkewLaurent::constant(ctx, ctx->delta(b)));
    }
  }
}

TEST(Properties, AdjointNilpotency)
{
  Rng r(4);
  auto a = BaseAlgebra::matrix_units(3);
  for (int i = 0; i < 30; ++i) {
    AElem nil;
    for (auto [p, q] : {std::pair{0, 1}, {0, 2}, {1, 2}}) nil += Rat(r.in(-2, 2)) * a.matrix_unit(p, q);
    if (nil.is_zero()) continue;
    int m = 1;
    for (AElem pw = nil; !pw.is_zero(); pw = a.mul(pw, nil)) ++m;
    auto ring = make_ore(a, Derivation::ad(nil));
    const AElem x = random_base(r, a, 0);
    if (x.is_zero()) continue;
    EXPECT_LE(nilpotency_index(*ring, x), 2 * m - 1);
  }
}

TEST(Properties, RankIsOrderIndependent)
{
  Rng r(5);
  for (int i = 0; i < 20; ++i) {
    std::vector<SparseVec<int>> vs;
    for (int k = r.in(1, 8); k > 0; --k) {
      SparseVec<int> v;
      for (int t = r.in(1, 3); t > 0; --t) v.add_term(r.in(0, 4), Rat(r.in(-2, 2)));
      vs.push_back(v);
    }
    if (r.in(0, 1)) vs.push_back(vs.front() + vs.back());
    LinearSpan<int> s1, s2;
    for (const auto& v : vs) s1.insert(v);
    std::shuffle(vs.begin(), vs.end(), r.gen);
    for (const auto& v : vs) s2.insert(v);
    EXPECT_EQ(s1.rank(), s2.rank());
  }
}

TEST(Properties, BaseElementPrinterRoundTrip)
{
  Rng r(6);
  BaseSpec mp{BaseSpec::Kind::MatPoly, 2, "x", {}};
  BaseSpec pl{BaseSpec::Kind::Poly, 1, "y", {}};
  for (const auto& spec : {mp, pl}) {
    const auto a = build_base(spec);
    for (int i = 0; i < 30; ++i) {
      const AElem v = random_base(r, a, 3);
      EXPECT_EQ(parse_base_element(a, to_dsl(spec, v)), v) << to_dsl(spec, v);
    }
  }
}

TEST(Properties, ClosedFormMatchesAxiomReduction)
{
  Rng r(7);
  auto w = weyl_algebra();
  auto c = DiffAlgebra(make_ore(BaseAlgebra::matpoly(2), Derivation::ddx_plus_ad(1, AElem::unit({0, 1, 0}))));
  for (const DiffAlgebra* m : {&w, &c})
    for (int i = 0; i < 40; ++i) {
      const AElem a = random_base(r, m->base(), 2), b = random_base(r, m->base(), 2);
      const int p = r.in(0, 3), q = r.in(0, 3), n = r.in(0, 5);
      EXPECT_EQ(m->product(m->primitive(a).d(p), m->primitive(b).d(q), n), reduce_product(*m, a, p, b, q, n));
    }
}

TEST(Properties, ConformalAxiomsOnRandomElements)
{
  Rng r(8);
  auto w = weyl_algebra();
  for (int i = 0; i < 15; ++i) {
    const ConfElem u = random_conf(r, w), v = random_conf(r, w), x = random_conf(r, w);
    auto ax = check_derivation_axioms(w, u, v, 3, 3);
    EXPECT_TRUE(ax.pass) << ax.witness;
    auto loc = check_coefficient_locality(w, u, v, 2, 2);
    EXPECT_TRUE(loc.pass) << loc.witness;
    for (int mm = 0; mm <= 2; ++mm)
      for (int nn = 0; nn <= 2; ++nn) {
        ConfElem rhs;
        for (int j = 0; j <= mm; ++j) rhs += gen_binom(mm, j) * w.product(w.product(u, v, j), x, mm + nn - j);
        EXPECT_EQ(w.product(u, w.product(v, x, nn), mm), rhs);
      }
  }
}

TEST(Properties, GrowthIsMonotone)
{
  for (const auto& m : {weyl_algebra(), current_matrix_algebra(2)}) {
    auto g = growth_table(m, 5);
    for (std::size_t i = 1; i < g.rows.size(); ++i) EXPECT_LE(g.rows[i - 1].gamma, g.rows[i].gamma);
  }
}
