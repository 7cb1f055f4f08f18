#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "confal/delem.hpp"
#include "confal/model.hpp"
#include "confal/ore.hpp"

namespace confal {

/// sum_a q_a(d) f_a with f_a = sum_n a t^n z^(-n-1), indexed by A-basis
/// symbols so that f_(a+b) = f_a + f_b holds by construction.
using ConfElem = DElem<BasisKey>;

/// Differential conformal algebra over A[t, t^-1; delta], with a declared
/// generating set. Products of primitives follow
///   f_a (m) f_b = f_((-1)^m a delta^m(b)).
class DiffAlgebra {
 public:
  using element_type = ConfElem;
  using coeff_type = SkewLaurent;

  DiffAlgebra(OreContext ctx, std::vector<std::pair<std::string, AElem>> generators = {}) : ctx_(std::move(ctx))
  {
    for (auto& [name, a] : generators) {
      names_.push_back(std::move(name));
      gen_base_.push_back(a);
      gens_.push_back(primitive(a));
    }
  }

  const OreContext& context() const { return ctx_; }
  const OreRing& ring() const { return *ctx_; }
  const BaseAlgebra& base() const { return ctx_->base(); }
  const std::vector<ConfElem>& generators() const { return gens_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<AElem>& generator_base_elements() const { return gen_base_; }

  ConfElem primitive(const AElem& a) const
  {
    ConfElem f;
    for (const auto& [k, c] : a.terms()) f.add_term(k, DOp(c));
    return f;
  }

  /// nth_product
  ConfElem product(const ConfElem& u, const ConfElem& v, int n) const
  {
    return extend_product(u, v, n, [this](const BasisKey& a, const BasisKey& b, int m) {
      AElem db = ctx_->delta_power(AElem::unit(b), m);
      if (db.is_zero()) return ConfElem();
      AElem prod = ctx_->mul(AElem::unit(a), db);
      prod *= sign_power(m);
      return primitive(prod);
    });
  }

  /// u(n) in A[t, t^-1; delta], iterating (d a)(n) = -n a(n-1):
  /// (d^p f_a)(n) = (-1)^p ff(n, p) a t^(n-p).
  SkewLaurent coefficient(const ConfElem& u, long n) const
  {
    SkewLaurent s(ctx_);
    for (const auto& [k, q] : u.terms())
      for (const auto& [p, c] : q.terms()) {
        Rat s_c = c * sign_power(p) * falling_factorial(n, p);
        if (s_c == 0) continue;
        s.add_term(n - p, AElem::unit(k, s_c));
      }
    return s;
  }

  SkewLaurent coeff_mul(const SkewLaurent& a, const SkewLaurent& b) const { return skew_mul(a, b); }
  SkewLaurent coeff_zero() const { return SkewLaurent(ctx_); }

  SkewLaurent product_coeff_oracle(const ConfElem& u, const ConfElem& v, int n, long k) const
  {
    return confal::product_coeff_oracle(*this, u, v, n, k);
  }

  /// (max d-degree of u) + (max d-degree of v) + max nilpotency index over
  /// the basis support of v. Products beyond this order vanish.
  int locality_search_bound(const ConfElem& u, const ConfElem& v) const
  {
    if (u.is_zero() || v.is_zero()) return 0;
    int nil = 0;
    for (const auto& [k, q] : v.terms()) nil = std::max(nil, nilpotency_index(*ctx_, AElem::unit(k)));
    return std::max(0, u.d_degree()) + std::max(0, v.d_degree()) + nil;
  }

  LocalityDegree locality_degree(const ConfElem& u, const ConfElem& v) const
  {
    if (u.is_zero() || v.is_zero()) return LocalityDegree::all_zero();
    return scan_locality(*this, u, v, locality_search_bound(u, v));
  }

  std::string to_string(const ConfElem& u) const
  {
    return u.to_string([this](const BasisKey& k) { return "f[" + base().to_string(AElem::unit(k)) + "]"; });
  }

 private:
  OreContext ctx_;
  std::vector<std::string> names_;
  std::vector<AElem> gen_base_;
  std::vector<ConfElem> gens_;
};

static_assert(ConformalModel<DiffAlgebra>);

/// Conformal Weyl algebra over Q[x][t, t^-1; d/dx] with e = f_1, L = f_x.
inline DiffAlgebra weyl_algebra()
{
  OreContext ctx = weyl_instance(1);
  const BaseAlgebra& a = ctx->base();
  return DiffAlgebra(ctx, {{"e", a.one()}, {"L", a.x()}});
}

/// Current algebra Cur(Mat_n(Q)), realized over Mat_n(Q[x]) with delta = 0 and
/// generators u_ij = f_(E_ij).
inline DiffAlgebra current_matrix_algebra(int n)
{
  OreContext ctx = make_ore(BaseAlgebra::matpoly(n, "x"), Derivation::zero());
  std::vector<std::pair<std::string, AElem>> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gens.emplace_back("u" + std::to_string(i + 1) + std::to_string(j + 1), ctx->base().matrix_unit(i, j));
  return DiffAlgebra(ctx, std::move(gens));
}

} // namespace confal
