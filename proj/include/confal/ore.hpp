#pragma once

#include <algorithm>
#include <compare>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "confal/errors.hpp"
#include "confal/matpoly.hpp"
#include "confal/sparse.hpp"

namespace confal {

/// Basis symbol of a base algebra A.
///   Q[x]:        (0, 0, k)  for x^k
///   Mat_n(Q[x]): (i, j, k)  for x^k E_ij
///   finite-dim:  (i, 0, 0)  for the i-th basis vector
struct BasisKey {
  int row = 0;
  int col = 0;
  int deg = 0;
  auto operator<=>(const BasisKey&) const = default;
};

/// Element of A in its canonical basis.
using AElem = SparseVec<BasisKey>;

enum class BaseKind { Poly, MatPoly, FinDim };

class BaseAlgebra {
 public:
  static BaseAlgebra poly(std::string var = "x")
  {
    BaseAlgebra a;
    a.kind_ = BaseKind::Poly;
    a.n_ = 1;
    a.var_ = std::move(var);
    return a;
  }

  static BaseAlgebra matpoly(int n, std::string var = "x")
  {
    if (n < 1) throw std::invalid_argument("matrix size must be positive");
    BaseAlgebra a;
    a.kind_ = BaseKind::MatPoly;
    a.n_ = n;
    a.var_ = std::move(var);
    return a;
  }

  /// table[(i*d + j)*d + k] is the coefficient of b_k in b_i b_j.
  /// Associativity is checked on every basis triple.
  static BaseAlgebra findim(int d, std::vector<Rat> table, std::vector<std::string> names = {})
  {
    if (d < 1) throw std::invalid_argument("finite-dimensional algebra needs positive dimension");
    if (table.size() != static_cast<std::size_t>(d) * d * d)
      throw std::invalid_argument("structure table must have d^3 entries");
    BaseAlgebra a;
    a.kind_ = BaseKind::FinDim;
    a.n_ = d;
    a.table_ = std::move(table);
    if (names.empty())
      for (int i = 0; i < d; ++i) names.push_back("b(" + std::to_string(i + 1) + ")");
    if (static_cast<int>(names.size()) != d) throw std::invalid_argument("basis name count mismatch");
    a.names_ = std::move(names);
    a.check_associative();
    a.find_unit();
    return a;
  }

  /// Mat_n(Q) as a finite-dimensional algebra; basis index i*n + j is E_ij.
  static BaseAlgebra matrix_units(int n)
  {
    if (n < 1) throw std::invalid_argument("matrix size must be positive");
    const int d = n * n;
    std::vector<Rat> table(static_cast<std::size_t>(d) * d * d);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        names.push_back("E(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        for (int l = 0; l < n; ++l) table[(static_cast<std::size_t>(i * n + j) * d + (j * n + l)) * d + (i * n + l)] = 1;
      }
    BaseAlgebra a = findim(d, std::move(table), std::move(names));
    a.matrix_n_ = n;
    return a;
  }

  BaseKind kind() const { return kind_; }
  /// Matrix size for MatPoly, dimension for FinDim, 1 for Poly.
  int size() const { return n_; }
  const std::string& var() const { return var_; }
  /// For algebras built by matrix_units, the matrix size; otherwise 0.
  int matrix_size() const { return matrix_n_; }
  bool has_unit() const { return kind_ != BaseKind::FinDim || unit_.has_value(); }

  AElem basis(const BasisKey& k) const { return AElem::unit(k); }
  AElem scalar(const Rat& c) const
  {
    AElem r = one();
    r *= c;
    return r;
  }

  AElem one() const
  {
    switch (kind_) {
      case BaseKind::Poly: return AElem::unit({0, 0, 0});
      case BaseKind::MatPoly: {
        AElem r;
        for (int i = 0; i < n_; ++i) r.add_term({i, i, 0}, Rat(1));
        return r;
      }
      case BaseKind::FinDim:
        if (!unit_) throw std::logic_error("finite-dimensional algebra has no unit");
        return *unit_;
    }
    return {};
  }

  /// x (times the identity matrix). Not defined for FinDim.
  AElem x() const
  {
    if (kind_ == BaseKind::FinDim) throw std::logic_error("finite-dimensional algebra has no polynomial variable");
    AElem r;
    for (int i = 0; i < n_; ++i) r.add_term({i, i, 1}, Rat(1));
    return r;
  }

  /// E_ij with 0-based indices (x-degree 0).
  AElem matrix_unit(int i, int j) const
  {
    if (kind_ == BaseKind::MatPoly) {
      check_index(i), check_index(j);
      return AElem::unit({i, j, 0});
    }
    if (kind_ == BaseKind::FinDim && matrix_n_ > 0) {
      if (i < 0 || j < 0 || i >= matrix_n_ || j >= matrix_n_) throw std::out_of_range("matrix unit index");
      return AElem::unit({i * matrix_n_ + j, 0, 0});
    }
    if (kind_ == BaseKind::Poly && i == 0 && j == 0) return one();
    throw std::logic_error("matrix units are not available in this base algebra");
  }

  AElem mul(const AElem& a, const AElem& b) const
  {
    AElem r;
    for (const auto& [ka, ca] : a.terms())
      for (const auto& [kb, cb] : b.terms()) mul_basis(r, ka, kb, ca * cb);
    return r;
  }

  /// Generators of A as an algebra (together with the unit).
  std::vector<AElem> algebra_generators() const
  {
    std::vector<AElem> gens;
    switch (kind_) {
      case BaseKind::Poly: gens.push_back(x()); break;
      case BaseKind::MatPoly:
        for (int i = 0; i < n_; ++i)
          for (int j = 0; j < n_; ++j) gens.push_back(matrix_unit(i, j));
        gens.push_back(x());
        break;
      case BaseKind::FinDim:
        for (int i = 0; i < n_; ++i) gens.push_back(AElem::unit({i, 0, 0}));
        break;
    }
    return gens;
  }

  /// Highest x-degree present; 0 for FinDim, -1 for zero.
  int degree(const AElem& a) const
  {
    int d = -1;
    for (const auto& [k, c] : a.terms()) d = std::max(d, k.deg);
    return d;
  }

  /// All basis symbols of x-degree <= bound.
  std::vector<BasisKey> filtration_basis(int bound) const
  {
    std::vector<BasisKey> keys;
    if (kind_ == BaseKind::FinDim) {
      for (int i = 0; i < n_; ++i) keys.push_back({i, 0, 0});
      return keys;
    }
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k <= bound; ++k) keys.push_back({i, j, k});
    return keys;
  }

  Poly to_poly(const AElem& a) const
  {
    if (kind_ != BaseKind::Poly) throw std::logic_error("not a polynomial ring");
    Poly p;
    for (const auto& [k, c] : a.terms()) p.add_term(k.deg, c);
    return p;
  }
  AElem from_poly(const Poly& p) const
  {
    AElem r;
    for (const auto& [e, c] : p.terms()) r.add_term({0, 0, e}, c);
    return r;
  }
  MatPoly to_matpoly(const AElem& a) const
  {
    if (kind_ == BaseKind::FinDim) throw std::logic_error("not a matrix polynomial ring");
    MatPoly m(n_);
    for (const auto& [k, c] : a.terms()) m.at(k.row, k.col).add_term(k.deg, c);
    return m;
  }
  AElem from_matpoly(const MatPoly& m) const
  {
    AElem r;
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < m.dim(); ++j)
        for (const auto& [e, c] : m.at(i, j).terms()) r.add_term({i, j, e}, c);
    return r;
  }

  /// Two-sided invertibility: nonzero-constant determinant for matrix
  /// rings, nonsingular left multiplication for finite-dimensional ones.
  bool is_invertible(const AElem& a) const
  {
    if (a.is_zero()) return false;
    switch (kind_) {
      case BaseKind::Poly: {
        Poly p = to_poly(a);
        return p.is_constant();
      }
      case BaseKind::MatPoly: {
        Poly det = to_matpoly(a).determinant();
        return !det.is_zero() && det.is_constant();
      }
      case BaseKind::FinDim: {
        LinearSpan<BasisKey> span;
        for (int i = 0; i < n_; ++i) span.insert(mul(a, AElem::unit({i, 0, 0})));
        return span.rank() == n_;
      }
    }
    return false;
  }

  std::string to_string(const AElem& a) const
  {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : a.terms()) {
      Rat mag = abs(c);
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      first = false;
      std::string sym = symbol(k);
      if (sym.empty()) {
        os << mag.get_str();
      } else {
        if (mag != 1) os << mag.get_str() << "*";
        os << sym;
      }
    }
    return os.str();
  }

  friend bool operator==(const BaseAlgebra& a, const BaseAlgebra& b)
  {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.var_ == b.var_ && a.table_ == b.table_;
  }

 private:
  BaseAlgebra() = default;

  void check_index(int i) const
  {
    if (i < 0 || i >= n_) throw std::out_of_range("matrix index out of range");
  }

  Rat structure(int i, int j, int k) const { return table_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k]; }

  void mul_basis(AElem& out, const BasisKey& a, const BasisKey& b, const Rat& c) const
  {
    switch (kind_) {
      case BaseKind::Poly: out.add_term({0, 0, a.deg + b.deg}, c); break;
      case BaseKind::MatPoly:
        if (a.col == b.row) out.add_term({a.row, b.col, a.deg + b.deg}, c);
        break;
      case BaseKind::FinDim:
        for (int k = 0; k < n_; ++k) {
          const Rat& s = table_[(static_cast<std::size_t>(a.row) * n_ + b.row) * n_ + k];
          if (s != 0) out.add_term({k, 0, 0}, c * s);
        }
        break;
    }
  }

  std::string symbol(const BasisKey& k) const
  {
    auto xpow = [&](int d) -> std::string {
      if (d == 0) return "";
      return d == 1 ? var_ : var_ + "^" + std::to_string(d);
    };
    switch (kind_) {
      case BaseKind::Poly: return xpow(k.deg);
      case BaseKind::MatPoly: {
        std::string s = xpow(k.deg);
        std::string e = "E(" + std::to_string(k.row + 1) + "," + std::to_string(k.col + 1) + ")";
        return s.empty() ? e : s + "*" + e;
      }
      case BaseKind::FinDim: return names_[static_cast<std::size_t>(k.row)];
    }
    return "?";
  }

  void check_associative() const
  {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) {
          AElem bi = AElem::unit({i, 0, 0}), bj = AElem::unit({j, 0, 0}), bk = AElem::unit({k, 0, 0});
          if (mul(mul(bi, bj), bk) != mul(bi, mul(bj, bk)))
            throw std::invalid_argument("structure constants are not associative on (" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
        }
  }

  /// Solves u b_j = b_j = b_j u for all j.
  void find_unit()
  {
    // Unknown u = sum_i c_i b_i; the equations are linear in c. Collect the
    // map c -> (u b_j - b_j, b_j u - b_j)_j column by column and look for a
    // solution of M c = rhs by adjoining rhs as an extra column.
    using Key = std::pair<int, BasisKey>;  // (equation block, coordinate)
    LinearSpan<Key> span;
    for (int i = 0; i < n_; ++i) {
      SparseVec<Key> col;
      AElem bi = AElem::unit({i, 0, 0});
      for (int j = 0; j < n_; ++j) {
        AElem bj = AElem::unit({j, 0, 0});
        const AElem l = mul(bi, bj), r = mul(bj, bi);
        for (const auto& [k, c] : l.terms()) col.add_term({2 * j, k}, c);
        for (const auto& [k, c] : r.terms()) col.add_term({2 * j + 1, k}, c);
      }
      span.insert(col);
    }
    SparseVec<Key> rhs;
    for (int j = 0; j < n_; ++j) {
      rhs.add_term({2 * j, {j, 0, 0}}, Rat(1));
      rhs.add_term({2 * j + 1, {j, 0, 0}}, Rat(1));
    }
    auto sol = span.express(rhs);
    if (!sol) return;
    AElem u;
    for (const auto& [i, c] : sol->terms()) u.add_term({i, 0, 0}, c);
    unit_ = u;
  }

  BaseKind kind_ = BaseKind::Poly;
  int n_ = 1;
  int matrix_n_ = 0;
  std::string var_ = "x";
  std::vector<Rat> table_;
  std::vector<std::string> names_;
  std::optional<AElem> unit_;
};

/// Derivation of a base algebra: c * d/dx + ad(r) + M, where any part may be
/// absent and M is an explicit linear action on a finite-dimensional basis.
class Derivation {
 public:
  enum class Kind { Zero, DDx, DDxPlusAd, Matrix };

  static Derivation zero() { return Derivation(Kind::Zero); }
  static Derivation ddx(const Rat& scale = Rat(1))
  {
    Derivation d(Kind::DDx);
    d.scale_ = scale;
    return d;
  }
  /// scale * d/dx + ad(r); scale may be zero (pure inner derivation).
  static Derivation ddx_plus_ad(const Rat& scale, AElem r)
  {
    Derivation d(Kind::DDxPlusAd);
    d.scale_ = scale;
    d.ad_ = std::move(r);
    return d;
  }
  static Derivation ad(AElem r) { return ddx_plus_ad(Rat(0), std::move(r)); }
  /// images[j] lists the coordinates of delta(b_j).
  static Derivation matrix(std::vector<std::vector<Rat>> images)
  {
    Derivation d(Kind::Matrix);
    d.images_ = std::move(images);
    return d;
  }

  Kind kind() const { return kind_; }
  const Rat& scale() const { return scale_; }
  const AElem& ad_element() const { return ad_; }
  const std::vector<std::vector<Rat>>& images() const { return images_; }

  AElem apply(const BaseAlgebra& base, const AElem& a) const
  {
    AElem r;
    switch (kind_) {
      case Kind::Zero: break;
      case Kind::DDx: r = ddx_part(a); break;
      case Kind::DDxPlusAd:
        r = ddx_part(a);
        r += base.mul(ad_, a);
        r -= base.mul(a, ad_);
        break;
      case Kind::Matrix:
        for (const auto& [k, c] : a.terms()) {
          const auto& img = images_.at(static_cast<std::size_t>(k.row));
          for (std::size_t i = 0; i < img.size(); ++i)
            if (img[i] != 0) r.add_term({static_cast<int>(i), 0, 0}, c * img[i]);
        }
        break;
    }
    return r;
  }

  std::string to_string(const BaseAlgebra& base) const
  {
    switch (kind_) {
      case Kind::Zero: return "zero";
      case Kind::DDx: return (scale_ == 1 ? "" : scale_.get_str() + "*") + "d/d" + base.var();
      case Kind::DDxPlusAd: {
        std::string ad = "ad(" + base.to_string(ad_) + ")";
        if (scale_ == 0) return ad;
        return (scale_ == 1 ? "" : scale_.get_str() + "*") + "d/d" + base.var() + " + " + ad;
      }
      case Kind::Matrix: return "matrix";
    }
    return "?";
  }

 private:
  explicit Derivation(Kind k) : kind_(k) {}

  AElem ddx_part(const AElem& a) const
  {
    AElem r;
    if (scale_ == 0) return r;
    for (const auto& [k, c] : a.terms())
      if (k.deg > 0) r.add_term({k.row, k.col, k.deg - 1}, c * k.deg * scale_);
    return r;
  }

  Kind kind_;
  Rat scale_ = 0;
  AElem ad_;
  std::vector<std::vector<Rat>> images_;
};

/// The pair (A, delta) defining A[t, t^-1; delta], with the iteration bound
/// used for local nilpotency. Construction checks the Leibniz rule on all
/// pairs of algebra generators (and the unit) and local nilpotency on each
/// generator.
class OreRing {
 public:
  static constexpr int kDefaultBound = 64;

  OreRing(BaseAlgebra base, Derivation delta, int bound = kDefaultBound)
      : base_(std::move(base)), delta_(std::move(delta)), bound_(bound)
  {
    validate();
  }

  const BaseAlgebra& base() const { return base_; }
  const Derivation& derivation() const { return delta_; }
  int bound() const { return bound_; }

  AElem delta(const AElem& a) const { return delta_.apply(base_, a); }
  AElem delta_power(AElem a, int m) const
  {
    for (int i = 0; i < m && !a.is_zero(); ++i) a = delta(a);
    return a;
  }
  AElem mul(const AElem& a, const AElem& b) const { return base_.mul(a, b); }

 private:
  void validate() const
  {
    if (base_.kind() == BaseKind::FinDim) {
      if ((delta_.kind() == Derivation::Kind::DDx && delta_.scale() != 0) ||
          (delta_.kind() == Derivation::Kind::DDxPlusAd && delta_.scale() != 0))
        throw std::invalid_argument("d/dx is not defined on a finite-dimensional algebra");
      if (delta_.kind() == Derivation::Kind::Matrix) {
        const auto& img = delta_.images();
        if (static_cast<int>(img.size()) != base_.size())
          throw std::invalid_argument("derivation matrix must have one image per basis vector");
        for (const auto& row : img)
          if (static_cast<int>(row.size()) != base_.size())
            throw std::invalid_argument("derivation image has wrong length");
      }
    } else if (delta_.kind() == Derivation::Kind::Matrix) {
      throw std::invalid_argument("matrix derivations require a finite-dimensional base");
    }
    std::vector<AElem> gens = base_.algebra_generators();
    if (base_.has_unit()) gens.push_back(base_.one());
    for (const auto& a : gens)
      for (const auto& b : gens) {
        AElem lhs = delta(mul(a, b));
        AElem rhs = mul(delta(a), b) + mul(a, delta(b));
        if (lhs != rhs)
          throw std::invalid_argument("derivation violates the Leibniz rule on (" + base_.to_string(a) + ", " +
                                      base_.to_string(b) + ")");
      }
    for (const auto& a : gens) {
      AElem cur = a;
      int steps = 0;
      while (!cur.is_zero()) {
        if (++steps > bound_)
          throw BoundExceeded("derivation is not locally nilpotent on generator " + base_.to_string(a));
        cur = delta(cur);
      }
    }
  }

  BaseAlgebra base_;
  Derivation delta_;
  int bound_;
};

using OreContext = std::shared_ptr<const OreRing>;

inline OreContext make_ore(BaseAlgebra base, Derivation delta, int bound = OreRing::kDefaultBound)
{
  return std::make_shared<const OreRing>(std::move(base), std::move(delta), bound);
}

/// Minimal m >= 1 with delta^m(a) = 0.
inline int nilpotency_index(const OreRing& ring, const AElem& a)
{
  if (a.is_zero()) throw std::invalid_argument("nilpotency_index of zero");
  AElem cur = a;
  for (int m = 1; m <= ring.bound(); ++m) {
    cur = ring.delta(cur);
    if (cur.is_zero()) return m;
  }
  throw BoundExceeded("delta^m(a) != 0 for all m <= " + std::to_string(ring.bound()));
}

/// Element of A[t, t^-1; delta] in normal form sum_k a_k t^k (coefficients on
/// the left). Multiplication moves t^n across b with
///   t^n b = sum_i (-1)^i binom(n, i) delta^i(b) t^(n-i),
/// which for n = 1 is the Ore relation b t - t b = delta(b).
class SkewLaurent {
 public:
  using CoordKey = std::pair<long, BasisKey>;

  SkewLaurent() = default;
  explicit SkewLaurent(OreContext ctx) : ctx_(std::move(ctx)) {}

  static SkewLaurent monomial(OreContext ctx, const AElem& a, long k)
  {
    SkewLaurent s(std::move(ctx));
    s.add_term(k, a);
    return s;
  }
  static SkewLaurent t_power(const OreContext& ctx, long k) { return monomial(ctx, ctx->base().one(), k); }
  static SkewLaurent constant(const OreContext& ctx, const AElem& a) { return monomial(ctx, a, 0); }

  const OreContext& context() const { return ctx_; }
  const std::map<long, AElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  AElem coeff(long k) const
  {
    auto it = terms_.find(k);
    return it == terms_.end() ? AElem() : it->second;
  }

  void add_term(long k, const AElem& a)
  {
    if (a.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, a);
    if (!inserted) {
      it->second += a;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SkewLaurent& operator+=(const SkewLaurent& o)
  {
    adopt(o);
    for (const auto& [k, a] : o.terms_) add_term(k, a);
    return *this;
  }
  SkewLaurent& operator-=(const SkewLaurent& o)
  {
    adopt(o);
    for (const auto& [k, a] : o.terms_) add_term(k, -a);
    return *this;
  }
  SkewLaurent& operator*=(const Rat& s)
  {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, a] : terms_) a *= s;
    return *this;
  }
  friend SkewLaurent operator+(SkewLaurent a, const SkewLaurent& b) { return a += b; }
  friend SkewLaurent operator-(SkewLaurent a, const SkewLaurent& b) { return a -= b; }
  friend SkewLaurent operator-(SkewLaurent a) { return a *= Rat(-1); }
  friend SkewLaurent operator*(const Rat& s, SkewLaurent a) { return a *= s; }

  friend SkewLaurent operator*(const SkewLaurent& u, const SkewLaurent& v) { return skew_mul(u, v); }
  friend bool operator==(const SkewLaurent& a, const SkewLaurent& b) { return a.terms_ == b.terms_; }

  friend SkewLaurent skew_mul(const SkewLaurent& u, const SkewLaurent& v)
  {
    const OreContext& ctx = u.ctx_ ? u.ctx_ : v.ctx_;
    if (u.ctx_ && v.ctx_ && u.ctx_ != v.ctx_ && !(u.ctx_->base() == v.ctx_->base()))
      throw std::invalid_argument("skew_mul: operands over different rings");
    SkewLaurent r(ctx);
    if (u.is_zero() || v.is_zero()) return r;
    const OreRing& ring = *ctx;
    for (const auto& [m, b] : v.terms_) {
      // delta^i(b) is shared by every left term.
      std::vector<AElem> iterates{b};
      for (const auto& [n, a] : u.terms_) {
        for (long i = 0;; ++i) {
          if (n >= 0 && i > n) break;
          while (static_cast<long>(iterates.size()) <= i) {
            if (static_cast<int>(iterates.size()) > ring.bound())
              throw BoundExceeded("skew_mul: delta iterates do not vanish within the bound");
            iterates.push_back(ring.delta(iterates.back()));
          }
          const AElem& di = iterates[static_cast<std::size_t>(i)];
          if (di.is_zero()) break;
          Rat c = sign_power(i) * gen_binom(n, i);
          if (c == 0) continue;
          AElem prod = ring.mul(a, di);
          prod *= c;
          r.add_term(n + m - i, prod);
        }
      }
    }
    return r;
  }

  /// Flattened Q-coordinates (t-exponent, basis symbol).
  SparseVec<CoordKey> coords() const
  {
    SparseVec<CoordKey> v;
    for (const auto& [k, a] : terms_)
      for (const auto& [key, c] : a.terms()) v.add_term({k, key}, c);
    return v;
  }

  std::string to_string() const
  {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, a] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << ctx_->base().to_string(a) << ")";
      if (k != 0) os << "*t^" << k;
    }
    return os.str();
  }

 private:
  void adopt(const SkewLaurent& o)
  {
    if (!ctx_) ctx_ = o.ctx_;
  }

  OreContext ctx_;
  std::map<long, AElem> terms_;
};

/// Localized Weyl data: (Mat_n(Q[x]), entrywise d/dx). For n = 1 the base is
/// Q[x] itself, in which x t - t x = 1.
inline OreContext weyl_instance(int n)
{
  if (n < 1) throw std::invalid_argument("weyl_instance: n must be positive");
  if (n == 1) return make_ore(BaseAlgebra::poly("x"), Derivation::ddx());
  return make_ore(BaseAlgebra::matpoly(n, "x"), Derivation::ddx());
}

} // namespace confal
