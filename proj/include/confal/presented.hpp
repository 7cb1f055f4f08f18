#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "confal/delem.hpp"
#include "confal/model.hpp"

namespace confal {

/// Element of the free Q[d]-module on the generators of a presentation.
using PresElem = DElem<int>;

/// Symbol (generator index, t-exponent) of the coefficient algebra.
using CoeffKey = std::pair<int, long>;
/// Normal-form element of Coeff C: a Q-combination of g t^k with g a module
/// generator. Every d^p g t^k has already been rewritten through
/// phi(d f t^k) = -k phi(f t^(k-1)).
using CoeffElem = SparseVec<CoeffKey>;

/// Structure constants of a finite-type conformal algebra: for each ordered
/// pair of generators, the list of n-th products for n = 0, 1, ... .
class ProductTable {
 public:
  ProductTable() = default;
  explicit ProductTable(std::vector<std::string> names) : names_(std::move(names)) {}

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  int index_of(const std::string& name) const
  {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw std::out_of_range("unknown generator: " + name);
    return static_cast<int>(it - names_.begin());
  }

  void set(int i, int j, int n, PresElem value)
  {
    check(i), check(j);
    if (n < 0) throw std::invalid_argument("product order must be nonnegative");
    auto& list = entries_[{i, j}];
    if (static_cast<int>(list.size()) <= n) list.resize(static_cast<std::size_t>(n) + 1);
    list[static_cast<std::size_t>(n)] = std::move(value);
    while (!list.empty() && list.back().is_zero()) list.pop_back();
    if (list.empty()) entries_.erase({i, j});
  }

  const PresElem& get(int i, int j, int n) const
  {
    static const PresElem zero;
    auto it = entries_.find({i, j});
    if (it == entries_.end() || n < 0 || n >= static_cast<int>(it->second.size())) return zero;
    return it->second[static_cast<std::size_t>(n)];
  }

  /// Largest n with a nonzero table entry; -1 for the zero table.
  int locality_bound() const
  {
    int n = -1;
    for (const auto& [ij, list] : entries_) n = std::max(n, static_cast<int>(list.size()) - 1);
    return n;
  }

  const std::map<std::pair<int, int>, std::vector<PresElem>>& entries() const { return entries_; }

 private:
  void check(int i) const
  {
    if (i < 0 || i >= size()) throw std::out_of_range("generator index out of range");
  }

  std::vector<std::string> names_;
  std::map<std::pair<int, int>, std::vector<PresElem>> entries_;
};

/// Conformal algebra given by a product table on a free Q[d]-module.
class PresentedAlgebra {
 public:
  using element_type = PresElem;
  using coeff_type = CoeffElem;

  explicit PresentedAlgebra(ProductTable table) : table_(std::move(table))
  {
    for (int i = 0; i < table_.size(); ++i) gens_.push_back(PresElem::basis(i));
  }

  const ProductTable& table() const { return table_; }
  const std::vector<PresElem>& generators() const { return gens_; }
  const std::vector<std::string>& generator_names() const { return table_.names(); }

  /// eval_product
  PresElem product(const PresElem& u, const PresElem& v, int n) const
  {
    return extend_product(u, v, n, [this](int a, int b, int m) { return table_.get(a, b, m); });
  }

  /// phi(u t^k) in normal form.
  CoeffElem coefficient(const PresElem& u, long k) const
  {
    CoeffElem r;
    for (const auto& [g, q] : u.terms())
      for (const auto& [p, c] : q.terms()) {
        Rat s = c * sign_power(p) * falling_factorial(k, p);
        if (s != 0) r.add_term({g, k - p}, s);
      }
    return r;
  }

  /// Product in Coeff C:
  ///   (a, l)(b, m) = sum_j binom(l, j) phi((a_(j) b) t^(l+m-j)),
  /// finite because a_(j) b vanishes past the table bound.
  CoeffElem coeff_mul(const CoeffElem& x, const CoeffElem& y) const
  {
    CoeffElem r;
    const int bound = table_.locality_bound();
    for (const auto& [ka, ca] : x.terms())
      for (const auto& [kb, cb] : y.terms()) {
        const auto [a, l] = ka;
        const auto [b, m] = kb;
        for (int j = 0; j <= bound; ++j) {
          const PresElem& p = table_.get(a, b, j);
          if (p.is_zero()) continue;
          Rat c = gen_binom(l, j);
          if (c == 0) continue;
          r.add_scaled(coefficient(p, l + m - j), c * ca * cb);
        }
      }
    return r;
  }
  CoeffElem coeff_zero() const { return {}; }

  /// d-degree of u + d-degree of v + table locality bound.
  int locality_search_bound(const PresElem& u, const PresElem& v) const
  {
    return std::max(0, u.d_degree()) + std::max(0, v.d_degree()) + std::max(0, table_.locality_bound());
  }

  LocalityDegree locality_degree(const PresElem& u, const PresElem& v) const
  {
    if (u.is_zero() || v.is_zero() || table_.locality_bound() < 0) return LocalityDegree::all_zero();
    return scan_locality(*this, u, v, locality_search_bound(u, v));
  }

  std::string to_string(const PresElem& u) const
  {
    return u.to_string([this](int g) { return table_.names()[static_cast<std::size_t>(g)]; });
  }
  std::string to_string(const CoeffElem& x) const
  {
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [k, c] : x.terms()) {
      if (!s.empty()) s += " + ";
      s += c.get_str() + "*" + table_.names()[static_cast<std::size_t>(k.first)] + "*t^" + std::to_string(k.second);
    }
    return s;
  }

 private:
  ProductTable table_;
  std::vector<PresElem> gens_;
};

static_assert(ConformalModel<PresentedAlgebra>);

/// Product table of Cur(Mat_n(Q)) on generators u_ij: u_ij (0) u_jl = u_il.
inline ProductTable current_matrix_table(int n)
{
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) names.push_back("u" + std::to_string(i + 1) + std::to_string(j + 1));
  ProductTable t(names);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) t.set(i * n + j, j * n + l, 0, PresElem::basis(i * n + l));
  return t;
}

/// Product table of Cur(A) for a finite-dimensional A with structure
/// constants table[(i*d + j)*d + k].
inline ProductTable current_table(const std::vector<std::string>& names, const std::vector<Rat>& table)
{
  const int d = static_cast<int>(names.size());
  ProductTable t(names);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      PresElem p;
      for (int k = 0; k < d; ++k) {
        const Rat& c = table[(static_cast<std::size_t>(i) * d + j) * d + k];
        if (c != 0) p.add_term(k, DOp(c));
      }
      if (!p.is_zero()) t.set(i, j, 0, p);
    }
  return t;
}

} // namespace confal
