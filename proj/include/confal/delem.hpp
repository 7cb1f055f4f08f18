#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "confal/sparse.hpp"
#include "confal/upoly.hpp"

namespace confal {

/// Element of the free Q[d]-module on the symbols Key: sum_k q_k(d) * k.
/// Differential conformal elements use A-basis symbols as keys; presented
/// algebras use generator indices.
template <class Key>
class DElem {
 public:
  using key_type = Key;
  using CoordKey = std::pair<Key, int>;

  DElem() = default;
  static DElem basis(const Key& k, const DOp& q = DOp(1))
  {
    DElem e;
    e.add_term(k, q);
    return e;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, DOp>& terms() const { return terms_; }
  DOp coeff(const Key& k) const
  {
    auto it = terms_.find(k);
    return it == terms_.end() ? DOp() : it->second;
  }
  /// Highest power of d present; -1 for zero.
  int d_degree() const
  {
    int d = -1;
    for (const auto& [k, q] : terms_) d = std::max(d, q.degree());
    return d;
  }

  void add_term(const Key& k, const DOp& q)
  {
    if (q.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, q);
    if (!inserted) {
      it->second += q;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  DElem& operator+=(const DElem& o)
  {
    for (const auto& [k, q] : o.terms_) add_term(k, q);
    return *this;
  }
  DElem& operator-=(const DElem& o)
  {
    for (const auto& [k, q] : o.terms_) add_term(k, -q);
    return *this;
  }
  DElem& operator*=(const Rat& s)
  {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, q] : terms_) q *= s;
    return *this;
  }
  friend DElem operator+(DElem a, const DElem& b) { return a += b; }
  friend DElem operator-(DElem a, const DElem& b) { return a -= b; }
  friend DElem operator-(DElem a) { return a *= Rat(-1); }
  friend DElem operator*(const Rat& s, DElem a) { return a *= s; }
  friend DElem operator*(const DOp& q, const DElem& a)
  {
    DElem r;
    for (const auto& [k, p] : a.terms_) r.add_term(k, q * p);
    return r;
  }
  friend bool operator==(const DElem& a, const DElem& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const DElem& a, const DElem& b) { return a.terms_ < b.terms_; }

  /// d applied p times.
  DElem d(int p = 1) const
  {
    DElem r;
    for (const auto& [k, q] : terms_) r.terms_.emplace(k, q.shifted(p));
    return r;
  }

  /// Scalar multiple whose first nonzero coefficient is 1; equal for any two
  /// nonzero elements that are proportional over Q.
  DElem projective_normal() const
  {
    if (terms_.empty()) return *this;
    const DOp& first = terms_.begin()->second;
    return (Rat(1) / first.terms().begin()->second) * *this;
  }

  /// Q-coordinates (symbol, power of d).
  SparseVec<CoordKey> coords() const
  {
    SparseVec<CoordKey> v;
    for (const auto& [k, q] : terms_)
      for (const auto& [e, c] : q.terms()) v.add_term({k, e}, c);
    return v;
  }

  template <class Namer>
  std::string to_string(Namer&& name_of) const
  {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, q] : terms_) {
      if (!first) os << " + ";
      first = false;
      std::string n = name_of(k);
      if (q == DOp(1))
        os << n;
      else
        os << "(" << q.to_string("d") << ")*" << n;
    }
    return os.str();
  }

 private:
  std::map<Key, DOp> terms_;
};

/// Sesquilinear extension of a product given on symbols, using
///   (d u)_(n) v = -n u_(n-1) v
///   u_(n) (d v) = d(u_(n) v) + n u_(n-1) v.
/// Solved in closed form, for d^p a and d^q b:
///   (d^p a)_(n)(d^q b) = (-1)^p ff(n, p) sum_j binom(q, j) ff(n-p, j) d^(q-j) (a_(n-p-j) b).
/// `base(a, b, m)` returns a_(m) b for symbols.
template <class Key, class BaseProduct>
DElem<Key> extend_product(const DElem<Key>& u, const DElem<Key>& v, int n, BaseProduct&& base)
{
  DElem<Key> result;
  if (n < 0) return result;
  std::map<std::pair<std::pair<Key, Key>, int>, DElem<Key>> cache;
  auto symbol_product = [&](const Key& a, const Key& b, int m) -> const DElem<Key>& {
    auto key = std::make_pair(std::make_pair(a, b), m);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, base(a, b, m)).first;
    return it->second;
  };
  for (const auto& [a, qa] : u.terms())
    for (const auto& [b, qb] : v.terms())
      for (const auto& [p, ca] : qa.terms()) {
        if (p > n) continue;
        const Rat left = sign_power(p) * falling_factorial(n, p) * ca;
        const int rest = n - p;
        for (const auto& [q, cb] : qb.terms()) {
          for (int j = 0; j <= std::min(q, rest); ++j) {
            const DElem<Key>& prod = symbol_product(a, b, rest - j);
            if (prod.is_zero()) continue;
            Rat c = left * cb * gen_binom(q, j) * falling_factorial(rest, j);
            result += c * prod.d(q - j);
          }
        }
      }
  return result;
}

} // namespace confal
