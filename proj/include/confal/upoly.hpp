#pragma once

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "confal/rational.hpp"

namespace confal {

/// Sparse univariate polynomial over Rat. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
///
/// The tag keeps polynomials in x (elements of Q[x]) and polynomials in the
/// formal symbol d (elements of Q[d]) from being mixed by accident.
template <class Tag>
class UPoly {
 public:
  using term_map = std::map<int, Rat>;

  UPoly() = default;
  UPoly(const Rat& c) { add_term(0, c); }
  UPoly(long c) : UPoly(Rat(c)) {}

  static UPoly monomial(const Rat& c, int exponent)
  {
    UPoly p;
    p.add_term(exponent, c);
    return p;
  }
  static UPoly var() { return monomial(Rat(1), 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  /// -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  Rat leading() const { return terms_.empty() ? Rat(0) : terms_.rbegin()->second; }
  Rat coeff(int e) const
  {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }
  const term_map& terms() const { return terms_; }

  void add_term(int exponent, const Rat& c)
  {
    if (exponent < 0) throw std::invalid_argument("negative exponent in polynomial");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  UPoly& operator+=(const UPoly& o)
  {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  UPoly& operator-=(const UPoly& o)
  {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  UPoly& operator*=(const Rat& s)
  {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) { return a *= Rat(-1); }
  friend UPoly operator*(UPoly a, const Rat& s) { return a *= s; }
  friend UPoly operator*(const Rat& s, UPoly a) { return a *= s; }
  friend UPoly operator*(const UPoly& a, const UPoly& b)
  {
    UPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const UPoly& a, const UPoly& b) { return a.terms_ < b.terms_; }

  /// Multiplication by the indeterminate raised to k.
  UPoly shifted(int k) const
  {
    UPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  UPoly derive() const
  {
    UPoly r;
    for (const auto& [e, c] : terms_)
      if (e > 0) r.add_term(e - 1, c * e);
    return r;
  }

  Rat eval(const Rat& at) const
  {
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
      Rat p = 1;
      for (int i = 0; i < e; ++i) p *= at;
      acc += c * p;
    }
    return acc;
  }

  /// Euclidean division: *this = q * divisor + r with deg r < deg divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const
  {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    UPoly q, r = *this;
    const int dd = divisor.degree();
    const Rat lead = divisor.leading();
    while (!r.is_zero() && r.degree() >= dd) {
      UPoly step = monomial(r.leading() / lead, r.degree() - dd);
      q += step;
      r -= step * divisor;
    }
    return {q, r};
  }

  /// Division that must be exact; throws otherwise.
  UPoly exact_div(const UPoly& divisor) const
  {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
  }

  UPoly monic() const
  {
    if (is_zero()) return *this;
    return *this * (Rat(1) / leading());
  }

  std::string to_string(std::string_view var) const
  {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rat mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (e == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << "*";
      os << var;
      if (e > 1) os << "^" << e;
    }
    return os.str();
  }

 private:
  term_map terms_;
};

template <class Tag>
UPoly<Tag> poly_gcd(UPoly<Tag> a, UPoly<Tag> b)
{
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

struct XTag {};
struct DTag {};

/// Element of Q[x].
using Poly = UPoly<XTag>;
/// Element of Q[d], d the formal derivation of a conformal algebra.
using DOp = UPoly<DTag>;

inline Poly poly_derive(const Poly& p) { return p.derive(); }

} // namespace confal
