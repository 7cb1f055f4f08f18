#pragma once

#include <stdexcept>
#include <vector>

#include "confal/upoly.hpp"

namespace confal {

/// Square matrix over Q[x]. Indices are 0-based.
class MatPoly {
 public:
  MatPoly() = default;
  explicit MatPoly(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n)
  {
    if (n < 1) throw std::invalid_argument("MatPoly dimension must be positive");
  }

  static MatPoly identity(int n)
  {
    MatPoly m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly(1);
    return m;
  }
  static MatPoly unit(int n, int i, int j, const Poly& p = Poly(1))
  {
    MatPoly m(n);
    m.at(i, j) = p;
    return m;
  }

  int dim() const { return n_; }
  Poly& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  const Poly& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

  bool is_zero() const
  {
    for (const auto& p : entries_)
      if (!p.is_zero()) return false;
    return true;
  }

  MatPoly& operator+=(const MatPoly& o)
  {
    check_same(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }
  MatPoly& operator-=(const MatPoly& o)
  {
    check_same(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }
  friend MatPoly operator+(MatPoly a, const MatPoly& b) { return a += b; }
  friend MatPoly operator-(MatPoly a, const MatPoly& b) { return a -= b; }
  friend MatPoly operator*(const Rat& s, MatPoly a)
  {
    for (auto& p : a.entries_) p *= s;
    return a;
  }
  friend MatPoly operator*(const MatPoly& a, const MatPoly& b)
  {
    a.check_same(b);
    MatPoly r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (int j = 0; j < a.n_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return r;
  }
  friend bool operator==(const MatPoly& a, const MatPoly& b) { return a.n_ == b.n_ && a.entries_ == b.entries_; }

  MatPoly derive() const
  {
    MatPoly r(n_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k].derive();
    return r;
  }

  /// Fraction-free (Bareiss) determinant; every division is exact in Q[x].
  Poly determinant() const
  {
    std::vector<Poly> m = entries_;
    auto el = [&](int i, int j) -> Poly& { return m[static_cast<std::size_t>(i) * n_ + j]; };
    Poly prev(1);
    Rat sign = 1;
    for (int k = 0; k < n_ - 1; ++k) {
      if (el(k, k).is_zero()) {
        int swap = -1;
        for (int i = k + 1; i < n_; ++i)
          if (!el(i, k).is_zero()) {
            swap = i;
            break;
          }
        if (swap < 0) return Poly();
        for (int j = 0; j < n_; ++j) std::swap(el(k, j), el(swap, j));
        sign = -sign;
      }
      for (int i = k + 1; i < n_; ++i)
        for (int j = k + 1; j < n_; ++j)
          el(i, j) = (el(k, k) * el(i, j) - el(i, k) * el(k, j)).exact_div(prev);
      prev = el(k, k);
    }
    return sign * el(n_ - 1, n_ - 1);
  }

 private:
  void check_same(const MatPoly& o) const
  {
    if (o.n_ != n_) throw std::invalid_argument("MatPoly dimension mismatch");
  }

  int n_ = 0;
  std::vector<Poly> entries_;
};

} // namespace confal
