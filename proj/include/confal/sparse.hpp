#pragma once

#include <map>
#include <optional>
#include <vector>

#include "confal/rational.hpp"

namespace confal {

/// Finite Q-linear combination of basis symbols. No zero coefficients are
/// stored.
template <class Key>
class SparseVec {
 public:
  using key_type = Key;
  using term_map = std::map<Key, Rat>;

  SparseVec() = default;
  static SparseVec unit(const Key& k, const Rat& c = Rat(1))
  {
    SparseVec v;
    v.add_term(k, c);
    return v;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const term_map& terms() const { return terms_; }
  Rat coeff(const Key& k) const
  {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const Key& k, const Rat& c)
  {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add_scaled(const SparseVec& o, const Rat& s)
  {
    if (s == 0) return;
    for (const auto& [k, c] : o.terms_) add_term(k, c * s);
  }

  SparseVec& operator+=(const SparseVec& o)
  {
    add_scaled(o, Rat(1));
    return *this;
  }
  SparseVec& operator-=(const SparseVec& o)
  {
    add_scaled(o, Rat(-1));
    return *this;
  }
  SparseVec& operator*=(const Rat& s)
  {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend SparseVec operator-(SparseVec a) { return a *= Rat(-1); }
  friend SparseVec operator*(const Rat& s, SparseVec a) { return a *= s; }
  friend SparseVec operator*(SparseVec a, const Rat& s) { return a *= s; }
  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const SparseVec& a, const SparseVec& b) { return a.terms_ < b.terms_; }

 private:
  term_map terms_;
};

/// Incremental row echelon form over Q. Every inserted vector gets an input
/// index; rows remember how they were formed from the inputs, so membership
/// queries return coordinates and dependent insertions return the linear
/// relation they satisfy (one kernel vector per dependency).
template <class Key>
class LinearSpan {
 public:
  struct Insertion {
    int index;
    bool independent;
    /// For dependent inputs: coefficients c_i with sum c_i * input_i = 0,
    /// including the new input with coefficient 1.
    SparseVec<int> relation;
  };

  Insertion insert(const SparseVec<Key>& v)
  {
    const int idx = static_cast<int>(inputs_);
    ++inputs_;
    auto [residual, combo] = reduce(v);
    combo.add_term(idx, Rat(1));
    if (residual.is_zero()) return {idx, false, combo};
    const Key pivot = residual.terms().begin()->first;
    const Rat inv = Rat(1) / residual.terms().begin()->second;
    residual *= inv;
    combo *= inv;
    rows_.emplace(pivot, Row{std::move(residual), std::move(combo)});
    independent_.push_back(idx);
    return {idx, true, {}};
  }

  bool contains(const SparseVec<Key>& v) const { return reduce(v).first.is_zero(); }

  /// Coordinates of v with respect to the inserted inputs, if v lies in
  /// their span. Only independent inputs receive nonzero coordinates.
  std::optional<SparseVec<int>> express(const SparseVec<Key>& v) const
  {
    auto [residual, combo] = reduce(v);
    if (!residual.is_zero()) return std::nullopt;
    return -combo;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<int>& independent_inputs() const { return independent_; }

 private:
  struct Row {
    SparseVec<Key> vec;
    SparseVec<int> combo;
  };

  /// Returns (v - sum c_r row_r, -sum c_r combo_r).
  std::pair<SparseVec<Key>, SparseVec<int>> reduce(SparseVec<Key> v) const
  {
    SparseVec<int> combo;
    for (const auto& [pivot, row] : rows_) {
      if (v.is_zero()) break;
      const Rat c = v.coeff(pivot);
      if (c == 0) continue;
      v.add_scaled(row.vec, -c);
      combo.add_scaled(row.combo, -c);
    }
    return {std::move(v), std::move(combo)};
  }

  std::map<Key, Row> rows_;
  std::vector<int> independent_;
  std::size_t inputs_ = 0;
};

} // namespace confal
