#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "confal/rational.hpp"

namespace confal {

/// Largest n with a_(n) b != 0, or AllZero when every product vanishes.
class LocalityDegree {
 public:
  LocalityDegree() = default;
  explicit LocalityDegree(int n) : value_(n) {}
  static LocalityDegree all_zero() { return {}; }

  bool is_all_zero() const { return !value_.has_value(); }
  int value() const { return value_.value(); }
  /// -1 for AllZero, so that "n > N" reads naturally.
  int as_int() const { return value_.value_or(-1); }

  std::string to_string() const { return value_ ? std::to_string(*value_) : "AllZero"; }
  friend bool operator==(const LocalityDegree&, const LocalityDegree&) = default;

 private:
  std::optional<int> value_;
};

/// Common interface of the two conformal-algebra representations
/// (differential algebras over A[t, t^-1; delta] and finite presentations).
/// Elements are free Q[d]-module elements; coefficients live in the
/// corresponding coefficient algebra.
template <class M>
concept ConformalModel = requires(const M& m, const typename M::element_type& u,
                                  const typename M::coeff_type& c, int n, long k) {
  { m.product(u, u, n) } -> std::same_as<typename M::element_type>;
  { m.generators() } -> std::same_as<const std::vector<typename M::element_type>&>;
  { m.generator_names() } -> std::same_as<const std::vector<std::string>&>;
  { m.locality_degree(u, u) } -> std::same_as<LocalityDegree>;
  { m.locality_search_bound(u, u) } -> std::convertible_to<int>;
  { m.coefficient(u, k) } -> std::same_as<typename M::coeff_type>;
  { m.coeff_mul(c, c) } -> std::same_as<typename M::coeff_type>;
  { m.coeff_zero() } -> std::same_as<typename M::coeff_type>;
  { m.to_string(u) } -> std::convertible_to<std::string>;
};

/// Scans n = 0..bound and returns the largest n with a nonzero product.
template <class M>
LocalityDegree scan_locality(const M& m, const typename M::element_type& u, const typename M::element_type& v,
                             int bound)
{
  LocalityDegree last = LocalityDegree::all_zero();
  for (int n = 0; n <= bound; ++n)
    if (!m.product(u, v, n).is_zero()) last = LocalityDegree(n);
  return last;
}

/// Ground truth for (u_(n) v)(k) from the coefficients alone:
///   sum_{j=0}^{n} (-1)^j binom(n, j) u(n-j) v(k+j).
/// Independent of the model's product.
template <ConformalModel M>
typename M::coeff_type product_coeff_oracle(const M& m, const typename M::element_type& u,
                                            const typename M::element_type& v, int n, long k)
{
  auto acc = m.coeff_zero();
  for (int j = 0; j <= n; ++j) {
    auto term = m.coeff_mul(m.coefficient(u, n - j), m.coefficient(v, k + j));
    acc += (sign_power(j) * gen_binom(n, j)) * term;
  }
  return acc;
}

} // namespace confal
