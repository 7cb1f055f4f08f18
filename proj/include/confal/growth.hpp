#pragma once

#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "confal/checks.hpp"
#include "confal/errors.hpp"

namespace confal {

inline constexpr std::size_t kDefaultMonomialCap = 200000;

/// Cap on evaluated monomials; CONFAL_MAX_MONOMIALS overrides the default.
inline std::size_t monomial_cap_from_env()
{
  if (const char* s = std::getenv("CONFAL_MAX_MONOMIALS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMonomialCap;
}

/// Rank over the fraction field of Q[d] of the given row vectors, by
/// fraction-free (Bareiss) elimination. All divisions are exact.
inline int module_rank(std::vector<std::vector<DOp>> rows)
{
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != ncols) throw std::invalid_argument("module_rank: ragged rows");
  std::size_t rank = 0;
  DOp prev(1);
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j)
        rows[i][j] = (rows[rank][c] * rows[i][j] - rows[i][c] * rows[rank][j]).exact_div(prev);
      rows[i][c] = DOp();
    }
    prev = rows[rank][c];
    ++rank;
  }
  return static_cast<int>(rank);
}

/// Rank over Q[d] of module elements, in the frame of their joint support.
template <class Key>
int module_rank(const std::vector<DElem<Key>>& elems)
{
  std::map<Key, std::size_t> frame;
  for (const auto& e : elems)
    for (const auto& [k, q] : e.terms()) frame.emplace(k, 0);
  std::size_t i = 0;
  for (auto& [k, idx] : frame) idx = i++;
  std::vector<std::vector<DOp>> rows;
  for (const auto& e : elems) {
    if (e.is_zero()) continue;
    std::vector<DOp> row(frame.size());
    for (const auto& [k, q] : e.terms()) row[frame[k]] = q;
    rows.push_back(std::move(row));
  }
  return module_rank(std::move(rows));
}

/// Left-normed monomial (...((g_w1 (n1) g_w2) (n2) g_w3) ...) with its value.
template <class Elem>
struct Monomial {
  Elem value;
  std::vector<int> word;
  std::vector<int> orders;
};

/// Spanning set of C_r: the nonzero left-normed monomials in at most r
/// generators with every order <= N, N the largest pairwise locality degree
/// of the generators. Monomials whose value is a scalar multiple of an
/// earlier one are omitted: they add nothing to the span, and neither do
/// their extensions.
template <class Elem>
struct MonomialSpan {
  std::vector<Monomial<Elem>> monomials;
  std::vector<std::size_t> level_end;  ///< monomials[0, level_end[r-1]) span C_r
  int order_bound = -1;
  std::size_t evaluated = 0;

  std::vector<Elem> values(int r) const
  {
    std::vector<Elem> out;
    const std::size_t end = level_end.at(static_cast<std::size_t>(r - 1));
    for (std::size_t i = 0; i < end; ++i) out.push_back(monomials[i].value);
    return out;
  }
};

template <ConformalModel M>
MonomialSpan<typename M::element_type> enumerate_span(const M& m, int r, std::size_t cap = monomial_cap_from_env())
{
  using Elem = typename M::element_type;
  if (r < 1) throw std::invalid_argument("enumerate_span: r must be positive");
  MonomialSpan<Elem> span;
  span.order_bound = generator_order_bound(m);
  std::set<Elem> seen;
  const auto& gens = m.generators();
  std::size_t level_begin = 0;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].is_zero() || !seen.insert(gens[j].projective_normal()).second) continue;
    span.monomials.push_back({gens[j], {static_cast<int>(j)}, {}});
  }
  span.level_end.push_back(span.monomials.size());
  for (int level = 2; level <= r; ++level) {
    const std::size_t level_stop = span.monomials.size();
    for (std::size_t i = level_begin; i < level_stop; ++i)
      for (int n = 0; n <= span.order_bound; ++n)
        for (std::size_t j = 0; j < gens.size(); ++j) {
          if (++span.evaluated > cap)
            throw ResourceBound("monomial enumeration exceeded cap of " + std::to_string(cap));
          Elem v = m.product(span.monomials[i].value, gens[j], n);
          if (v.is_zero() || !seen.insert(v.projective_normal()).second) continue;
          Monomial<Elem> mono{std::move(v), span.monomials[i].word, span.monomials[i].orders};
          mono.word.push_back(static_cast<int>(j));
          mono.orders.push_back(n);
          span.monomials.push_back(std::move(mono));
        }
    level_begin = level_stop;
    span.level_end.push_back(span.monomials.size());
  }
  return span;
}

struct GrowthRow {
  int r = 0;
  long gamma = 0;
  std::optional<long> delta1, delta2;
  std::optional<long> coeff_dim;
  std::optional<long> bound_rhs;
  std::optional<bool> bound_ok;
  std::optional<long> literal_rhs;  ///< bound with N' = N taken literally
  std::optional<bool> literal_ok;
};

struct GrowthReport {
  std::vector<GrowthRow> rows;
  std::optional<int> degree;  ///< detected polynomial degree of gamma
  std::string verdict;        ///< "degree d", "inconclusive", "zero"
  double loglog_slope = 0.0;  ///< reference only
  int order_bound = -1;
  long window_minus = 0, window_plus = 0;
  bool bound_holds = true;
};

/// Polynomial degree d such that the d-th differences of the sequence are a
/// nonzero constant over the last max(3, len/4) points.
inline std::pair<std::optional<int>, std::string> detect_degree(const std::vector<long>& seq)
{
  if (seq.empty()) return {std::nullopt, "inconclusive"};
  bool all_zero = true;
  for (long v : seq) all_zero = all_zero && v == 0;
  if (all_zero) return {std::nullopt, "zero"};
  const std::size_t w = std::max<std::size_t>(3, seq.size() / 4);
  std::vector<long> cur = seq;
  for (int d = 0; cur.size() >= w; ++d) {
    bool constant = true;
    for (std::size_t i = cur.size() - w; i + 1 < cur.size(); ++i) constant = constant && cur[i] == cur[i + 1];
    if (constant && cur.back() != 0) return {d, "degree " + std::to_string(d)};
    std::vector<long> next;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) next.push_back(cur[i + 1] - cur[i]);
    cur = std::move(next);
  }
  return {std::nullopt, "inconclusive"};
}

namespace detail {

inline void fill_differences(GrowthReport& rep)
{
  auto& rows = rep.rows;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i >= 1) rows[i].delta1 = rows[i].gamma - rows[i - 1].gamma;
    if (i >= 2) rows[i].delta2 = *rows[i].delta1 - *rows[i - 1].delta1;
  }
  std::vector<long> gammas;
  for (const auto& row : rows) gammas.push_back(row.gamma);
  auto [deg, verdict] = detect_degree(gammas);
  rep.degree = deg;
  rep.verdict = verdict;
  if (rows.size() >= 2 && rows.back().gamma > 0) {
    const auto& lo = rows[rows.size() / 2 - (rows.size() % 2 == 0 ? 1 : 0)];
    const auto& hi = rows.back();
    if (lo.gamma > 0 && hi.r != lo.r)
      rep.loglog_slope = (std::log(double(hi.gamma)) - std::log(double(lo.gamma))) /
                         (std::log(double(hi.r)) - std::log(double(lo.r)));
  }
}

}  // namespace detail

/// gamma(r) = rank over Q[d] of C_r, for r = 1..r_max.
template <ConformalModel M>
GrowthReport growth_table(const M& m, int r_max, std::size_t cap = monomial_cap_from_env())
{
  if (r_max < 1) throw std::invalid_argument("growth_table: r_max must be positive");
  GrowthReport rep;
  auto span = enumerate_span(m, r_max, cap);
  rep.order_bound = span.order_bound;
  for (int r = 1; r <= r_max; ++r) {
    GrowthRow row;
    row.r = r;
    row.gamma = module_rank(span.values(r));
    rep.rows.push_back(row);
  }
  detail::fill_differences(rep);
  return rep;
}

/// Checks dim(V + V^2 + ... + V^r) <= (M+ - M- + max(N,1)) r gamma(r), with V
/// spanned by the generator coefficients g(k), M- <= k <= M+.
template <ConformalModel M>
GrowthReport coeff_growth_check(const M& m, long m_minus, long m_plus, int r_max,
                                std::size_t cap = monomial_cap_from_env())
{
  if (m_minus > 0) throw std::invalid_argument("coeff_growth_check: M- must be <= 0");
  if (m_plus < m_minus) throw std::invalid_argument("coeff_growth_check: empty window");
  using Coeff = typename M::coeff_type;
  using Key = coord_key_t<M>;
  GrowthReport rep = growth_table(m, r_max, cap);
  rep.window_minus = m_minus;
  rep.window_plus = m_plus;
  const long n_eff = std::max(rep.order_bound, 1);

  std::vector<Coeff> v_basis;
  LinearSpan<Key> total;
  std::vector<Coeff> newest;
  for (const auto& g : m.generators())
    for (long k = m_minus; k <= m_plus; ++k) {
      Coeff c = m.coefficient(g, k);
      if (total.insert(coords_of(c)).independent) {
        v_basis.push_back(c);
        newest.push_back(c);
      }
    }
  std::size_t work = 0;
  for (int r = 1; r <= r_max; ++r) {
    if (r > 1) {
      // V + ... + V^r = (V + ... + V^(r-1)) + (new part of level r-1) * V.
      std::vector<Coeff> added;
      for (const auto& a : newest)
        for (const auto& b : v_basis) {
          if (++work > cap) throw ResourceBound("coefficient growth exceeded cap of " + std::to_string(cap));
          Coeff p = m.coeff_mul(a, b);
          if (total.insert(coords_of(p)).independent) added.push_back(std::move(p));
        }
      newest = std::move(added);
    }
    auto& row = rep.rows[static_cast<std::size_t>(r - 1)];
    row.coeff_dim = total.rank();
    row.bound_rhs = (m_plus - m_minus + n_eff) * r * row.gamma;
    row.bound_ok = *row.coeff_dim <= *row.bound_rhs;
    row.literal_rhs = (m_plus - m_minus + rep.order_bound) * r * row.gamma;
    row.literal_ok = *row.coeff_dim <= *row.literal_rhs;
    rep.bound_holds = rep.bound_holds && *row.bound_ok;
  }
  return rep;
}

struct ExcludedMonomialReport {
  int samples = 0;
  int nonzero = 0;
  int order_bound = -1;
  std::string witness;
};

/// Samples left-normed monomials with at least one order above N and
/// evaluates them; all must vanish.
template <ConformalModel M>
ExcludedMonomialReport sample_excluded_monomials(const M& m, int samples, int max_len, std::uint64_t seed)
{
  ExcludedMonomialReport rep;
  rep.order_bound = generator_order_bound(m);
  const auto& gens = m.generators();
  if (gens.empty()) return rep;
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int N = rep.order_bound;
  for (int s = 0; s < samples; ++s) {
    const int len = pick(2, std::max(2, max_len));
    std::vector<int> word, orders;
    for (int i = 0; i < len; ++i) word.push_back(pick(0, static_cast<int>(gens.size()) - 1));
    for (int i = 0; i + 1 < len; ++i) orders.push_back(pick(0, N + 2));
    const int forced = pick(0, len - 2);
    if (orders[static_cast<std::size_t>(forced)] <= N) orders[static_cast<std::size_t>(forced)] = pick(N + 1, N + 3);
    auto value = gens[static_cast<std::size_t>(word[0])];
    for (int i = 1; i < len; ++i)
      value = m.product(value, gens[static_cast<std::size_t>(word[static_cast<std::size_t>(i)])],
                        orders[static_cast<std::size_t>(i - 1)]);
    ++rep.samples;
    if (!value.is_zero()) {
      ++rep.nonzero;
      if (rep.witness.empty()) {
        std::string w = m.generator_names()[static_cast<std::size_t>(word[0])];
        for (int i = 1; i < len; ++i)
          w = "(" + w + " (" + std::to_string(orders[static_cast<std::size_t>(i - 1)]) + ") " +
              m.generator_names()[static_cast<std::size_t>(word[static_cast<std::size_t>(i)])] + ")";
        rep.witness = w + " = " + m.to_string(value);
      }
    }
  }
  return rep;
}

} // namespace confal
