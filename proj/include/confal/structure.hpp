#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "confal/checks.hpp"
#include "confal/errors.hpp"

namespace confal {

/// Output of unital recognition. Closure elements are indexed 0..size-1 and
/// all maps below are in coordinates over them (phi-images are independent).
template <ConformalModel M>
struct RecognitionResult {
  using Elem = typename M::element_type;
  using Coeff = typename M::coeff_type;

  Elem identity;
  std::vector<Elem> normalized;
  std::vector<std::string> normalized_names;
  std::vector<SparseVec<int>> normalized_coords;

  std::vector<Elem> closure;
  std::vector<std::string> closure_labels;
  std::vector<Coeff> closure_images;  ///< phi(b) = b(0)
  std::vector<Coeff> delta_images;    ///< phi(-e_(1) b)
  std::vector<std::optional<SparseVec<int>>> delta;
  std::map<std::pair<int, int>, SparseVec<int>> table;

  std::vector<int> locality_with_identity;  ///< per declared generator
  std::vector<int> fitted_degree;           ///< per declared generator
  bool fit_ok = true;
  CheckReport leibniz;
  CheckReport delta_powers;
  std::vector<std::string> log;

  bool pass() const { return fit_ok && leibniz.pass && delta_powers.pass; }

  std::string coords_to_string(const SparseVec<int>& v) const
  {
    if (v.is_zero()) return "0";
    std::string s;
    for (const auto& [i, c] : v.terms()) {
      if (!s.empty()) s += " + ";
      s += (c == 1 ? std::string() : c.get_str() + "*") + "[" + closure_labels[static_cast<std::size_t>(i)] + "]";
    }
    return s;
  }
};

namespace detail {

/// Degree in n of n -> f(n) e(-n), read off finite differences over
/// n = 0..N+2. Returns -1 for the zero sequence.
template <ConformalModel M>
int fitted_degree(const M& m, const typename M::element_type& f, const typename M::element_type& e, int N)
{
  using Key = coord_key_t<M>;
  std::vector<SparseVec<Key>> seq;
  for (long n = 0; n <= N + 2; ++n) seq.push_back(coords_of(m.coeff_mul(m.coefficient(f, n), m.coefficient(e, -n))));
  int degree = -1;
  for (int k = 0; !seq.empty(); ++k) {
    bool zero = true;
    for (const auto& v : seq) zero = zero && v.is_zero();
    if (!zero) degree = k;
    std::vector<SparseVec<Key>> next;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) next.push_back(seq[i + 1] - seq[i]);
    seq = std::move(next);
  }
  // The last one or two difference levels have too few points to certify
  // vanishing; a degree landing there is reported as is and fails the check.
  return degree;
}

}  // namespace detail

/// Recovers (A, delta) from a unital conformal algebra with identity e:
/// peels every declared generator into pieces g with g_(0) e = g and N(g,e)
/// = 0, builds the 0-product closure of their phi-images, and reads delta
/// off delta(phi(g)) = phi(-e_(1) g).
template <ConformalModel M>
RecognitionResult<M> recognize_unital(const M& m, const typename M::element_type& e, int closure_bound = 4,
                                      int annihilator_bound = 2)
{
  using Elem = typename M::element_type;
  using Key = coord_key_t<M>;
  RecognitionResult<M> res;
  res.identity = e;

  auto id = is_conformal_identity(m, e);
  if (!id.pass) {
    std::string why = id.failures.empty() ? "not a conformal identity" : id.failures.front();
    throw NotUnital(why);
  }
  if (!left_annihilator_probe(m, annihilator_bound).empty())
    throw NotUnital("nontrivial left annihilator at d-degree <= " + std::to_string(annihilator_bound));

  // Peeling.
  const auto& gens = m.generators();
  const auto& names = m.generator_names();
  for (std::size_t s = 0; s < gens.size(); ++s) {
    Elem f = gens[s];
    const LocalityDegree start = m.locality_degree(f, e);
    res.locality_with_identity.push_back(start.as_int());
    int prev = -1;
    bool first = true;
    while (!f.is_zero()) {
      const LocalityDegree ld = m.locality_degree(f, e);
      if (ld.is_all_zero()) throw NotUnital(names[s] + ": every product with e vanishes");
      const int N = ld.value();
      if (!first && N >= prev) throw std::logic_error("peeling did not lower the locality degree");
      first = false;
      prev = N;
      if (N == 0) {
        if (m.product(f, e, 0) != f)
          throw NotUnital(names[s] + ": g_(0) e != g at locality 0; the quotient reduction is not supported");
        res.normalized.push_back(f);
        res.normalized_names.push_back(names[s]);
        break;
      }
      Elem piece = m.product(f, e, N);
      if (m.product(piece, e, 0) != piece || m.locality_degree(piece, e).as_int() != 0)
        throw NotUnital(names[s] + ": peeled piece at order " + std::to_string(N) + " is not normalized");
      res.normalized.push_back(piece);
      res.normalized_names.push_back(names[s] + "~" + std::to_string(N));
      res.log.push_back("peeled " + names[s] + " at order " + std::to_string(N) + ": " + m.to_string(piece));
      f -= (sign_power(N) / factorial(N)) * piece.d(N);
    }
    const int fit = detail::fitted_degree(m, gens[s], e, std::max(0, start.as_int()));
    res.fitted_degree.push_back(fit);
    if (fit != start.as_int()) {
      res.fit_ok = false;
      res.log.push_back("polynomial fit for " + names[s] + " has degree " + std::to_string(fit) +
                        ", locality with e is " + start.to_string());
    }
  }

  // 0-product closure of the phi-images.
  LinearSpan<Key> span;
  auto phi = [&](const Elem& b) { return m.coefficient(b, 0); };
  auto try_add = [&](const Elem& b, const std::string& label) {
    auto img = phi(b);
    auto c = coords_of(img);
    if (c.is_zero() || span.contains(c)) return false;
    span.insert(c);
    res.closure.push_back(b);
    res.closure_labels.push_back(label);
    res.closure_images.push_back(std::move(img));
    return true;
  };
  std::vector<std::size_t> level;
  for (std::size_t s = 0; s < res.normalized.size(); ++s)
    if (try_add(res.normalized[s], res.normalized_names[s])) level.push_back(res.closure.size() - 1);
  if (try_add(e, "e")) {
    level.push_back(res.closure.size() - 1);
    res.log.push_back("identity added to the closure basis");
  }
  const std::vector<std::size_t> first_level = level;
  for (int depth = 2; depth <= closure_bound; ++depth) {
    std::vector<std::size_t> next;
    for (std::size_t i : level)
      for (std::size_t j : first_level) {
        Elem b = m.product(res.closure[i], res.closure[j], 0);
        if (try_add(b, res.closure_labels[i] + "*" + res.closure_labels[j])) next.push_back(res.closure.size() - 1);
      }
    level = std::move(next);
    if (level.empty()) break;
  }
  if (!level.empty()) res.log.push_back("closure still growing at bound " + std::to_string(closure_bound));

  for (const auto& g : res.normalized) res.normalized_coords.push_back(span.express(coords_of(phi(g))).value());

  // delta on the closure.
  for (std::size_t i = 0; i < res.closure.size(); ++i) {
    auto img = phi(Rat(-1) * m.product(e, res.closure[i], 1));
    res.delta.push_back(span.express(coords_of(img)));
    res.delta_images.push_back(std::move(img));
    if (i < first_level.size() && !res.delta.back())
      throw ClosureBoundExceeded("delta of " + res.closure_labels[i] + " leaves the closure at bound " +
                                 std::to_string(closure_bound));
  }

  // Multiplication table and the Leibniz rule for the extracted delta.
  for (std::size_t i = 0; i < res.closure.size(); ++i)
    for (std::size_t j = 0; j < res.closure.size(); ++j) {
      const Elem p = m.product(res.closure[i], res.closure[j], 0);
      if (auto c = span.express(coords_of(phi(p)))) res.table.emplace(std::pair{int(i), int(j)}, *c);
      auto lhs = phi(Rat(-1) * m.product(e, p, 1));
      auto rhs = m.coeff_mul(res.delta_images[i], res.closure_images[j]) +
                 m.coeff_mul(res.closure_images[i], res.delta_images[j]);
      ++res.leibniz.checked;
      if (lhs != rhs)
        res.leibniz.fail("delta(" + res.closure_labels[i] + " * " + res.closure_labels[j] + ") breaks the Leibniz rule");
    }

  // (-e_(1))^n g = (-1)^n e_(n) g.
  for (std::size_t s = 0; s < res.normalized.size(); ++s) {
    Elem cur = res.normalized[s];
    for (int n = 1; n <= 3; ++n) {
      cur = Rat(-1) * m.product(e, cur, 1);
      ++res.delta_powers.checked;
      if (cur != sign_power(n) * m.product(e, res.normalized[s], n))
        res.delta_powers.fail("delta^" + std::to_string(n) + " disagrees with e_(" + std::to_string(n) + ") on " +
                              res.normalized_names[s]);
    }
  }
  return res;
}

/// Rebuilds a_(n) b = (-1)^n a delta^n(b) from the recovered tables and
/// compares with the original products of the normalized generators, for n
/// up to max(min_orders, pairwise locality degree + 1).
template <ConformalModel M>
CheckReport recognition_roundtrip(const M& m, const RecognitionResult<M>& res, int min_orders = 2)
{
  using Elem = typename M::element_type;
  CheckReport rep;
  auto apply_delta = [&](const SparseVec<int>& v) -> std::optional<SparseVec<int>> {
    SparseVec<int> out;
    for (const auto& [i, c] : v.terms()) {
      const auto& d = res.delta[static_cast<std::size_t>(i)];
      if (!d) return std::nullopt;
      out.add_scaled(*d, c);
    }
    return out;
  };
  auto multiply = [&](const SparseVec<int>& a, const SparseVec<int>& b) -> std::optional<SparseVec<int>> {
    SparseVec<int> out;
    for (const auto& [i, ci] : a.terms())
      for (const auto& [j, cj] : b.terms()) {
        auto it = res.table.find({i, j});
        if (it == res.table.end()) return std::nullopt;
        out.add_scaled(it->second, ci * cj);
      }
    return out;
  };
  for (std::size_t s = 0; s < res.normalized.size(); ++s)
    for (std::size_t t = 0; t < res.normalized.size(); ++t) {
      const int bound = std::max(min_orders, m.locality_degree(res.normalized[s], res.normalized[t]).as_int() + 1);
      std::optional<SparseVec<int>> db = res.normalized_coords[t];
      for (int n = 0; n <= bound; ++n) {
        const std::string where =
            "(" + res.normalized_names[s] + ", " + res.normalized_names[t] + ", " + std::to_string(n) + ")";
        if (n > 0 && db) db = apply_delta(*db);
        ++rep.checked;
        if (!db) {
          rep.fail(where + ": delta leaves the closure");
          break;
        }
        auto prod = multiply(res.normalized_coords[s], *db);
        if (!prod) {
          rep.fail(where + ": product leaves the closure");
          continue;
        }
        Elem rebuilt;
        for (const auto& [i, c] : prod->terms()) rebuilt += (sign_power(n) * c) * res.closure[static_cast<std::size_t>(i)];
        if (rebuilt != m.product(res.normalized[s], res.normalized[t], n)) rep.fail(where + ": mismatch");
      }
    }
  return rep;
}

struct TransportResult {
  DiffAlgebra algebra;
  ConfElem identity;  ///< sum_{k<m} (1/k!) d^k f_(r^k)
  int nilpotency = 0; ///< least m with r^m = 0
  IdentityReport check;
  IdentityReport unit_check;  ///< f_1 in the same algebra
};

/// Conformal identity of the differential algebra over (A, ad r) for a
/// nilpotent r in a finite-dimensional unital A.
inline TransportResult transport_identity(const BaseAlgebra& a, const AElem& r)
{
  if (a.kind() != BaseKind::FinDim) throw std::invalid_argument("transport_identity: base must be finite-dimensional");
  if (!a.has_unit()) throw std::invalid_argument("transport_identity: base has no unit");
  std::vector<AElem> powers{a.one()};
  while (!powers.back().is_zero()) {
    if (static_cast<int>(powers.size()) > a.size())
      throw NotNilpotent("r^m != 0 for m <= " + std::to_string(a.size()));
    powers.push_back(a.mul(powers.back(), r));
  }
  const int m = static_cast<int>(powers.size()) - 1;
  OreContext ctx = make_ore(a, Derivation::ad(r));
  if (!ctx->delta(r).is_zero()) throw std::logic_error("ad(r)(r) != 0");
  std::vector<std::pair<std::string, AElem>> gens;
  for (int i = 0; i < a.size(); ++i) gens.emplace_back(a.to_string(AElem::unit({i, 0, 0})), AElem::unit({i, 0, 0}));
  DiffAlgebra alg(ctx, std::move(gens));
  ConfElem e;
  for (int k = 0; k < m; ++k) e += (Rat(1) / factorial(k)) * alg.primitive(powers[static_cast<std::size_t>(k)]).d(k);
  auto check = is_conformal_identity(alg, e);
  auto unit = is_conformal_identity(alg, alg.primitive(a.one()));
  return {std::move(alg), std::move(e), m, std::move(check), std::move(unit)};
}

struct IdealClosure {
  std::vector<AElem> basis;
  bool unit_reached = false;
  int degree_bound = 0;
};

/// Bounded saturation of the seeds under delta and two-sided multiplication
/// by the algebra generators. Elements above the degree bound are dropped.
inline IdealClosure delta_stable_closure(const OreRing& ring, const std::vector<AElem>& seeds, int degree_bound,
                                         std::size_t cap = 20000)
{
  const BaseAlgebra& a = ring.base();
  IdealClosure out;
  out.degree_bound = degree_bound;
  LinearSpan<BasisKey> span;
  std::vector<AElem> queue;
  auto offer = [&](const AElem& v) {
    if (v.is_zero() || a.degree(v) > degree_bound || span.contains(v)) return;
    span.insert(v);
    out.basis.push_back(v);
    queue.push_back(v);
    if (out.basis.size() > cap) throw ResourceBound("ideal closure exceeded " + std::to_string(cap) + " elements");
    if (!out.unit_reached && a.is_invertible(v)) out.unit_reached = true;
  };
  for (const auto& s : seeds) {
    if (s.is_zero()) throw std::invalid_argument("delta_stable_closure: zero seed");
    offer(s);
  }
  const auto gens = a.algebra_generators();
  while (!queue.empty()) {
    AElem v = std::move(queue.back());
    queue.pop_back();
    offer(ring.delta(v));
    for (const auto& g : gens) {
      offer(a.mul(g, v));
      offer(a.mul(v, g));
    }
  }
  if (!out.unit_reached && a.has_unit() && span.contains(a.one())) out.unit_reached = true;
  return out;
}

struct SimplicityReport {
  int trials = 0;
  bool witness_found = false;
  std::string seed_element;
  std::optional<IdealClosure> witness;
  std::string verdict;
};

/// Randomized search for a proper delta-stable ideal. Seeds are sparse
/// combinations of words in the declared generators' base elements plus any
/// explicit seeds. Finding nothing is not a proof of simplicity.
inline SimplicityReport simplicity_probe(const DiffAlgebra& alg, int trials, int degree_bound, std::uint64_t seed,
                                         const std::vector<AElem>& explicit_seeds = {})
{
  SimplicityReport rep;
  const OreRing& ring = alg.ring();
  const BaseAlgebra& a = alg.base();
  auto probe = [&](const AElem& s) {
    auto c = delta_stable_closure(ring, {s}, degree_bound);
    if (!c.unit_reached) {
      rep.witness_found = true;
      rep.seed_element = a.to_string(s);
      rep.witness = std::move(c);
      return true;
    }
    return false;
  };
  for (const auto& s : explicit_seeds) {
    ++rep.trials;
    if (probe(s)) break;
  }
  const auto& words = alg.generator_base_elements();
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int t = 0; t < trials && !rep.witness_found && !words.empty(); ++t) {
    AElem s;
    for (int attempt = 0; attempt < 16 && (s.is_zero() || a.degree(s) > degree_bound); ++attempt) {
      s = AElem();
      const int nterms = pick(1, 2);
      for (int i = 0; i < nterms; ++i) {
        AElem w = words[static_cast<std::size_t>(pick(0, static_cast<int>(words.size()) - 1))];
        const int len = pick(1, 3);
        for (int l = 1; l < len; ++l) w = a.mul(w, words[static_cast<std::size_t>(pick(0, static_cast<int>(words.size()) - 1))]);
        int c = pick(-3, 3);
        if (c == 0) c = 1;
        w *= Rat(c);
        s += w;
      }
    }
    if (s.is_zero() || a.degree(s) > degree_bound) continue;
    ++rep.trials;
    if (probe(s)) break;
  }
  rep.verdict = rep.witness_found ? "proper delta-stable ideal found" : "no proper delta-stable ideal found";
  return rep;
}

} // namespace confal
