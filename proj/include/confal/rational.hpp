#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace confal {

/// Exact rational scalar. mpq_class keeps every arithmetic result in lowest
/// terms with a positive denominator.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1)
{
  if (den == 0) throw std::domain_error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p" or "p/q" (optional leading sign).
inline Rat parse_rat(std::string_view text)
{
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + std::string(text));
  if (r.get_den() == 0) throw std::domain_error("zero denominator");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

/// n (n-1) ... (n-p+1); 1 when p == 0.
inline Rat falling_factorial(long n, long p)
{
  if (p < 0) throw std::invalid_argument("falling_factorial: negative length");
  mpz_class acc = 1;
  for (long i = 0; i < p; ++i) acc *= (n - i);
  return Rat(acc);
}

/// Binomial coefficient with arbitrary integer upper index:
/// n (n-1) ... (n-k+1) / k!. Vanishes for 0 <= n < k.
inline Rat gen_binom(long n, long k)
{
  if (k < 0) throw std::invalid_argument("gen_binom: negative lower index");
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
  Rat r = falling_factorial(n, k) / Rat(fact);
  r.canonicalize();
  return r;
}

inline Rat factorial(long k) { return falling_factorial(k, k); }

inline Rat sign_power(long p) { return (p % 2 == 0) ? Rat(1) : Rat(-1); }

} // namespace confal
