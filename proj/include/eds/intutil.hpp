#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eds/errors.hpp"

namespace eds {

using Int = mpz_class;
using Rat = mpq_class;

inline Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Exact square root, or nullopt if n is not a perfect square.
inline std::optional<Int> sqrt_exact(const Int& n) {
  if (sgn(n) < 0) return std::nullopt;
  Int r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Multiplicity of p in n (n != 0).
inline long ord_p(Int n, const Int& p) {
  long k = 0;
  if (n == 0) raise(errc::bad_input, "ord_p of zero");
  n = abs(n);
  Int q, r;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (r != 0) return k;
    ++k;
    n = q;
  }
}

// 2-adic valuation of a nonzero rational.
inline long ord2_rat(const Rat& x) {
  if (sgn(x) == 0) raise(errc::bad_input, "ord2 of zero");
  long num = static_cast<long>(mpz_scan1(x.get_num().get_mpz_t(), 0));
  long den = static_cast<long>(mpz_scan1(x.get_den().get_mpz_t(), 0));
  return num - den;
}

// Canonicalized rational from parts.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) raise(errc::bad_input, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// A rational is a square iff numerator and denominator (lowest terms) both are.
inline bool is_rational_square(const Rat& x) {
  return is_perfect_square(x.get_num()) && is_perfect_square(x.get_den());
}

// Parses "p", "-p", or "p/q" into an exact rational.
inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) raise(errc::bad_input, "cannot parse rational: " + s);
  r.canonicalize();
  return r;
}

// log(max(|num|, |den|)) for a nonzero rational in lowest terms, via exact
// bigint magnitude (exponent + top bits), good to ~1e-15 relative.
inline double log_int(const Int& n) {
  signed long exp2;
  double d = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(std::abs(d)) + static_cast<double>(exp2) * 0.6931471805599453;
}

inline double log_height(const Rat& x) {
  const Int& num = x.get_num();
  const Int& den = x.get_den();
  Int m = abs(num) >= den ? abs(num) : den;
  if (m == 0) raise(errc::bad_input, "height of 0/0");
  return m == 1 ? 0.0 : log_int(m);
}

// Distinct prime factors of a small integer by trial division.
inline std::vector<long> small_prime_factors(long n) {
  if (n < 0) n = -n;
  std::vector<long> ps;
  for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline long rad_long(long n) {
  long r = 1;
  for (long p : small_prime_factors(n)) r *= p;
  return r;
}

}  // namespace eds
