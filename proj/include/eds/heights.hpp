#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "eds/curve.hpp"

namespace eds {

inline constexpr double kLog2 = 0.6931471805599453;
// directed-rounding slack absorbed into every certified error bound
inline constexpr double kFloatSlack = 1e-12;

struct HeightValue {
  double value = 0.0;
  double abs_error = 0.0;
};

struct HeightConstants {
  double K = 0.0;
  double L = 0.0;
};

struct HeightEnvelope {
  double lower = 0.0;
  double upper = 0.0;
};

// h(x(P)) = log max(|num|, den) of x in lowest terms.
inline double naive_height(const Rat& x) { return log_height(x); }

inline double naive_height(const Point& p) {
  if (p.infinity) raise(errc::infinity_point, "naive height of the point at infinity");
  return naive_height(p.x);
}

// Two-sided bound on (1/2)h(P) - hhat(P) over all P on E_a.
inline HeightEnvelope height_difference_envelope(const Int& a) {
  if (a == 0) raise(errc::zero_a, "a must be nonzero");
  double la = log_int(a);
  return {-0.25 * la - 0.16, 0.25 * la + 0.26};
}

inline HeightConstants constants_KL(const Int& a) {
  if (a == 0) raise(errc::zero_a, "a must be nonzero");
  double la = log_int(a);
  return {0.5 * la + 0.52, 0.5 * la + 0.32};
}

// Explicit lower bound on hhat of a non-torsion point, by sign of a and a mod 16.
inline double lang_lower_bound(const Int& a) {
  make_curve_ea(a);  // validates nonzero and fourth-power-free
  long r = mpz_fdiv_ui(a.get_mpz_t(), 16);  // non-negative residue
  double c;
  bool mid = (r == 2 || r == 3 || r == 6 || r == 8 || r == 10 || r == 11 || r == 12 || r == 14);
  if (sgn(a) > 0) {
    c = (r == 4) ? -0.125 : (mid ? 0.25 : 0.5);
  } else {
    c = (r == 4) ? -1.0 / 16 : (mid ? 5.0 / 16 : 9.0 / 16);
  }
  return log_int(a) / 16 + c * kLog2;
}

// Worst case of the six-way bound over all residues: (1/16)log|a| - (1/8)log 2.
// This is the floor the section-5 sweeps run with when a is only known by size.
inline double lang_generic_floor(const Int& a) {
  if (a == 0) raise(errc::zero_a, "a must be nonzero");
  return log_int(a) / 16 - 0.125 * kLog2;
}

namespace detail {

// x-coordinate duplication on x = A/B in lowest terms (B = e^2 implicitly):
//   x(2Q) = (A^2 - a B^2)^2 / (4 B A (A^2 + a B^2)).
// Any common prime of numerator and denominator divides 2a, so lowest terms
// are restored by stripping the primes of 2a instead of a full-size gcd.
struct XOnlyDoubler {
  Int a;
  std::vector<Int> strip_primes;  // primes dividing 2a (fallback: empty -> plain gcd)

  explicit XOnlyDoubler(const Int& a_in) : a(a_in) {
    Int n = 2 * abs(a_in);
    // trial division; fine for every a this artifact sweeps
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
      if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        strip_primes.push_back(p);
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
      }
      if (strip_primes.size() > 24) {  // give up; gcd fallback
        strip_primes.clear();
        return;
      }
    }
    if (n > 1) strip_primes.push_back(n);
  }

  void step(Int& A, Int& B) const {
    Int A2 = A * A;
    Int aB2 = a * B * B;
    Int num = A2 - aB2;
    num *= num;
    Int den = 4 * B * A * (A2 + aB2);
    if (den == 0) raise(errc::torsion_point, "doubling hit a 2-torsion point");
    if (sgn(den) < 0) raise(errc::malformed_point, "negative x-denominator in doubling");
    if (strip_primes.empty()) {
      Int g = gcd_int(num, den);
      num /= g;
      den /= g;
    } else {
      for (const Int& p : strip_primes) {
        while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t()) &&
               mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
          num /= p;
          den /= p;
        }
      }
    }
    A = std::move(num);
    B = std::move(den);
  }
};

}  // namespace detail

// Certified Neron-Tate height via the doubling limit h(2^k P)/(2*4^k), with
// the Lemma-2.6 envelope as a-priori error: |(1/2)h(Q) - hhat(Q)| <= W for
// every Q, so the estimate at level k is within W/4^k of hhat(P).
inline HeightValue canonical_height(const CurveEA& curve, const Point& p, double tol = 1e-6,
                                    int max_doublings = 14) {
  require_on_curve(Curve{curve}, p);
  if (tol <= 0) raise(errc::bad_input, "tolerance must be positive");
  auto screen = torsion_screen(Curve{curve}, p);
  if (!screen.non_torsion) raise(errc::torsion_point, "canonical height of a torsion point");

  double width = 0.25 * log_int(curve.a) + 0.26;
  int k = 0;
  double err = width;
  while (err + kFloatSlack > tol) {
    ++k;
    err /= 4.0;
    if (k > max_doublings)
      raise(errc::tolerance_too_tight, "tolerance needs more than the configured doubling cap");
  }

  Int A = p.x.get_num();
  Int B = p.x.get_den();
  detail::XOnlyDoubler doubler(curve.a);
  for (int i = 0; i < k; ++i) doubler.step(A, B);

  Int m = abs(A) >= B ? abs(A) : B;
  double h = (m == 1) ? 0.0 : log_int(m);
  double scale = std::ldexp(1.0, -2 * k);  // 4^-k
  return HeightValue{h * 0.5 * scale, err + kFloatSlack};
}

}  // namespace eds
