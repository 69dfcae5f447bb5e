#pragma once

#include <vector>

#include "eds/poly.hpp"

namespace eds {

// Division polynomials of y^2 = x^3 + ax with the y-part eliminated.
// Even-index psi_n carries one conventional factor 2y; f(n) below is psi_n
// with that factor stripped, a polynomial in x alone. Generic over the
// coefficient ring so the same recurrence runs with symbolic a.
template <class C>
class DivisionPolyTable {
 public:
  explicit DivisionPolyTable(C a) : a_(std::move(a)) {
    const C zero{};
    C two = C(1) + C(1);
    C three = two + C(1);
    C five = three + two;
    C six = three + three;
    C a2 = a_ * a_;
    C a3 = a2 * a_;
    // Y = (2y)^2 = 4(x^3 + a x)
    y_sq_ = Poly<C>(std::vector<C>{zero, two * two * a_, zero, two * two});
    f_.push_back(Poly<C>());                                                     // f0
    f_.push_back(Poly<C>(C(1)));                                                 // f1
    f_.push_back(Poly<C>(C(1)));                                                 // f2 (psi2 = 2y)
    f_.push_back(Poly<C>(std::vector<C>{zero - a2, zero, six * a_, zero, three}));  // f3
    f_.push_back(Poly<C>(std::vector<C>{zero - two * a3, zero, zero - (five + five) * a2, zero,
                                        (five + five) * a_, zero, two}));        // f4
  }

  bool even_index_has_y(long n) const { return n % 2 == 0; }

  const Poly<C>& f(long n) {
    if (n < 0) raise(errc::bad_input, "division polynomial index must be >= 0");
    extend(n);
    return f_[static_cast<std::size_t>(n)];
  }

  // psi_n^2 as a polynomial in x (the curve relation absorbs the y factor).
  Poly<C> psi_squared(long n) {
    Poly<C> sq = f(n) * f(n);
    return n % 2 == 0 ? sq * y_sq_ : sq;
  }

  // phi_n = x psi_n^2 - psi_{n+1} psi_{n-1}, with x(nP) = phi_n / psi_n^2.
  Poly<C> phi(long n) {
    if (n < 1) raise(errc::bad_input, "phi index must be >= 1");
    Poly<C> x = Poly<C>::monomial(C(1), 1);
    Poly<C> cross = f(n + 1) * f(n - 1);
    if (n % 2 == 0) return x * f(n) * f(n) * y_sq_ - cross;
    return x * f(n) * f(n) - y_sq_ * cross;
  }

  const Poly<C>& y_squared_poly() const { return y_sq_; }

 private:
  void extend(long n) {
    while (static_cast<long>(f_.size()) <= n) {
      long k = static_cast<long>(f_.size());
      long m = k / 2;
      auto& f = f_;
      if (k % 2 == 1) {
        Poly<C> t1 = f[m + 2] * f[m] * f[m] * f[m];
        Poly<C> t2 = f[m - 1] * f[m + 1] * f[m + 1] * f[m + 1];
        f_.push_back(m % 2 == 0 ? y_sq_ * y_sq_ * t1 - t2 : t1 - y_sq_ * y_sq_ * t2);
      } else {
        Poly<C> t = f[m + 2] * f[m - 1] * f[m - 1] - f[m - 2] * f[m + 1] * f[m + 1];
        f_.push_back(f[m] * t);
      }
    }
  }

  C a_;
  Poly<C> y_sq_;
  std::vector<Poly<C>> f_;
};

struct DivisionPolynomialPair {
  long n = 0;
  Poly<Int> psi;  // y-stripped for even n
  Poly<Int> phi;
  bool psi_carries_y = false;
  Poly<Int> psi_squared_x;  // psi_n^2 as a polynomial in x
};

inline DivisionPolynomialPair division_poly(const Int& a, long n) {
  if (n < 1) raise(errc::bad_input, "division polynomial index must be >= 1");
  DivisionPolyTable<Int> table(a);
  return DivisionPolynomialPair{n, table.f(n), table.phi(n), n % 2 == 0, table.psi_squared(n)};
}

// x(nP) as phi_n(x0)/psi_n^2(x0); throws when psi_n(x0) = 0 (nP at infinity).
inline Rat xn_via_division_poly(const Int& a, const Rat& x0, long n) {
  DivisionPolyTable<Int> table(a);
  Rat den = table.psi_squared(n).eval(x0);
  if (den == 0) raise(errc::division_by_zero_psi, "psi_n vanishes at x0");
  return Rat(table.phi(n).eval(x0) / den);
}

// Guaranteed multiple of gcd(v^50 phi_5(a, u/v^2), v^50 psi_5^2(a, u/v^2)).
inline Int psi5_cofactor_bound(const Int& a) {
  Int r = pow_int(abs(a), 24);
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), 45);
  return r;
}

}  // namespace eds
