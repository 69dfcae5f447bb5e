#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "eds/intutil.hpp"

namespace eds {

// y^2 = x^3 + a x with a nonzero and fourth-power-free.
struct CurveEA {
  Int a;
};

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with nonzero discriminant.
struct LongWeierstrassCurve {
  Int a1, a2, a3, a4, a6;
};

using Curve = std::variant<CurveEA, LongWeierstrassCurve>;

struct Point {
  bool infinity = true;
  Rat x, y;

  static Point at_infinity() { return Point{}; }
  static Point affine(Rat px, Rat py) { return Point{false, std::move(px), std::move(py)}; }

  friend bool operator==(const Point& p, const Point& q) {
    if (p.infinity || q.infinity) return p.infinity == q.infinity;
    return p.x == q.x && p.y == q.y;
  }
};

// (A, e, C) with x = A/e^2, y = C/e^3 in lowest terms; B = e^2.
struct DenomSplit {
  Int A;
  Int e;
  Int C;

  Int B() const { return e * e; }
};

namespace detail {

struct LongCoeffs {
  Int a1, a2, a3, a4, a6;
};

inline LongCoeffs coeffs(const Curve& c) {
  if (const auto* ea = std::get_if<CurveEA>(&c)) return {0, 0, 0, ea->a, 0};
  const auto& w = std::get<LongWeierstrassCurve>(c);
  return {w.a1, w.a2, w.a3, w.a4, w.a6};
}

inline Int long_discriminant(const LongWeierstrassCurve& w) {
  Int b2 = w.a1 * w.a1 + 4 * w.a2;
  Int b4 = 2 * w.a4 + w.a1 * w.a3;
  Int b6 = w.a3 * w.a3 + 4 * w.a6;
  Int b8 = w.a1 * w.a1 * w.a6 + 4 * w.a2 * w.a6 - w.a1 * w.a3 * w.a4 + w.a2 * w.a3 * w.a3 -
           w.a4 * w.a4;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

// Largest u with u^4 | a.
inline Int fourth_power_part(const Int& a) {
  Int n = abs(a);
  Int u = 1;
  for (Int p = 2; p * p * p * p <= n; p += (p == 2 ? 1 : 2)) {
    Int p4 = p * p * p * p;
    while (mpz_divisible_p(n.get_mpz_t(), p4.get_mpz_t())) {
      n /= p4;
      u *= p;
    }
  }
  return u;
}

}  // namespace detail

inline bool on_curve(const Curve& c, const Point& p) {
  if (p.infinity) return true;
  auto [a1, a2, a3, a4, a6] = detail::coeffs(c);
  Rat lhs = p.y * p.y + a1 * p.x * p.y + a3 * p.y;
  Rat rhs = p.x * p.x * p.x + a2 * p.x * p.x + a4 * p.x + a6;
  return lhs == rhs;
}

inline void require_on_curve(const Curve& c, const Point& p) {
  if (!on_curve(c, p)) raise(errc::point_not_on_curve, "point does not satisfy the curve equation");
}

inline CurveEA make_curve_ea(const Int& a) {
  if (a == 0) raise(errc::zero_a, "a must be nonzero");
  Int u = detail::fourth_power_part(a);
  if (u != 1)
    raise(errc::not_fourth_power_free, "a is not fourth-power-free: " + u.get_str() + "^4 divides " + a.get_str());
  return CurveEA{a};
}

inline LongWeierstrassCurve make_long_curve(Int a1, Int a2, Int a3, Int a4, Int a6) {
  LongWeierstrassCurve w{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)};
  if (detail::long_discriminant(w) == 0) raise(errc::bad_input, "singular curve: discriminant is zero");
  return w;
}

// (x, y) -> (x/u^2, y/u^3) onto the fourth-power-free model E_{a/u^4}.
inline std::pair<CurveEA, Point> reduce_to_minimal(const Int& a, const Point& p) {
  if (a == 0) raise(errc::zero_a, "a must be nonzero");
  Int u = detail::fourth_power_part(a);
  Int a_red = a / pow_int(u, 4);
  if (!p.infinity) require_on_curve(CurveEA{a}, p);
  CurveEA curve{a_red};
  if (p.infinity) return {curve, p};
  Point q = Point::affine(p.x / Rat(u * u), p.y / Rat(u * u * u));
  return {curve, q};
}

inline Point negate(const Curve& c, const Point& p) {
  if (p.infinity) return p;
  auto [a1, a2, a3, a4, a6] = detail::coeffs(c);
  return Point::affine(p.x, -p.y - a1 * p.x - a3);
}

namespace detail {

// Chord-tangent law; inputs assumed on the curve.
inline Point add_unchecked(const Curve& c, const Point& p, const Point& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  auto [a1, a2, a3, a4, a6] = coeffs(c);
  Rat lambda;
  if (p.x == q.x) {
    if (p.y + q.y + a1 * q.x + a3 == 0) return Point::at_infinity();
    // p == q, tangent slope
    lambda = (3 * p.x * p.x + 2 * a2 * p.x + a4 - a1 * p.y) / (2 * p.y + a1 * p.x + a3);
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  Rat x3 = lambda * lambda + a1 * lambda - a2 - p.x - q.x;
  Rat y3 = lambda * (p.x - x3) - p.y - a1 * x3 - a3;
  return Point::affine(std::move(x3), std::move(y3));
}

inline Point scalar_mul_unchecked(const Curve& c, Int n, const Point& p) {
  Point base = p;
  if (sgn(n) < 0) {
    base = negate(c, p);
    n = -n;
  }
  Point acc = Point::at_infinity();
  while (n != 0) {
    if (mpz_odd_p(n.get_mpz_t())) acc = add_unchecked(c, acc, base);
    n >>= 1;
    if (n != 0) base = add_unchecked(c, base, base);
  }
  return acc;
}

}  // namespace detail

inline Point add(const Curve& c, const Point& p, const Point& q) {
  require_on_curve(c, p);
  require_on_curve(c, q);
  return detail::add_unchecked(c, p, q);
}

inline Point scalar_mul(const Curve& c, const Int& n, const Point& p) {
  require_on_curve(c, p);
  return detail::scalar_mul_unchecked(c, n, p);
}

inline DenomSplit denom_split(const Point& p) {
  if (p.infinity) raise(errc::infinity_point, "denom_split of the point at infinity");
  auto e = sqrt_exact(p.x.get_den());
  if (!e || p.y.get_den() != pow_int(*e, 3))
    raise(errc::malformed_point, "denominators are not (e^2, e^3) in lowest terms");
  return DenomSplit{p.x.get_num(), *e, p.y.get_num()};
}

struct TorsionScreen {
  bool non_torsion;
  long order;  // exact order when torsion, 0 otherwise
};

// Non-torsion iff kP != O for all k <= 12 (Mazur's bound over Q).
inline TorsionScreen torsion_screen(const Curve& c, const Point& p) {
  require_on_curve(c, p);
  if (p.infinity) return {false, 1};
  Point acc = p;
  for (long k = 2; k <= 12; ++k) {
    acc = detail::add_unchecked(c, acc, p);
    if (acc.infinity) return {false, k};
  }
  return {true, 0};
}

}  // namespace eds
