#pragma once

#include <algorithm>
#include <vector>

#include "eds/intutil.hpp"

namespace eds {

// Dense univariate polynomial over a commutative ring C.
// C needs: default construction to zero, +, -, *, ==.
template <class C>
class Poly {
 public:
  Poly() = default;
  explicit Poly(C c0) : coeffs_{std::move(c0)} { trim(); }
  explicit Poly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly monomial(C c, std::size_t degree) {
    std::vector<C> v(degree + 1);
    v[degree] = std::move(c);
    return Poly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<C>& coefficients() const { return coeffs_; }

  C coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C{}; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<C> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(v));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<C> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(v));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<C> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(v));
  }

  friend Poly operator*(const C& s, const Poly& a) {
    std::vector<C> v(a.coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * a.coeffs_[i];
    return Poly(std::move(v));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  template <class V>
  V eval(const V& x) const {
    V acc{};
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + V(coeffs_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == C{}) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;  // coeffs_[i] multiplies x^i
};

}  // namespace eds
