#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qconic/rational.hpp"

namespace qconic {

namespace detail {
// Unqualified so that ADL also finds is_zero for coefficient types declared
// after this header.
template <class F>
bool coeff_is_zero(const F& x) {
  return is_zero(x);
}
}  // namespace detail

/// Dense univariate polynomial over a field, coefficients stored from the
/// constant term upwards. Trailing zeros are never stored, so the zero
/// polynomial has an empty coefficient vector and degree -1.
///
/// F must be constructible from an int and provide is_zero(F) via ADL.
template <class F>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

  static UPoly constant(F value) { return UPoly(std::vector<F>{std::move(value)}); }
  static UPoly monomial(F coeff, int degree) {
    std::vector<F> c(static_cast<std::size_t>(degree) + 1, F(0));
    c.back() = std::move(coeff);
    return UPoly(std::move(c));
  }
  /// The polynomial t.
  static UPoly variable() { return monomial(F(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : F(0);
  }
  const F& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  UPoly derivative() const {
    std::vector<F> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * F(static_cast<int>(i)));
    return UPoly(std::move(d));
  }

  /// Horner evaluation at a value of any type that multiplies with F.
  template <class X>
  X eval(const X& x) const {
    X acc = X(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * x;
      acc = acc + X(*it);
    }
    return acc;
  }

  UPoly monic() const {
    if (c_.empty()) return *this;
    F inv = F(1) / c_.back();
    std::vector<F> out;
    out.reserve(c_.size());
    for (const F& a : c_) out.push_back(a * inv);
    return UPoly(std::move(out));
  }

  UPoly operator-() const {
    std::vector<F> out;
    for (const F& a : c_) out.push_back(-a);
    return UPoly(std::move(out));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<F> out(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = out[i] + b.c_[i];
    return UPoly(std::move(out));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return UPoly();
    std::vector<F> out(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(out));
  }
  friend UPoly operator*(const F& s, const UPoly& a) {
    std::vector<F> out;
    for (const F& x : a.c_) out.push_back(s * x);
    return UPoly(std::move(out));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

/// Euclidean division; b must be nonzero.
template <class F>
std::pair<UPoly<F>, UPoly<F>> divmod(const UPoly<F>& a, const UPoly<F>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<F> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {UPoly<F>(), a};
  std::vector<F> quo(static_cast<std::size_t>(da - db) + 1, F(0));
  F inv = F(1) / b.leading();
  for (int i = da; i >= db; --i) {
    F q = rem[static_cast<std::size_t>(i)] * inv;
    if (is_zero(q)) continue;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) {
      auto& r = rem[static_cast<std::size_t>(i - db + j)];
      r = r - q * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UPoly<F>(std::move(quo)), UPoly<F>(std::move(rem))};
}

template <class F>
UPoly<F> operator%(const UPoly<F>& a, const UPoly<F>& b) {
  return divmod(a, b).second;
}

template <class F>
UPoly<F> operator/(const UPoly<F>& a, const UPoly<F>& b) {
  return divmod(a, b).first;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    UPoly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <class F>
struct ExtendedGcd {
  UPoly<F> g, s, t;
};

template <class F>
ExtendedGcd<F> extended_gcd(const UPoly<F>& a, const UPoly<F>& b) {
  UPoly<F> r0 = a, r1 = b;
  UPoly<F> s0 = UPoly<F>::constant(F(1)), s1;
  UPoly<F> t0, t1 = UPoly<F>::constant(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly<F> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly<F> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  F inv = F(1) / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

using QPoly = UPoly<Rational>;

/// Content-free integer multiple with positive leading coefficient.
QPoly primitive_part(const QPoly& p);

/// Yun's algorithm. Returns (factor, multiplicity) pairs with monic,
/// squarefree, pairwise coprime factors; product of factor^mult equals the
/// monic version of p.
std::vector<std::pair<QPoly, int>> squarefree_factorization(const QPoly& p);

bool is_squarefree(const QPoly& p);

/// Human-readable rendering in the variable `var`.
std::string to_string(const QPoly& p, const std::string& var = "t");

}  // namespace qconic
