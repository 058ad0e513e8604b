#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qconic/number_field.hpp"
#include "qconic/rational.hpp"

namespace qconic {

template <std::size_t N>
using Exponent = std::array<int, N>;

/// Sparse polynomial in N variables. Terms are kept in lexicographic order
/// with the first variable largest, highest monomial first; zero
/// coefficients are never stored.
template <class C, std::size_t N>
class SparsePoly {
 public:
  using Monomial = Exponent<N>;
  using Terms = std::map<Monomial, C, std::greater<Monomial>>;

  SparsePoly() = default;

  static SparsePoly constant(const C& c) {
    SparsePoly p;
    p.add_term(Monomial{}, c);
    return p;
  }
  static SparsePoly variable(std::size_t i) {
    SparsePoly p;
    Monomial m{};
    m[i] = 1;
    p.add_term(m, C(1));
    return p;
  }
  static SparsePoly term(const Monomial& m, const C& c) {
    SparsePoly p;
    p.add_term(m, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  C coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(const Monomial& m, const C& c) {
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  /// Maximum total degree; -1 for zero.
  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, sum(m));
    return d;
  }
  /// Minimum total degree of a term (the order at the origin); -1 for zero.
  int order() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = (d < 0) ? sum(m) : std::min(d, sum(m));
    return d;
  }
  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }
  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      if (d >= 0 && sum(m) != d) return false;
      d = sum(m);
    }
    return true;
  }

  SparsePoly derivative(std::size_t var) const {
    SparsePoly out;
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Monomial mm = m;
      mm[var] -= 1;
      out.add_term(mm, c * C(m[var]));
    }
    return out;
  }

  template <class X>
  X eval(const std::array<X, N>& point) const {
    X acc = X(0);
    for (const auto& [m, c] : terms_) {
      X t = X(c);
      for (std::size_t i = 0; i < N; ++i)
        for (int k = 0; k < m[i]; ++k) t = t * point[i];
      acc = acc + t;
    }
    return acc;
  }

  SparsePoly operator-() const {
    SparsePoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) {
    for (const auto& [m, c] : b.terms_) a.add_term(m, c);
    return a;
  }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) {
    for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
    return a;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m;
        for (std::size_t i = 0; i < N; ++i) m[i] = ma[i] + mb[i];
        out.add_term(m, ca * cb);
      }
    return out;
  }
  friend SparsePoly operator*(const C& s, const SparsePoly& a) {
    SparsePoly out;
    for (const auto& [m, c] : a.terms_) out.add_term(m, s * c);
    return out;
  }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
  }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

  SparsePoly pow(int e) const {
    SparsePoly out = constant(C(1));
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  static int sum(const Monomial& m) {
    int s = 0;
    for (int e : m) s += e;
    return s;
  }

 private:
  static bool is_zero_coeff(const C& c) { return detail::coeff_is_zero(c); }
  Terms terms_;
};

using Poly3 = SparsePoly<Rational, 3>;
/// Polynomial in local affine coordinates (u, v) over Q or a number field.
using AffinePolynomial = SparsePoly<FieldElement, 2>;

enum Variable : std::size_t { kX = 0, kY = 1, kZ = 2 };

/// Exponent triples (i, j, l) with i + j + l = t, in lexicographic order with
/// x > y > z, highest first: x^t, x^(t-1) y, x^(t-1) z, x^(t-2) y^2, ...
/// Every matrix built from graded pieces uses this order.
std::vector<Exponent<3>> monomial_basis(int t);

/// Position of a degree-t monomial in monomial_basis(t).
std::size_t monomial_index(const Exponent<3>& m);

inline std::size_t graded_dimension(int t) {
  return t < 0 ? 0 : static_cast<std::size_t>((t + 1) * (t + 2) / 2);
}

/// Ternary form whose terms all have total degree exactly degree(). The zero
/// form keeps the degree it was built with.
class HomogeneousForm {
 public:
  HomogeneousForm() = default;
  /// Throws NotHomogeneous if some term has the wrong degree.
  HomogeneousForm(Poly3 poly, int degree);
  /// Infers the degree; throws NotHomogeneous for mixed degrees or zero.
  static HomogeneousForm from_poly(const Poly3& poly);

  int degree() const { return degree_; }
  const Poly3& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  Rational coeff(const Exponent<3>& m) const { return poly_.coeff(m); }
  /// Coefficients in monomial_basis(degree()) order.
  std::vector<Rational> dense() const;

  friend HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
    return HomogeneousForm(a.poly_ * b.poly_, a.degree_ + b.degree_);
  }
  friend HomogeneousForm operator+(const HomogeneousForm& a, const HomogeneousForm& b);
  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return a.degree_ == b.degree_ && a.poly_ == b.poly_;
  }

  /// Integer multiple with coprime coefficients (positive leading term).
  HomogeneousForm primitive() const;

  template <class X>
  X eval(const std::array<X, 3>& p) const {
    return poly_.eval(p);
  }

 private:
  Poly3 poly_;
  int degree_ = 0;
};

/// Formal partial derivative; degree drops by one. Requires degree >= 1.
HomogeneousForm derivative(const HomogeneousForm& p, Variable var);

/// Sylvester resultant with respect to `var`. Convention: the Sylvester
/// matrix has deg_var(q) shifted rows of p's coefficients (highest power
/// first) above deg_var(p) rows of q's, so res(x - 1, x + 1) = 2 and
/// res(p, q) = lc(p)^deg(q) * prod q(roots of p).
/// Throws std::invalid_argument when p or q is zero or free of `var`.
Poly3 resultant(const Poly3& p, const Poly3& q, Variable var);

/// Exact quotient a / b; throws std::domain_error when b does not divide a.
Poly3 exact_divide(const Poly3& a, const Poly3& b);

/// Coefficients of p as a polynomial in `var` alone; p must only involve
/// `var` otherwise.
QPoly to_univariate(const Poly3& p, Variable var);

std::string to_string(const Poly3& p);

}  // namespace qconic
