#pragma once

#include <complex>
#include <vector>

#include "qconic/rational.hpp"
#include "qconic/upoly.hpp"

namespace qconic {

struct CRational {
  Rational re, im;

  CRational() = default;
  CRational(Rational r) : re(std::move(r)), im(0) {}
  CRational(int r) : re(r), im(0) {}
  CRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  Rational norm2() const { return re * re + im * im; }
  CRational conj() const { return {re, -im}; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  std::complex<double> approx() const { return {re.get_d(), im.get_d()}; }

  friend CRational operator+(const CRational& a, const CRational& b) { return {a.re + b.re, a.im + b.im}; }
  friend CRational operator-(const CRational& a, const CRational& b) { return {a.re - b.re, a.im - b.im}; }
  friend CRational operator-(const CRational& a) { return {-a.re, -a.im}; }
  friend CRational operator*(const CRational& a, const CRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CRational operator/(const CRational& a, const CRational& b) {
    Rational n = b.norm2();
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const CRational& a, const CRational& b) { return a.re == b.re && a.im == b.im; }
};

inline bool is_zero(const CRational& z) { return z.is_zero(); }

/// Closed axis-parallel rectangle with rational corners.
struct ComplexBox {
  Rational re_lo, re_hi, im_lo, im_hi;

  bool contains(const ComplexBox& other) const {
    return re_lo <= other.re_lo && other.re_hi <= re_hi && im_lo <= other.im_lo && other.im_hi <= im_hi;
  }
  bool disjoint(const ComplexBox& other) const {
    return re_hi < other.re_lo || other.re_hi < re_lo || im_hi < other.im_lo || other.im_hi < im_lo;
  }
  CRational center() const { return {(re_lo + re_hi) / 2, (im_lo + im_hi) / 2}; }
  friend bool operator==(const ComplexBox&, const ComplexBox&) = default;
};

/// A closed disk certified to contain exactly one root of the polynomial it
/// was computed for.
struct RootEnclosure {
  CRational center;
  Rational radius;

  ComplexBox box() const {
    return {center.re - radius, center.re + radius, center.im - radius, center.im + radius};
  }
};

/// Certified isolation of every complex root of a squarefree polynomial.
///
/// Approximations are polished by Weierstrass (Durand-Kerner) steps in exact
/// dyadic arithmetic. With corrections W_i, the polynomial is the
/// characteristic polynomial of diag(z) - W 1^T, so Gershgorin disks centred
/// at z_i - W_i with radius (n-1)|W_i| enclose the roots; disjoint disks
/// hold exactly one root each. The enclosing boxes returned are pairwise
/// disjoint and every radius is at most `max_radius` (ignored when zero).
/// Order: by approximate real part, then imaginary part.
std::vector<RootEnclosure> isolate_complex_roots(const QPoly& squarefree, const Rational& max_radius = Rational(0));

/// Irreducible factors over Q of a squarefree polynomial, monic, sorted by
/// degree and then coefficients.
std::vector<QPoly> irreducible_factors(const QPoly& squarefree);

struct QFactor {
  QPoly factor;  // monic irreducible
  int multiplicity;
};

/// Complete factorization into monic irreducibles with multiplicities.
std::vector<QFactor> factor(const QPoly& p);

bool is_irreducible(const QPoly& p);

/// Characteristic polynomial det(t I - M) of a square rational matrix
/// (Faddeev-LeVerrier).
QPoly characteristic_polynomial(const std::vector<std::vector<Rational>>& m);

}  // namespace qconic
