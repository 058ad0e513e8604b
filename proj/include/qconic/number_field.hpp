#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qconic/rational.hpp"
#include "qconic/roots.hpp"
#include "qconic/upoly.hpp"

namespace qconic {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q(theta) for an algebraic number theta, given by its monic irreducible
/// minimal polynomial and a box isolating theta among its conjugates.
/// Immutable; shared between elements through FieldPtr.
class NumberField {
 public:
  /// Verifies irreducibility and that `box` isolates exactly one root.
  static FieldPtr create(QPoly minimal_polynomial, ComplexBox box);

  /// One field per root of an irreducible polynomial, in isolation order.
  static std::vector<FieldPtr> conjugate_fields(const QPoly& irreducible);

  const QPoly& minimal_polynomial() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  const ComplexBox& box() const { return box_; }

  /// A certified enclosure of the generator with radius at most `radius`.
  RootEnclosure refine(const Rational& radius) const;

  std::complex<double> approx_generator() const;

  /// Same abstract field Q[t]/(m), whichever conjugate the box selects.
  bool same_as(const NumberField& other) const;

 private:
  NumberField(QPoly minpoly, ComplexBox box) : minpoly_(std::move(minpoly)), box_(std::move(box)) {}
  QPoly minpoly_;
  ComplexBox box_;
};

/// An element of Q or of a NumberField, stored as the reduced remainder
/// modulo the minimal polynomial. A null field means the rationals; mixing a
/// rational with a field element promotes to the field.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(int v) : FieldElement(Rational(v)) {}
  FieldElement(long v) : FieldElement(Rational(v)) {}
  FieldElement(const Rational& q);
  FieldElement(FieldPtr field, std::vector<Rational> coords);

  static FieldElement generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coordinates() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  Rational rational_value() const;

  FieldElement inverse() const;
  std::complex<double> approx() const;
  /// As a polynomial in the generator, e.g. "1/2*t + 3".
  std::string to_string(const std::string& gen = "t") const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

 private:
  static const FieldPtr& common_field(const FieldElement& a, const FieldElement& b);
  void reduce();

  FieldPtr field_;
  std::vector<Rational> c_;
};

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }

/// Matrix of multiplication by x on the power basis of its field.
std::vector<std::vector<Rational>> multiplication_matrix(const FieldElement& x);

/// Minimal polynomial of x over Q.
QPoly minimal_polynomial(const FieldElement& x);

struct IsolatedRoot {
  QPoly minimal_polynomial;      // monic irreducible
  int multiplicity = 0;
  std::optional<Rational> rational_value;
  FieldPtr field;                // null for rational roots
  FieldElement element() const;  // the root itself
  ComplexBox box() const;
};

/// Squarefree factorization, exact rational roots, and one NumberField per
/// root of every nonlinear irreducible factor. Multiplicities sum to deg u.
/// Order: rational roots ascending, then irreducible factors by degree and
/// coefficients, conjugates in isolation order.
std::vector<IsolatedRoot> isolate_roots(const QPoly& u);

}  // namespace qconic
