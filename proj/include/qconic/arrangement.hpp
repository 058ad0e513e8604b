#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qconic/error.hpp"
#include "qconic/polynomial.hpp"
#include "qconic/projective.hpp"
#include "qconic/rational.hpp"

namespace qconic {

/// a x^2 + b y^2 + c z^2 + d xy + e xz + f yz, coefficients in that order.
class Conic {
 public:
  using Coefficients = std::array<Rational, 6>;

  Conic() = default;
  explicit Conic(Coefficients coeffs) : c_(std::move(coeffs)) {}
  /// Throws NotHomogeneous unless q is a quadratic form.
  static Conic from_form(const HomogeneousForm& q);

  const Coefficients& coefficients() const { return c_; }
  /// Symmetric matrix [[a, d/2, e/2], [d/2, b, f/2], [e/2, f/2, c]].
  Matrix3 matrix() const;
  Rational determinant() const;
  bool is_smooth() const { return !is_zero(determinant()); }
  HomogeneousForm form() const;

  /// 2 M p, the gradient of the form at p.
  std::array<FieldElement, 3> gradient(const std::array<FieldElement, 3>& p) const;
  FieldElement eval(const std::array<FieldElement, 3>& p) const;

  bool proportional_to(const Conic& other) const;
  /// The conic X -> q(N X).
  Conic transformed(const Matrix3& n) const;

  friend bool operator==(const Conic& a, const Conic& b) { return a.c_ == b.c_; }

 private:
  Coefficients c_;
};

struct Violation {
  enum class Kind { SingularMember, DuplicateMembers, TooFew };
  Kind kind;
  std::size_t first = 0;
  std::size_t second = 0;
  /// Pencil parameter of a singular member, when the list came from a pencil.
  std::optional<Rational> parameter;

  std::string describe() const;
};

/// Rejected arrangement; carries every violation found, not just the first.
class ArrangementError : public InputError {
 public:
  explicit ArrangementError(std::vector<Violation> v);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// k >= 2 smooth, pairwise non-proportional conics. Only constructible
/// through validate_arrangement.
class ConicArrangement {
 public:
  const std::vector<Conic>& conics() const { return conics_; }
  std::size_t size() const { return conics_.size(); }
  const Conic& operator[](std::size_t i) const { return conics_[i]; }

  /// Every member replaced by X -> q(N X).
  ConicArrangement transformed(const Matrix3& n) const;

 private:
  friend ConicArrangement validate_arrangement(std::vector<Conic> conics);
  explicit ConicArrangement(std::vector<Conic> c) : conics_(std::move(c)) {}
  std::vector<Conic> conics_;
};

/// All violations of the arrangement invariants, in a fixed order: TooFew,
/// then singular members by index, then proportional pairs (i < j).
std::vector<Violation> find_violations(const std::vector<Conic>& conics);

/// Throws ArrangementError listing every violation.
ConicArrangement validate_arrangement(std::vector<Conic> conics);

/// The product form of degree 2k, plus the arrangement it came from (absent
/// for free-standing curves).
struct ArrangementPolynomial {
  HomogeneousForm form;
  std::optional<ConicArrangement> source;

  int degree() const { return form.degree(); }
};

ArrangementPolynomial defining_polynomial(const ConicArrangement& arr);

/// Members g1 + t g2 for each t. Singular members are reported with their
/// parameter.
ConicArrangement pencil_members(const Conic& g1, const Conic& g2, const std::vector<Rational>& params);

}  // namespace qconic
