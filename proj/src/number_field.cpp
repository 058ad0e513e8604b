#include "qconic/number_field.hpp"

#include <algorithm>
#include <stdexcept>

#include "qconic/error.hpp"

namespace qconic {

FieldPtr NumberField::create(QPoly minpoly, ComplexBox box) {
  if (minpoly.degree() < 1 || minpoly.leading() != 1)
    throw InputError("minimal polynomial must be monic of positive degree");
  if (!is_irreducible(minpoly)) throw InputError("polynomial " + to_string(minpoly) + " is reducible over Q");
  Rational radius(0);
  for (int attempt = 0; attempt < 60; ++attempt) {
    auto roots = isolate_complex_roots(minpoly, radius);
    int inside = 0, undecided = 0;
    Rational worst(0);
    for (const auto& r : roots) {
      ComplexBox b = r.box();
      worst = std::max(worst, r.radius);
      if (box.contains(b)) ++inside;
      else if (!box.disjoint(b)) ++undecided;
    }
    if (undecided == 0) {
      if (inside != 1) throw InputError("box does not isolate exactly one root of " + to_string(minpoly));
      return FieldPtr(new NumberField(std::move(minpoly), std::move(box)));
    }
    radius = is_zero(worst) ? frac(1, 1 << 10) : worst / Rational(256);
  }
  throw ComputationError("could not certify isolating box for " + to_string(minpoly));
}

std::vector<FieldPtr> NumberField::conjugate_fields(const QPoly& irreducible) {
  QPoly m = irreducible.monic();
  std::vector<FieldPtr> out;
  for (const auto& r : isolate_complex_roots(m)) out.push_back(FieldPtr(new NumberField(m, r.box())));
  return out;
}

RootEnclosure NumberField::refine(const Rational& radius) const {
  Rational target = radius;
  for (int attempt = 0; attempt < 60; ++attempt) {
    auto roots = isolate_complex_roots(minpoly_, target);
    const RootEnclosure* hit = nullptr;
    int touching = 0;
    for (const auto& r : roots)
      if (!box_.disjoint(r.box())) {
        ++touching;
        hit = &r;
      }
    if (touching == 1) return *hit;
    target /= Rational(256);
  }
  throw ComputationError("could not refine root of " + to_string(minpoly_));
}

std::complex<double> NumberField::approx_generator() const { return box_.center().approx(); }

bool NumberField::same_as(const NumberField& other) const {
  // Arithmetic only depends on Q[t]/(m); the box merely picks an embedding.
  return this == &other || minpoly_ == other.minpoly_;
}

FieldElement::FieldElement(const Rational& q) {
  if (!qconic::is_zero(q)) c_.push_back(q);
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), c_(std::move(coords)) {
  reduce();
}

FieldElement FieldElement::generator(FieldPtr field) {
  return FieldElement(std::move(field), {Rational(0), Rational(1)});
}

void FieldElement::reduce() {
  if (field_ && static_cast<int>(c_.size()) > field_->degree()) {
    c_ = (QPoly(std::move(c_)) % field_->minimal_polynomial()).coeffs();
  }
  if (!field_ && c_.size() > 1) throw std::logic_error("rational element with non-scalar coordinates");
  while (!c_.empty() && qconic::is_zero(c_.back())) c_.pop_back();
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw std::logic_error("field element is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

const FieldPtr& FieldElement::common_field(const FieldElement& a, const FieldElement& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_ && !a.field_->same_as(*b.field_))
    throw std::logic_error("arithmetic between elements of different number fields");
  return a.field_ ? a.field_ : b.field_;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const FieldPtr& f = FieldElement::common_field(a, b);
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return FieldElement(f, std::move(out));
}

FieldElement operator-(const FieldElement& a) {
  FieldElement r = a;
  for (Rational& c : r.c_) c = -c;
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const FieldPtr& f = FieldElement::common_field(a, b);
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
  return FieldElement(f, std::move(out));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const FieldPtr& f = FieldElement::common_field(a, b);
  if (a.c_.empty() || b.c_.empty()) return FieldElement(f, {});
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return FieldElement(f, std::move(out));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  if (is_rational()) return FieldElement(field_, {Rational(1) / c_[0]});
  auto eg = extended_gcd(QPoly(c_), field_->minimal_polynomial());
  if (eg.g.degree() != 0) throw std::logic_error("minimal polynomial is not irreducible");
  return FieldElement(field_, eg.s.coeffs());
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  FieldElement::common_field(a, b);
  return a * b.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  FieldElement::common_field(a, b);
  return a.c_ == b.c_;
}

std::complex<double> FieldElement::approx() const {
  std::complex<double> g = field_ ? field_->approx_generator() : std::complex<double>(0);
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + it->get_d();
  return acc;
}

std::string FieldElement::to_string(const std::string& gen) const { return qconic::to_string(QPoly(c_), gen); }

std::vector<std::vector<Rational>> multiplication_matrix(const FieldElement& x) {
  if (!x.field()) return {{x.rational_value()}};
  const int n = x.field()->degree();
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  FieldElement basis = FieldElement(x.field(), {Rational(1)});
  FieldElement t = FieldElement::generator(x.field());
  for (int j = 0; j < n; ++j) {
    FieldElement col = x * basis;
    for (std::size_t i = 0; i < col.coordinates().size(); ++i) m[i][static_cast<std::size_t>(j)] = col.coordinates()[i];
    basis = basis * t;
  }
  return m;
}

QPoly minimal_polynomial(const FieldElement& x) {
  if (x.is_rational()) return QPoly{-x.rational_value(), Rational(1)};
  QPoly cp = characteristic_polynomial(multiplication_matrix(x));
  return (cp / gcd(cp, cp.derivative())).monic();
}

FieldElement IsolatedRoot::element() const {
  if (rational_value) return FieldElement(*rational_value);
  return FieldElement::generator(field);
}

ComplexBox IsolatedRoot::box() const {
  if (rational_value) return {*rational_value, *rational_value, Rational(0), Rational(0)};
  return field->box();
}

std::vector<IsolatedRoot> isolate_roots(const QPoly& u) {
  if (u.is_zero()) throw std::invalid_argument("isolate_roots of the zero polynomial");
  std::vector<QFactor> factors = factor(u);
  std::vector<IsolatedRoot> rational, algebraic;
  std::stable_sort(factors.begin(), factors.end(), [](const QFactor& a, const QFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    for (int i = a.factor.degree(); i >= 0; --i) {
      const Rational& x = a.factor.coeffs()[static_cast<std::size_t>(i)];
      const Rational& y = b.factor.coeffs()[static_cast<std::size_t>(i)];
      if (x != y) return x < y;
    }
    return false;
  });
  for (const QFactor& f : factors) {
    if (f.factor.degree() == 1) {
      IsolatedRoot r;
      r.minimal_polynomial = f.factor;
      r.multiplicity = f.multiplicity;
      r.rational_value = -f.factor.coeffs()[0];
      rational.push_back(std::move(r));
    } else {
      for (FieldPtr& field : NumberField::conjugate_fields(f.factor)) {
        IsolatedRoot r;
        r.minimal_polynomial = f.factor;
        r.multiplicity = f.multiplicity;
        r.field = std::move(field);
        algebraic.push_back(std::move(r));
      }
    }
  }
  std::sort(rational.begin(), rational.end(),
            [](const IsolatedRoot& a, const IsolatedRoot& b) { return *a.rational_value < *b.rational_value; });
  rational.insert(rational.end(), algebraic.begin(), algebraic.end());
  return rational;
}

}  // namespace qconic
