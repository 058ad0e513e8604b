#include "qconic/arrangement.hpp"

#include <sstream>

namespace qconic {
namespace {

const Exponent<3> kMonomials[6] = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};

}  // namespace

Conic Conic::from_form(const HomogeneousForm& q) {
  if (q.degree() != 2) throw NotHomogeneous("a conic needs a quadratic form, got degree " + std::to_string(q.degree()));
  Coefficients c;
  for (std::size_t i = 0; i < 6; ++i) c[i] = q.coeff(kMonomials[i]);
  return Conic(c);
}

Matrix3 Conic::matrix() const {
  const Rational half = frac(1, 2);
  const auto& [a, b, c, d, e, f] = c_;
  return {{{a, half * d, half * e}, {half * d, b, half * f}, {half * e, half * f, c}}};
}

Rational Conic::determinant() const { return qconic::determinant(matrix()); }

HomogeneousForm Conic::form() const {
  Poly3 p;
  for (std::size_t i = 0; i < 6; ++i) p.add_term(kMonomials[i], c_[i]);
  return HomogeneousForm(std::move(p), 2);
}

std::array<FieldElement, 3> Conic::gradient(const std::array<FieldElement, 3>& p) const {
  Matrix3 m = matrix();
  for (auto& row : m)
    for (auto& v : row) v *= 2;
  return transform_point(m, p);
}

FieldElement Conic::eval(const std::array<FieldElement, 3>& p) const {
  FieldElement s;
  for (std::size_t i = 0; i < 6; ++i) {
    if (is_zero(c_[i])) continue;
    FieldElement t(c_[i]);
    for (std::size_t v = 0; v < 3; ++v)
      for (int e = 0; e < kMonomials[i][v]; ++e) t = t * p[v];
    s = s + t;
  }
  return s;
}

bool Conic::proportional_to(const Conic& other) const {
  // Vectors u, v are proportional iff every 2x2 minor u_i v_j - u_j v_i vanishes.
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (c_[i] * other.c_[j] != c_[j] * other.c_[i]) return false;
  return true;
}

Conic Conic::transformed(const Matrix3& n) const { return from_form(substitute(form(), n)); }

std::string Violation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::SingularMember:
      os << "conic " << first << " is singular (zero determinant)";
      if (parameter) os << " at pencil parameter t = " << to_string(*parameter);
      break;
    case Kind::DuplicateMembers:
      os << "conics " << first << " and " << second << " are proportional";
      break;
    case Kind::TooFew:
      os << "an arrangement needs at least 2 conics, got " << first;
      break;
  }
  return os.str();
}

namespace {

std::string join(const std::vector<Violation>& v) {
  std::string s = "invalid arrangement: ";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + v[i].describe();
  return s;
}

}  // namespace

ArrangementError::ArrangementError(std::vector<Violation> v) : InputError(join(v)), violations_(std::move(v)) {}

std::vector<Violation> find_violations(const std::vector<Conic>& conics) {
  std::vector<Violation> out;
  if (conics.size() < 2) out.push_back({Violation::Kind::TooFew, conics.size(), 0, std::nullopt});
  for (std::size_t i = 0; i < conics.size(); ++i)
    if (!conics[i].is_smooth()) out.push_back({Violation::Kind::SingularMember, i, 0, std::nullopt});
  for (std::size_t i = 0; i < conics.size(); ++i)
    for (std::size_t j = i + 1; j < conics.size(); ++j)
      if (conics[i].proportional_to(conics[j])) out.push_back({Violation::Kind::DuplicateMembers, i, j, std::nullopt});
  return out;
}

ConicArrangement validate_arrangement(std::vector<Conic> conics) {
  auto v = find_violations(conics);
  if (!v.empty()) throw ArrangementError(std::move(v));
  return ConicArrangement(std::move(conics));
}

ConicArrangement ConicArrangement::transformed(const Matrix3& n) const {
  std::vector<Conic> out;
  for (const Conic& c : conics_) out.push_back(c.transformed(n));
  return validate_arrangement(std::move(out));
}

ArrangementPolynomial defining_polynomial(const ConicArrangement& arr) {
  HomogeneousForm f(Poly3::constant(Rational(1)), 0);
  for (const Conic& c : arr.conics()) f = f * c.form();
  return {std::move(f), arr};
}

ConicArrangement pencil_members(const Conic& g1, const Conic& g2, const std::vector<Rational>& params) {
  if (g1.proportional_to(g2)) throw ArrangementError({{Violation::Kind::DuplicateMembers, 0, 1, std::nullopt}});
  std::vector<Conic> members;
  for (const Rational& t : params) {
    Conic::Coefficients c;
    for (std::size_t i = 0; i < 6; ++i) c[i] = g1.coefficients()[i] + t * g2.coefficients()[i];
    members.emplace_back(c);
  }
  auto v = find_violations(members);
  for (Violation& x : v)
    if (x.kind == Violation::Kind::SingularMember) x.parameter = params[x.first];
  if (!v.empty()) throw ArrangementError(std::move(v));
  return validate_arrangement(std::move(members));
}

}  // namespace qconic
