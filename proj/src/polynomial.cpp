#include "qconic/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "qconic/error.hpp"

namespace qconic {

std::vector<Exponent<3>> monomial_basis(int t) {
  std::vector<Exponent<3>> out;
  if (t < 0) return out;
  out.reserve(graded_dimension(t));
  for (int i = t; i >= 0; --i)
    for (int j = t - i; j >= 0; --j) out.push_back({i, j, t - i - j});
  return out;
}

std::size_t monomial_index(const Exponent<3>& m) {
  int t = m[0] + m[1] + m[2];
  int a = t - m[0];
  return static_cast<std::size_t>(a * (a + 1) / 2 + (a - m[1]));
}

HomogeneousForm::HomogeneousForm(Poly3 poly, int degree) : poly_(std::move(poly)), degree_(degree) {
  if (degree < 0) throw NotHomogeneous("negative degree");
  for (const auto& [m, c] : poly_.terms())
    if (Poly3::sum(m) != degree)
      throw NotHomogeneous("term of degree " + std::to_string(Poly3::sum(m)) + " in a form of degree " +
                           std::to_string(degree));
}

HomogeneousForm HomogeneousForm::from_poly(const Poly3& poly) {
  if (poly.is_zero()) throw NotHomogeneous("the zero polynomial has no degree");
  if (!poly.is_homogeneous()) throw NotHomogeneous("polynomial mixes terms of different degrees");
  return HomogeneousForm(poly, poly.total_degree());
}

std::vector<Rational> HomogeneousForm::dense() const {
  std::vector<Rational> out(graded_dimension(degree_), Rational(0));
  for (const auto& [m, c] : poly_.terms()) out[monomial_index(m)] = c;
  return out;
}

HomogeneousForm operator+(const HomogeneousForm& a, const HomogeneousForm& b) {
  if (a.degree_ != b.degree_ && !a.is_zero() && !b.is_zero())
    throw NotHomogeneous("sum of forms of different degrees");
  int d = a.is_zero() ? b.degree_ : a.degree_;
  return HomogeneousForm(a.poly_ + b.poly_, d);
}

HomogeneousForm HomogeneousForm::primitive() const {
  if (is_zero()) return *this;
  Integer den_lcm = 1, content = 0;
  for (const auto& [m, c] : poly_.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [m, c] : poly_.terms()) {
    Rational s = c * Rational(den_lcm);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), s.get_num_mpz_t());
  }
  Rational scale = Rational(den_lcm) / Rational(content);
  if (sgn(poly_.terms().begin()->second) < 0) scale = -scale;
  return HomogeneousForm(scale * poly_, degree_);
}

HomogeneousForm derivative(const HomogeneousForm& p, Variable var) {
  if (p.degree() < 1) throw std::invalid_argument("derivative of a degree-0 form");
  return HomogeneousForm(p.poly().derivative(var), p.degree() - 1);
}

Poly3 exact_divide(const Poly3& a, const Poly3& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& [lm_b, lc_b] = *b.terms().begin();
  Poly3 quotient, rem = a;
  while (!rem.is_zero()) {
    const auto& [lm_r, lc_r] = *rem.terms().begin();
    Exponent<3> m;
    for (std::size_t i = 0; i < 3; ++i) {
      m[i] = lm_r[i] - lm_b[i];
      if (m[i] < 0) throw std::domain_error("inexact polynomial division");
    }
    Poly3 t = Poly3::term(m, lc_r / lc_b);
    quotient = quotient + t;
    rem = rem - t * b;
  }
  return quotient;
}

namespace {

// Coefficient of var^k, as a polynomial free of var.
Poly3 coefficient_in(const Poly3& p, Variable var, int k) {
  Poly3 out;
  for (const auto& [m, c] : p.terms())
    if (m[var] == k) {
      Exponent<3> mm = m;
      mm[var] = 0;
      out.add_term(mm, c);
    }
  return out;
}

Poly3 bareiss_determinant(std::vector<std::vector<Poly3>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly3::constant(Rational(1));
  bool negate = false;
  Poly3 prev = Poly3::constant(Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Poly3();
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = Poly3();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace

Poly3 resultant(const Poly3& p, const Poly3& q, Variable var) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of the zero polynomial");
  const int dp = p.degree_in(var), dq = q.degree_in(var);
  if (dp < 1 || dq < 1) throw std::invalid_argument("resultant input does not involve the eliminated variable");
  const std::size_t n = static_cast<std::size_t>(dp + dq);
  std::vector<std::vector<Poly3>> s(n, std::vector<Poly3>(n));
  for (int i = 0; i < dq; ++i)
    for (int k = 0; k <= dp; ++k) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = coefficient_in(p, var, dp - k);
  for (int i = 0; i < dp; ++i)
    for (int k = 0; k <= dq; ++k)
      s[static_cast<std::size_t>(dq + i)][static_cast<std::size_t>(i + k)] = coefficient_in(q, var, dq - k);
  return bareiss_determinant(std::move(s));
}

QPoly to_univariate(const Poly3& p, Variable var) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(0, p.degree_in(var) + 1)), Rational(0));
  for (const auto& [m, coeff] : p.terms()) {
    for (std::size_t i = 0; i < 3; ++i)
      if (i != var && m[i] != 0) throw std::invalid_argument("polynomial involves more than one variable");
    c[static_cast<std::size_t>(m[var])] = coeff;
  }
  return QPoly(std::move(c));
}

std::string to_string(const Poly3& p) {
  if (p.is_zero()) return "0";
  static const char* names[3] = {"x", "y", "z"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    bool constant = (m[0] == 0 && m[1] == 0 && m[2] == 0);
    bool need_star = false;
    if (mag != 1 || constant) {
      os << to_string(mag);
      need_star = true;
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << names[i];
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

}  // namespace qconic
