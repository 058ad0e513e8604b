#include "qconic/upoly.hpp"

#include <sstream>

namespace qconic {

QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const Rational& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  std::vector<Rational> out;
  for (const Rational& c : p.coeffs()) {
    Rational scaled = c * Rational(den_lcm);
    out.push_back(scaled);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_num_mpz_t());
  }
  if (sgn(out.back()) < 0) content = -content;
  for (Rational& c : out) c /= Rational(content);
  return QPoly(std::move(out));
}

std::vector<std::pair<QPoly, int>> squarefree_factorization(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  if (p.degree() <= 0) return out;
  QPoly f = p.monic();
  QPoly df = f.derivative();
  QPoly a = gcd(f, df);
  QPoly b = f / a;
  QPoly c = df / a - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    QPoly d = gcd(b, c);
    if (d.degree() > 0) out.emplace_back(d, i);
    QPoly b_next = b / d;
    c = c / d - b_next.derivative();
    b = b_next;
    // c can vanish once b is exhausted; the loop guard handles it.
    ++i;
  }
  return out;
}

bool is_squarefree(const QPoly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (is_zero(c)) continue;
    Rational mag = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    bool unit = (mag == 1);
    if (!unit || i == 0) os << to_string(mag);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace qconic
