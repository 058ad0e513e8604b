#include "qconic/rational.hpp"

#include "qconic/error.hpp"

namespace qconic {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return InputError("malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  std::size_t digits = 0;
  bool slash = false;
  std::size_t den_digits = 0;
  for (; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (slash || digits == 0) throw bad();
      slash = true;
    } else if (s[i] >= '0' && s[i] <= '9') {
      (slash ? den_digits : digits)++;
    } else {
      throw bad();
    }
  }
  if (digits == 0 || (slash && den_digits == 0)) throw bad();
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw bad();
  if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational round_dyadic(const Rational& q, unsigned bits) {
  Integer scale = 1;
  scale <<= bits;
  Rational scaled = q * Rational(scale);
  Rational out(floor_of(scaled), scale);
  out.canonicalize();
  return out;
}

Rational sqrt_upper(const Rational& q, unsigned bits) {
  if (sgn(q) <= 0) return Rational(0);
  // ceil(sqrt(q * 4^bits)) / 2^bits
  Integer scale = 1;
  scale <<= 2 * bits;
  Integer n = ceil_of(q * Rational(scale));
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  if (root * root < n) root += 1;
  Integer den = 1;
  den <<= bits;
  Rational out(root, den);
  out.canonicalize();
  return out;
}

}  // namespace qconic
