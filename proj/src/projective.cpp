#include "qconic/projective.hpp"

#include <random>
#include <stdexcept>

namespace qconic {

Matrix3 identity3() {
  Matrix3 m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = Rational(i == j ? 1 : 0);
  return m;
}

Rational determinant(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix3 inverse(const Matrix3& m) {
  Rational det = determinant(m);
  if (is_zero(det)) throw std::domain_error("singular 3x3 matrix");
  Matrix3 out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      // cofactor of (j, i)
      std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      out[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / det;
    }
  return out;
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  Matrix3 out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      out[i][j] = s;
    }
  return out;
}

HomogeneousForm substitute(const HomogeneousForm& f, const Matrix3& n) {
  std::array<Poly3, 3> lin;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      Exponent<3> m{};
      m[c] = 1;
      lin[r].add_term(m, n[r][c]);
    }
  const int d = f.degree();
  std::array<std::vector<Poly3>, 3> powers;
  for (std::size_t r = 0; r < 3; ++r) {
    powers[r].push_back(Poly3::constant(Rational(1)));
    for (int e = 1; e <= d; ++e) powers[r].push_back(powers[r].back() * lin[r]);
  }
  Poly3 out;
  for (const auto& [m, c] : f.poly().terms()) {
    Poly3 t = c * (powers[0][static_cast<std::size_t>(m[0])] * powers[1][static_cast<std::size_t>(m[1])]);
    out = out + t * powers[2][static_cast<std::size_t>(m[2])];
  }
  return HomogeneousForm(std::move(out), d);
}

std::array<FieldElement, 3> transform_point(const Matrix3& n, const std::array<FieldElement, 3>& p) {
  std::array<FieldElement, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    FieldElement s;
    for (std::size_t j = 0; j < 3; ++j)
      if (!is_zero(n[i][j])) s = s + FieldElement(n[i][j]) * p[j];
    out[i] = s;
  }
  return out;
}

namespace {

long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

Matrix3 random_invertible(std::uint64_t seed, int bound) {
  std::mt19937_64 rng(seed);
  for (;;) {
    Matrix3 m;
    for (auto& row : m)
      for (auto& v : row) v = Rational(draw(rng, -bound, bound));
    if (!is_zero(determinant(m))) return m;
  }
}

Matrix3 random_rational_invertible(std::uint64_t seed, int bound) {
  std::mt19937_64 rng(seed);
  for (;;) {
    Matrix3 m;
    for (auto& row : m)
      for (auto& v : row) v = frac(draw(rng, -bound, bound), draw(rng, 1, bound));
    if (!is_zero(determinant(m))) return m;
  }
}

}  // namespace qconic
