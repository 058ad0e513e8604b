#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qconic/error.hpp"
#include "qconic/linalg.hpp"
#include "qconic/number_field.hpp"
#include "qconic/polynomial.hpp"
#include "qconic/roots.hpp"

using namespace qconic;

namespace {

Poly3 X() { return Poly3::variable(kX); }
Poly3 Y() { return Poly3::variable(kY); }
Poly3 Z() { return Poly3::variable(kZ); }
Poly3 k(long v) { return Poly3::constant(Rational(v)); }

// Closed form for the x-resultant of x^2 + p1 x + q1 and x^2 + p2 x + q2.
Poly3 monic_quadratic_resultant(const Poly3& p1, const Poly3& q1, const Poly3& p2, const Poly3& q2) {
  return (q1 - q2) * (q1 - q2) + (p1 - p2) * (p1 * q2 - p2 * q1);
}

Rational random_rational(std::mt19937_64& rng) {
  long n = static_cast<long>(rng() % 21) - 10;
  long d = static_cast<long>(rng() % 7) + 1;
  return frac(n, d);
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  Rational a = frac(6, -4);
  CHECK(a.get_num() == -3);
  CHECK(a.get_den() == 2);
  CHECK(a * (Rational(1) / a) == 1);
  CHECK(to_string(frac(3, 1)) == "3");
  CHECK(to_string(frac(-3, 6)) == "-1/2");
  CHECK(parse_rational("-10/4") == frac(-5, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("derivative follows the power rule") {
  HomogeneousForm f = HomogeneousForm::from_poly(X() * X() + Y() * Z());
  CHECK(derivative(f, kX).poly() == k(2) * X());
  CHECK(derivative(f, kX).degree() == 1);
  CHECK(derivative(f, kZ).poly() == Y());
  HomogeneousForm cube = HomogeneousForm::from_poly(X().pow(3));
  CHECK(derivative(cube, kY).is_zero());
  CHECK(derivative(cube, kY).degree() == 2);
}

TEST_CASE("monomial basis sizes and order") {
  CHECK(monomial_basis(0).size() == 1);
  CHECK(monomial_basis(1).size() == 3);
  CHECK(monomial_basis(5).size() == 21);
  auto b = monomial_basis(2);
  CHECK(b[0] == Exponent<3>{2, 0, 0});
  CHECK(b[1] == Exponent<3>{1, 1, 0});
  CHECK(b[2] == Exponent<3>{1, 0, 1});
  CHECK(b[5] == Exponent<3>{0, 0, 2});
  for (int t = 0; t <= 8; ++t) {
    auto basis = monomial_basis(t);
    for (std::size_t i = 0; i < basis.size(); ++i) CHECK(monomial_index(basis[i]) == i);
  }
}

TEST_CASE("mixed degrees are rejected") {
  CHECK_THROWS_AS(HomogeneousForm::from_poly(X() * X() + Y()), NotHomogeneous);
  CHECK_THROWS_AS(HomogeneousForm(X(), 2), NotHomogeneous);
}

TEST_CASE("kernel basis examples") {
  DenseMatrix<Rational> id = DenseMatrix<Rational>::from_rows({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}, 2);
  CHECK(kernel_basis(id).empty());
  DenseMatrix<Rational> zero(1, 3);
  CHECK(kernel_basis(zero).size() == 3);
  auto m = DenseMatrix<Rational>::from_rows(
      {{Rational(1), Rational(1), Rational(0)}, {Rational(0), Rational(1), Rational(1)}}, 3);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  // Proportional to (1, -1, 1).
  CHECK(ker[0][0] == -ker[0][1]);
  CHECK(ker[0][2] == ker[0][0]);
  for (const Rational& x : multiply(m, ker[0])) CHECK(x == 0);
}

TEST_CASE("kernel vectors annihilate random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    DenseMatrix<Rational> m(r, c);
    for (auto& v : m.data) v = (rng() % 3 == 0) ? Rational(0) : random_rational(rng);
    auto ker = kernel_basis(m);
    CHECK(ker.size() + rank(m) == c);
    for (const auto& v : ker)
      for (const Rational& x : multiply(m, v)) CHECK(x == 0);
  }
}

TEST_CASE("kernel basis over a number field") {
  FieldPtr K = NumberField::conjugate_fields(QPoly{Rational(1), Rational(0), Rational(1)}).front();
  FieldElement i = FieldElement::generator(K);
  // [[1, i], [i, -1]] has rank 1: second row is i times the first.
  auto m = DenseMatrix<FieldElement>::from_rows({{FieldElement(1), i}, {i, FieldElement(-1)}}, 2);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  for (const FieldElement& x : multiply(m, ker[0])) CHECK(x.is_zero());
}

TEST_CASE("resultant examples") {
  Poly3 r = resultant(X() - k(1), X() + k(1), kX);
  CHECK(r == k(2));
  Poly3 a = X() * X() + (Y() * Y() - Z() * Z());
  Poly3 b = X() * X() + (k(2) * Y() * Y() - Z() * Z());
  CHECK(resultant(a, b, kX) == Y().pow(4));
  CHECK(resultant(a, b, kX) == monic_quadratic_resultant(Poly3(), Y() * Y() - Z() * Z(), Poly3(), k(2) * Y() * Y() - Z() * Z()));
  CHECK(resultant(X() * X() - Y(), X() - Y(), kX) == Y() * Y() - Y());
  CHECK_THROWS(resultant(Poly3(), a, kX));
  CHECK_THROWS(resultant(Y(), a, kX));
}

TEST_CASE("resultant agrees with the closed form for monic quadratics") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto lin = [&] { return Poly3::constant(random_rational(rng)) * Y() + Poly3::constant(random_rational(rng)); };
    Poly3 p1 = lin(), q1 = lin() * lin(), p2 = lin(), q2 = lin() * lin();
    Poly3 f = X() * X() + p1 * X() + q1, g = X() * X() + p2 * X() + q2;
    CHECK(resultant(f, g, kX) == monic_quadratic_resultant(p1, q1, p2, q2));
  }
}

TEST_CASE("resultant vanishes at the projection of a common root") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Rational x0 = random_rational(rng), y0 = random_rational(rng);
    Poly3 px = X() - Poly3::constant(x0), py = Y() - Poly3::constant(y0);
    Poly3 f = px * (X() + Poly3::constant(random_rational(rng))) + py * Poly3::constant(random_rational(rng) + 11);
    Poly3 g = px * px + py * (X() + Poly3::constant(random_rational(rng)));
    QPoly r = to_univariate(resultant(f, g, kX), kY);
    if (r.is_zero()) continue;
    CHECK(r.eval(y0) == 0);
  }
}

TEST_CASE("isolate_roots examples") {
  QPoly y4{Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)};
  auto r = isolate_roots(y4);
  REQUIRE(r.size() == 1);
  CHECK(*r[0].rational_value == 0);
  CHECK(r[0].multiplicity == 4);

  QPoly y2m2{Rational(-2), Rational(0), Rational(1)};
  r = isolate_roots(y2m2);
  REQUIRE(r.size() == 2);
  CHECK(r[0].minimal_polynomial == y2m2);
  CHECK(r[1].minimal_polynomial == y2m2);
  CHECK(r[0].multiplicity == 1);
  CHECK(r[0].box().disjoint(r[1].box()));

  // (y - 1)^2 (y^2 + 1)
  QPoly u = QPoly{Rational(-1), Rational(1)} * QPoly{Rational(-1), Rational(1)} * QPoly{Rational(1), Rational(0), Rational(1)};
  r = isolate_roots(u);
  REQUIRE(r.size() == 3);
  CHECK(*r[0].rational_value == 1);
  CHECK(r[0].multiplicity == 2);
  CHECK(r[1].multiplicity == 1);
  CHECK(r[2].multiplicity == 1);
  CHECK(r[1].minimal_polynomial == QPoly{Rational(1), Rational(0), Rational(1)});
}

TEST_CASE("isolate_roots: multiplicities sum to the degree, boxes are disjoint") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    QPoly u = QPoly::constant(Rational(1 + static_cast<long>(rng() % 3)));
    int factors = 1 + static_cast<int>(rng() % 3);
    for (int f = 0; f < factors; ++f) {
      int deg = 1 + static_cast<int>(rng() % 3);
      std::vector<Rational> c;
      for (int i = 0; i < deg; ++i) c.push_back(Rational(static_cast<long>(rng() % 9) - 4));
      c.push_back(Rational(1));
      QPoly g(c);
      int e = 1 + static_cast<int>(rng() % 2);
      for (int i = 0; i < e; ++i) u = u * g;
    }
    auto roots = isolate_roots(u);
    int total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    CHECK(total == u.degree());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (roots[i].rational_value) CHECK(u.eval(*roots[i].rational_value) == 0);
      for (std::size_t j = i + 1; j < roots.size(); ++j) CHECK(roots[i].box().disjoint(roots[j].box()));
    }
    // Rebuild u from the factors: an independent check of the factorization.
    QPoly rebuilt = QPoly::constant(u.leading());
    std::vector<const QPoly*> seen;
    for (const auto& r : roots) {
      bool dup = false;
      for (const QPoly* s : seen) dup = dup || (*s == r.minimal_polynomial);
      if (dup) continue;
      seen.push_back(&r.minimal_polynomial);
      for (int i = 0; i < r.multiplicity; ++i) rebuilt = rebuilt * r.minimal_polynomial;
    }
    CHECK(rebuilt == u);
  }
}

TEST_CASE("irreducible factors of products of known factors") {
  QPoly a{Rational(-2), Rational(0), Rational(1)};               // t^2 - 2
  QPoly b{Rational(1), Rational(1), Rational(1)};                // t^2 + t + 1
  QPoly c{Rational(-3), Rational(0), Rational(0), Rational(1)};  // t^3 - 3
  auto f = irreducible_factors(a * b * c);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == a);
  CHECK(f[1] == b);
  CHECK(f[2] == c);
  CHECK(is_irreducible(QPoly{Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)}));    // t^4 + 1
  CHECK(!is_irreducible(QPoly{Rational(4), Rational(0), Rational(0), Rational(0), Rational(1)}));   // t^4 + 4
}

TEST_CASE("number fields reject bad input") {
  CHECK_THROWS_AS(NumberField::create(QPoly{Rational(-1), Rational(0), Rational(1)}, {Rational(0), Rational(2), Rational(-1), Rational(1)}), InputError);
  CHECK_THROWS_AS(NumberField::create(QPoly{Rational(-2), Rational(0), Rational(1)}, {Rational(-2), Rational(2), Rational(-1), Rational(1)}), InputError);
  FieldPtr K = NumberField::create(QPoly{Rational(-2), Rational(0), Rational(1)}, {Rational(1), Rational(2), Rational(-1), Rational(1)});
  RootEnclosure e = K->refine(frac(1, 1000000));
  CHECK(e.radius <= frac(1, 1000000));
  CHECK(e.center.approx().real() == doctest::Approx(1.41421356));
  CHECK(abs(e.center.re * e.center.re - 2) < frac(1, 100000));
}

TEST_CASE("field axioms hold exactly on random elements") {
  FieldPtr K = NumberField::conjugate_fields(QPoly{Rational(-2), Rational(0), Rational(0), Rational(1)}).front();
  std::mt19937_64 rng(13);
  auto rnd = [&] {
    return FieldElement(K, {random_rational(rng), random_rational(rng), random_rational(rng)});
  };
  for (int trial = 0; trial < 40; ++trial) {
    FieldElement a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == FieldElement(1));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a - a == FieldElement(0));
  }
}

TEST_CASE("field arithmetic in Q(sqrt 2) and Q(i)") {
  FieldPtr K = NumberField::conjugate_fields(QPoly{Rational(-2), Rational(0), Rational(1)}).front();
  FieldElement s = FieldElement::generator(K);
  CHECK(s * s == FieldElement(2));
  CHECK((s + FieldElement(1)).inverse() == s - FieldElement(1));
  CHECK(minimal_polynomial(s + FieldElement(1)) == QPoly{Rational(-1), Rational(-2), Rational(1)});
  FieldPtr G = NumberField::conjugate_fields(QPoly{Rational(1), Rational(0), Rational(1)}).front();
  FieldElement i = FieldElement::generator(G);
  CHECK(i * i == FieldElement(-1));
  CHECK(std::abs(std::abs(i.approx().imag()) - 1.0) < 1e-9);
}

TEST_CASE("characteristic polynomial of a companion matrix") {
  // Companion matrix of t^3 - 2t + 5.
  std::vector<std::vector<Rational>> m{{Rational(0), Rational(0), Rational(-5)},
                                       {Rational(1), Rational(0), Rational(2)},
                                       {Rational(0), Rational(1), Rational(0)}};
  CHECK(characteristic_polynomial(m) == QPoly{Rational(5), Rational(-2), Rational(0), Rational(1)});
}
