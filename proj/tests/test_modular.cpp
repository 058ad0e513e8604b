#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qconic/linalg.hpp"
#include "qconic/modular.hpp"

using namespace qconic;

namespace {

bool trial_division_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

SparseIntMatrix to_sparse(const DenseMatrix<Rational>& d) {
  SparseIntMatrix m(d.rows, d.cols);
  for (std::size_t j = 0; j < d.cols; ++j)
    for (std::size_t i = 0; i < d.rows; ++i)
      if (!is_zero(d(i, j))) m.columns[j].push_back({i, d(i, j).get_num()});
  return m;
}

DenseMatrix<Rational> random_integer_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t rank_cap,
                                            long range) {
  DenseMatrix<Rational> a(r, rank_cap), b(rank_cap, c), m(r, c);
  for (auto& x : a.data) x = Rational(static_cast<long>(rng() % (2 * range + 1)) - range);
  for (auto& x : b.data) x = Rational(static_cast<long>(rng() % (2 * range + 1)) - range);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t k = 0; k < rank_cap; ++k) m(i, j) += a(i, k) * b(k, j);
  return m;
}

}  // namespace

TEST_CASE("Miller-Rabin agrees with trial division") {
  std::mt19937_64 rng(9);
  for (std::uint32_t n = 0; n < 5000; ++n) CHECK(is_prime_u32(n) == trial_division_prime(n));
  for (int i = 0; i < 300; ++i) {
    std::uint32_t n = static_cast<std::uint32_t>(rng() >> 33) | 1u;
    CHECK(is_prime_u32(n) == trial_division_prime(n));
  }
  CHECK(is_prime_u32(2147483647u));
  CHECK(!is_prime_u32(3215031751u));  // strong pseudoprime to 2, 3, 5, 7
}

TEST_CASE("modular primes descend from 2^31 - 1") {
  CHECK(modular_prime(0) == 2147483647u);
  for (std::size_t i = 1; i < 50; ++i) {
    CHECK(modular_prime(i) < modular_prime(i - 1));
    CHECK(trial_division_prime(modular_prime(i)));
    for (std::uint32_t n = modular_prime(i) + 1; n < modular_prime(i - 1); ++n) CHECK(!trial_division_prime(n));
  }
}

TEST_CASE("rational reconstruction") {
  Integer M = Integer(modular_prime(0)) * Integer(modular_prime(1));
  for (auto [n, d] : std::vector<std::pair<long, long>>{{1, 3}, {-22, 7}, {0, 1}, {123456, 654323}, {-1, 1000}}) {
    Integer dinv;
    mpz_invert(dinv.get_mpz_t(), Integer(d).get_mpz_t(), M.get_mpz_t());
    Integer a = Integer(n) * dinv;
    mpz_mod(a.get_mpz_t(), a.get_mpz_t(), M.get_mpz_t());
    auto r = rational_reconstruction(a, M);
    REQUIRE(r);
    CHECK(*r == frac(n, d));
  }
  // Modulo 11 only 0, +-1, +-2, +-1/2 are small enough; 3 is none of them.
  CHECK(!rational_reconstruction(Integer(3), Integer(11)).has_value());
  CHECK(*rational_reconstruction(Integer(5), Integer(11)) == frac(-1, 2));
}

TEST_CASE("certified rank matches exact rational elimination") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12, k = 1 + rng() % 6;
    long range = (trial % 3 == 0) ? 100000 : 3;
    auto d = random_integer_matrix(rng, r, c, k, range);
    auto got = certified_rank(to_sparse(d), {kernels::Backend::Scalar, 1});
    CHECK(got.rank == rank(d));
    CHECK(got.primes_used >= 1);
  }
}

TEST_CASE("certified rank sees through a prime that divides a minor") {
  // det = p, so the matrix is singular mod p but has full rank over Q.
  std::uint32_t p = modular_prime(0);
  SparseIntMatrix m(2, 2);
  m.columns[0] = {{0, Integer(1)}, {1, Integer(1)}};
  m.columns[1] = {{0, Integer(1)}, {1, Integer(1) + Integer(p)}};
  CHECK(eliminate_mod(m, p, kernels::scalar_ops(), false).rank == 1);
  CHECK(certified_rank(m).rank == 2);
}

TEST_CASE("kernel vectors satisfy M v = 0 and match the exact kernel") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 1 + rng() % 10, c = 2 + rng() % 10, k = 1 + rng() % 5;
    auto d = random_integer_matrix(rng, r, c, k, 50);
    auto exact = kernel_basis(d);
    auto v = first_kernel_vector(to_sparse(d));
    REQUIRE(v.has_value() == !exact.empty());
    if (!v) continue;
    for (const Rational& x : multiply(to_sparse(d), *v)) CHECK(x == 0);
    CHECK(*v == exact.front());
  }
}

TEST_CASE("trivial kernel is reported as nullopt") {
  SparseIntMatrix m(3, 2);
  m.columns[0] = {{0, Integer(1)}, {2, Integer(5)}};
  m.columns[1] = {{1, Integer(-7)}};
  CHECK(!first_kernel_vector(m).has_value());
}

TEST_CASE("hadamard bound dominates actual minors") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + rng() % 6;
    auto d = random_integer_matrix(rng, n, n, n, 1000);
    DenseMatrix<Rational> e = d;
    // Determinant via the exact echelon form.
    Rational det(1);
    std::vector<std::size_t> perm;
    DenseMatrix<Rational> w = d;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t p = col;
      while (p < n && is_zero(w(p, col))) ++p;
      if (p == n) { det = 0; break; }
      if (p != col) { for (std::size_t j = 0; j < n; ++j) std::swap(w(p, j), w(col, j)); det = -det; }
      det *= w(col, col);
      for (std::size_t i = col + 1; i < n; ++i) {
        Rational f = w(i, col) / w(col, col);
        for (std::size_t j = col; j < n; ++j) w(i, j) -= f * w(col, j);
      }
    }
    if (is_zero(det)) continue;
    double bits = static_cast<double>(mpz_sizeinbase(Integer(Rational(abs(det)).get_num()).get_mpz_t(), 2)) - 1;
    CHECK(hadamard_bits(to_sparse(e), n) >= bits);
  }
}
