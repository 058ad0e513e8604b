#include "qconic/modular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

#include "qconic/error.hpp"
#include "qconic/parallel.hpp"

namespace qconic {
namespace {

std::uint32_t powmod(std::uint64_t b, std::uint64_t e, std::uint32_t m) {
  std::uint64_t r = 1;
  b %= m;
  for (; e; e >>= 1) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) { return powmod(a, p - 2, p); }

// log2 of the Euclidean norm of a vector of integers.
double log2_norm(const std::vector<const Integer*>& entries) {
  Integer s = 0;
  for (const Integer* v : entries) s += (*v) * (*v);
  if (s == 0) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, s.get_mpz_t());
  return 0.5 * (std::log2(mant) + static_cast<double>(exp));
}

}  // namespace

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 61u})
    if (n % p == 0) return n == p;
  std::uint32_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint32_t a : {2u, 7u, 61u}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = x * x % n;
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

std::uint32_t modular_prime(std::size_t i) {
  static std::mutex mu;
  static std::vector<std::uint32_t> cache;
  std::lock_guard<std::mutex> lock(mu);
  std::uint32_t candidate = cache.empty() ? (1u << 31) : cache.back() - 1;
  while (cache.size() <= i) {
    while (!is_prime_u32(candidate)) --candidate;
    if (candidate < (1u << 30)) throw ComputationError("ran out of word-size primes");
    cache.push_back(candidate);
    --candidate;
  }
  return cache[i];
}

ModularEchelon eliminate_mod(const SparseIntMatrix& m, std::uint32_t p, const kernels::ModOps& ops, bool reduce) {
  const std::size_t stride = (m.cols + 7) & ~std::size_t{7};
  std::vector<std::uint32_t> a(m.rows * stride, 0);
  for (std::size_t c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.columns[c])
      a[r * stride + c] = static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p));

  ModularEchelon out;
  out.prime = p;
  out.stride = stride;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t piv = row;
    while (piv < m.rows && a[piv * stride + col] == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != row)
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * stride),
                       a.begin() + static_cast<std::ptrdiff_t>(piv * stride + stride),
                       a.begin() + static_cast<std::ptrdiff_t>(row * stride));
    std::uint32_t* prow = &a[row * stride];
    const std::size_t len = m.cols - col;
    ops.scale(prow + col, len, inverse_mod(prow[col], p), p);
    for (std::size_t i = reduce ? 0 : row + 1; i < m.rows; ++i) {
      if (i == row) continue;
      std::uint32_t* irow = &a[i * stride];
      if (irow[col] != 0) ops.submul(irow + col, prow + col, len, irow[col], p);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  if (reduce) {
    a.resize(row * stride);
    out.rref = std::move(a);
  }
  return out;
}

double hadamard_bits(const SparseIntMatrix& m, std::size_t r) {
  if (r == 0) return 0.0;
  std::vector<double> cols, rows;
  std::vector<std::vector<const Integer*>> by_row(m.rows);
  for (const auto& col : m.columns) {
    std::vector<const Integer*> entries;
    for (const auto& [i, v] : col) {
      entries.push_back(&v);
      by_row[i].push_back(&v);
    }
    cols.push_back(log2_norm(entries));
  }
  for (const auto& entries : by_row) rows.push_back(log2_norm(entries));
  auto top_sum = [r](std::vector<double>& norms) {
    if (norms.size() < r) return -std::numeric_limits<double>::infinity();
    std::partial_sort(norms.begin(), norms.begin() + static_cast<std::ptrdiff_t>(r), norms.end(), std::greater<>());
    double s = 0;
    for (std::size_t i = 0; i < r; ++i) s += norms[i];
    return s;
  };
  return std::min(top_sum(cols), top_sum(rows));
}

CertifiedRank certified_rank(const SparseIntMatrix& m, const ModularOptions& options) {
  const kernels::ModOps& ops = kernels::ops_for(options.backend);
  const std::size_t full = std::min(m.rows, m.cols);
  const std::size_t batch = static_cast<std::size_t>(std::max(1, options.jobs));
  CertifiedRank out;
  double bits = 0;
  for (;;) {
    std::size_t base = out.primes_used;
    auto ranks = parallel_map(batch, options.jobs, [&](std::size_t i) {
      return eliminate_mod(m, modular_prime(base + i), ops, false).rank;
    });
    for (std::size_t r : ranks) {
      out.rank = std::max(out.rank, r);
      // every prime exceeds 2^30
      bits += 30.0;
      ++out.primes_used;
    }
    if (out.rank == full) return out;
    // A nonzero (rank+1)-minor would have to be divisible by every prime.
    if (bits > hadamard_bits(m, out.rank + 1) + 1.0) return out;
  }
}

std::optional<Rational> rational_reconstruction(const Integer& a, const Integer& modulus) {
  Integer bound;
  Integer half = modulus / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = modulus, r1, t0 = 0, t1 = 1;
  mpz_fdiv_r(r1.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  return Rational(r1) / Rational(t1);
}

std::vector<Rational> multiply(const SparseIntMatrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.rows, Rational(0));
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (is_zero(v[c])) continue;
    for (const auto& [r, x] : m.columns[c]) out[r] += Rational(x) * v[c];
  }
  return out;
}

std::optional<std::vector<Rational>> first_kernel_vector(const SparseIntMatrix& m, const ModularOptions& options,
                                                         const KernelCheck& check) {
  if (m.cols == 0) return std::nullopt;
  const kernels::ModOps& ops = kernels::ops_for(options.backend);
  const std::size_t batch = static_cast<std::size_t>(std::max(1, options.jobs));
  constexpr std::size_t kMaxPrimes = 20000;

  bool have = false;
  std::size_t best_rank = 0;
  std::vector<std::size_t> best_pivots;
  std::vector<Integer> residues;
  Integer modulus;
  std::optional<std::vector<Rational>> previous;

  auto verify = [&](const std::vector<Rational>& v) {
    if (check) return check(v);
    for (const Rational& x : multiply(m, v))
      if (!is_zero(x)) return false;
    return true;
  };

  for (std::size_t used = 0; used < kMaxPrimes; used += batch) {
    auto results = parallel_map(batch, options.jobs, [&](std::size_t i) {
      return eliminate_mod(m, modular_prime(used + i), ops, true);
    });
    for (const ModularEchelon& e : results) {
      if (e.rank == m.cols) return std::nullopt;
      // Free column and kernel vector of this prime's echelon form.
      std::size_t free = 0;
      while (free < e.pivots.size() && e.pivots[free] == free) ++free;
      std::vector<std::uint32_t> v(m.cols, 0);
      v[free] = 1;
      for (std::size_t r = 0; r < e.rank; ++r) {
        std::uint32_t x = e.rref[r * e.stride + free];
        v[e.pivots[r]] = x == 0 ? 0 : e.prime - x;
      }
      bool better = !have || e.rank > best_rank || (e.rank == best_rank && e.pivots < best_pivots);
      if (better) {
        have = true;
        best_rank = e.rank;
        best_pivots = e.pivots;
        modulus = e.prime;
        residues.assign(v.begin(), v.end());
        previous.reset();
        continue;
      }
      if (e.rank != best_rank || e.pivots != best_pivots) continue;
      // Chinese remaindering: x' = x + M * ((v - x) / M mod p).
      std::uint32_t minv = inverse_mod(static_cast<std::uint32_t>(mpz_fdiv_ui(modulus.get_mpz_t(), e.prime)), e.prime);
      for (std::size_t j = 0; j < m.cols; ++j) {
        std::uint64_t xr = mpz_fdiv_ui(residues[j].get_mpz_t(), e.prime);
        std::uint64_t diff = (v[j] + e.prime - xr) % e.prime;
        std::uint64_t k = diff * minv % e.prime;
        residues[j] += modulus * static_cast<unsigned long>(k);
      }
      modulus *= e.prime;
    }
    if (!have) continue;
    std::vector<Rational> candidate;
    candidate.reserve(m.cols);
    bool ok = true;
    for (const Integer& x : residues) {
      auto q = rational_reconstruction(x, modulus);
      if (!q) {
        ok = false;
        break;
      }
      candidate.push_back(*q);
    }
    if (!ok) {
      previous.reset();
      continue;
    }
    // Only pay for the exact check once the reconstruction has stopped moving.
    if (previous && *previous == candidate && verify(candidate)) return candidate;
    previous = std::move(candidate);
  }
  throw ComputationError("modular kernel reconstruction did not converge");
}

}  // namespace qconic
