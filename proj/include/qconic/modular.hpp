#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qconic/kernels.hpp"
#include "qconic/rational.hpp"

// Exact rank and kernel computations for integer matrices, done modulo many
// word-size primes and certified with a Hadamard bound.
namespace qconic {

/// Integer matrix stored by columns as (row, value) pairs.
struct SparseIntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::size_t, Integer>>> columns;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}
};

struct ModularOptions {
  kernels::Backend backend = kernels::Backend::Auto;
  int jobs = 1;
};

/// Deterministic Miller-Rabin, exact for all 32-bit inputs.
bool is_prime_u32(std::uint32_t n);

/// The i-th prime below 2^31 in descending order (0 -> 2^31 - 1).
std::uint32_t modular_prime(std::size_t i);

/// Result of Gaussian elimination modulo p.
struct ModularEchelon {
  std::uint32_t prime = 0;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  /// Row-major reduced echelon form (only when requested), rank x cols.
  std::vector<std::uint32_t> rref;
  std::size_t stride = 0;
};

ModularEchelon eliminate_mod(const SparseIntMatrix& m, std::uint32_t p, const kernels::ModOps& ops, bool reduce);

/// Upper bound, in bits, for |det| of any (r x r) minor.
double hadamard_bits(const SparseIntMatrix& m, std::size_t r);

struct CertifiedRank {
  std::size_t rank = 0;
  std::size_t primes_used = 0;
};

/// Exact rank over Q. Each prime gives a lower bound; the maximum is
/// accepted once the product of the primes exceeds every nonzero
/// (rank+1)-minor could be, or the rank is already full.
CertifiedRank certified_rank(const SparseIntMatrix& m, const ModularOptions& options = {});

/// Verifier for a candidate kernel vector; must check exactly.
using KernelCheck = std::function<bool(const std::vector<Rational>&)>;

/// The reduced-echelon kernel vector attached to the first free column, or
/// nullopt when the kernel over Q is trivial. The candidate is rebuilt by
/// Chinese remaindering and rational reconstruction and accepted only after
/// `check` (default: exact M v = 0) succeeds.
std::optional<std::vector<Rational>> first_kernel_vector(const SparseIntMatrix& m, const ModularOptions& options = {},
                                                         const KernelCheck& check = {});

/// n/d with |n|, d <= sqrt(M/2) and n = a d (mod M), if it exists.
std::optional<Rational> rational_reconstruction(const Integer& a, const Integer& modulus);

/// Exact product M v.
std::vector<Rational> multiply(const SparseIntMatrix& m, const std::vector<Rational>& v);

}  // namespace qconic
