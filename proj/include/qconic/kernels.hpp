#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Row kernels for Gaussian elimination over Z/p with p < 2^31. Every
// variant must produce bit-identical results to the scalar reference; the
// dispatcher picks the widest one the running CPU supports.
namespace qconic::kernels {

struct ModOps {
  const char* name;
  /// dst[i] = (dst[i] - c * src[i]) mod p. Inputs reduced, c < p.
  void (*submul)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p);
  /// row[i] = (row[i] * c) mod p.
  void (*scale)(std::uint32_t* row, std::size_t n, std::uint32_t c, std::uint32_t p);
};

enum class Backend { Auto, Scalar, Avx2 };

const ModOps& scalar_ops();
/// nullptr when the CPU (or the build target) lacks AVX2.
const ModOps* avx2_ops();
const ModOps& best_ops();
/// Throws std::runtime_error if the requested backend is unavailable.
const ModOps& ops_for(Backend backend);

Backend parse_backend(std::string_view name);

/// floor(c * 2^32 / p), the precomputed quotient for Shoup multiplication.
inline std::uint32_t shoup_quotient(std::uint32_t c, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
}

/// x * c mod p via Shoup's trick, for x < 2^32 and p < 2^31.
inline std::uint32_t mulmod_shoup(std::uint32_t x, std::uint32_t c, std::uint32_t c_shoup, std::uint32_t p) {
  std::uint32_t q = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * c_shoup) >> 32);
  std::uint32_t r = x * c - q * p;
  return r >= p ? r - p : r;
}

}  // namespace qconic::kernels
