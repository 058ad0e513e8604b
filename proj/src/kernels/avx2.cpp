#include "qconic/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define QCONIC_HAVE_AVX2_KERNELS 1
#endif

namespace qconic::kernels {

#ifdef QCONIC_HAVE_AVX2_KERNELS
namespace {

// High 32 bits of the lane-wise 32x32 -> 64 products x * c.
__attribute__((target("avx2"))) inline __m256i mulhi_epu32(__m256i x, __m256i c) {
  __m256i even = _mm256_mul_epu32(x, c);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), c);
  return _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0xAA);
}

// x * c mod p in [0, p), lane-wise (Shoup).
__attribute__((target("avx2"))) inline __m256i mulmod(__m256i x, __m256i c, __m256i cs, __m256i p) {
  __m256i q = mulhi_epu32(x, cs);
  __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(x, c), _mm256_mullo_epi32(q, p));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

__attribute__((target("avx2"))) void submul_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                                                 std::uint32_t c, std::uint32_t p) {
  const std::uint32_t cs = shoup_quotient(c, p);
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vcs = _mm256_set1_epi32(static_cast<int>(cs));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i t = _mm256_sub_epi32(d, mulmod(x, vc, vcs, vp));
    t = _mm256_min_epu32(t, _mm256_add_epi32(t, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
  }
  for (; i < n; ++i) {
    std::uint32_t r = mulmod_shoup(src[i], c, cs, p);
    dst[i] = dst[i] >= r ? dst[i] - r : dst[i] + p - r;
  }
}

__attribute__((target("avx2"))) void scale_avx2(std::uint32_t* row, std::size_t n, std::uint32_t c, std::uint32_t p) {
  const std::uint32_t cs = shoup_quotient(c, p);
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vcs = _mm256_set1_epi32(static_cast<int>(cs));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + i), mulmod(x, vc, vcs, vp));
  }
  for (; i < n; ++i) row[i] = mulmod_shoup(row[i], c, cs, p);
}

}  // namespace

const ModOps* avx2_ops() {
  static const ModOps ops{"avx2", &submul_avx2, &scale_avx2};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &ops : nullptr;
}

#else

const ModOps* avx2_ops() { return nullptr; }

#endif

}  // namespace qconic::kernels
