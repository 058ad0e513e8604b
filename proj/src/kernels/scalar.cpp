#include "qconic/kernels.hpp"

namespace qconic::kernels {
namespace {

void submul_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t t = dst[i] + static_cast<std::uint64_t>(c) * (p - src[i]);
    dst[i] = static_cast<std::uint32_t>(t % p);
  }
}

void scale_scalar(std::uint32_t* row, std::size_t n, std::uint32_t c, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) row[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(row[i]) * c % p);
}

}  // namespace

const ModOps& scalar_ops() {
  static const ModOps ops{"scalar", &submul_scalar, &scale_scalar};
  return ops;
}

}  // namespace qconic::kernels
