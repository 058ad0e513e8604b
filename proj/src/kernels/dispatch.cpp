#include <stdexcept>
#include <string>

#include "qconic/kernels.hpp"

namespace qconic::kernels {

const ModOps& best_ops() {
  static const ModOps& chosen = avx2_ops() ? *avx2_ops() : scalar_ops();
  return chosen;
}

const ModOps& ops_for(Backend backend) {
  switch (backend) {
    case Backend::Auto:
      return best_ops();
    case Backend::Scalar:
      return scalar_ops();
    case Backend::Avx2:
      if (const ModOps* ops = avx2_ops()) return *ops;
      throw std::runtime_error("AVX2 kernels are not available on this CPU");
  }
  return scalar_ops();
}

Backend parse_backend(std::string_view name) {
  if (name == "auto") return Backend::Auto;
  if (name == "scalar") return Backend::Scalar;
  if (name == "avx2") return Backend::Avx2;
  throw std::invalid_argument("unknown kernel backend '" + std::string(name) + "'");
}

}  // namespace qconic::kernels
