#pragma once

// Arrangements shared by the test programs.
#include <vector>

#include "qconic/arrangement.hpp"

namespace fixtures {

inline qconic::Conic conic(long a, long b, long c, long d, long e, long f) {
  using qconic::Rational;
  return qconic::Conic({Rational(a), Rational(b), Rational(c), Rational(d), Rational(e), Rational(f)});
}

// x^2 + y^2 - 2z^2 and x^2 - 2y^2 + z^2 cross transversally at (+-1 : +-1 : 1).
inline qconic::ConicArrangement generic_pair() {
  return qconic::validate_arrangement({conic(1, 1, -2, 0, 0, 0), conic(1, -2, 1, 0, 0, 0)});
}

// x^2 + y^2 - z^2 and x^2 + 2y^2 - z^2 are tangent at (+-1 : 0 : 1).
inline qconic::ConicArrangement tangent_pair() {
  return qconic::validate_arrangement({conic(1, 1, -1, 0, 0, 0), conic(1, 2, -1, 0, 0, 0)});
}

inline qconic::Conic pencil_g1() { return conic(1, 1, -2, 0, 0, 0); }
inline qconic::Conic pencil_g2() { return conic(1, -1, 0, 0, 0, 0); }

inline qconic::ConicArrangement pencil(std::vector<long> params) {
  std::vector<qconic::Rational> t;
  for (long p : params) t.emplace_back(p);
  return qconic::pencil_members(pencil_g1(), pencil_g2(), t);
}

inline qconic::ConicArrangement pencil_k3() { return pencil({0, 2, 3}); }
inline qconic::ConicArrangement pencil_k4() { return pencil({0, 2, 3, 4}); }

// Five circles through the origin; centres (3,4), (4,3), (-3,4), (-4,3), (5,0).
inline qconic::ConicArrangement five_circles() {
  return qconic::validate_arrangement({conic(1, 1, 0, 0, -6, -8), conic(1, 1, 0, 0, -8, -6), conic(1, 1, 0, 0, 6, -8),
                                       conic(1, 1, 0, 0, 8, -6), conic(1, 1, 0, 0, -10, 0)});
}

}  // namespace fixtures
