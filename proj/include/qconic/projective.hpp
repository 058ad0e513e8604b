#pragma once

#include <array>
#include <cstdint>

#include "qconic/number_field.hpp"
#include "qconic/polynomial.hpp"
#include "qconic/rational.hpp"

namespace qconic {

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

Matrix3 identity3();
Rational determinant(const Matrix3& m);
/// Throws std::domain_error for a singular matrix.
Matrix3 inverse(const Matrix3& m);
Matrix3 operator*(const Matrix3& a, const Matrix3& b);

/// The form X -> f(N X). A curve C maps to N^-1 C under this substitution:
/// p lies on the new curve iff N p lies on C.
HomogeneousForm substitute(const HomogeneousForm& f, const Matrix3& n);

/// N p for a point with coordinates in a common field.
std::array<FieldElement, 3> transform_point(const Matrix3& n, const std::array<FieldElement, 3>& p);

/// Invertible matrix with small integer entries in [-bound, bound], drawn
/// from a fixed-seed generator so runs are reproducible.
Matrix3 random_invertible(std::uint64_t seed, int bound = 3);

/// Invertible matrix with small rational entries (numerators in
/// [-bound, bound], denominators in [1, bound]).
Matrix3 random_rational_invertible(std::uint64_t seed, int bound = 3);

}  // namespace qconic
