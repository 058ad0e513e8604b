#pragma once

#include <array>
#include <vector>

#include "qconic/arrangement.hpp"
#include "qconic/number_field.hpp"
#include "qconic/polynomial.hpp"

namespace qconic {

/// Projective point with coordinates in one field (Q or a NumberField).
using Point3 = std::array<FieldElement, 3>;

/// Index of the last nonzero coordinate. Throws for the zero vector.
std::size_t chart_of(const Point3& p);

/// Scales p so that its last nonzero coordinate is 1.
Point3 normalize(const Point3& p);

bool projectively_equal(const Point3& a, const Point3& b);

/// f in the affine chart of p (the last nonzero coordinate set to 1), with p
/// moved to the origin. Local coordinates (u, v) are the remaining two
/// projective coordinates in their natural order.
AffinePolynomial localize(const HomogeneousForm& f, const Point3& p);

/// dim_K of K[u,v] localized at the origin modulo the ideal of `gens`, by
/// truncation at growing degree N until two consecutive values agree.
/// Throws NonIsolated once N exceeds `cap`.
std::size_t local_dimension(const std::vector<AffinePolynomial>& gens, int cap);

/// Milnor number at p. Throws NotSingular when p is not a singular point
/// of f, NonIsolated when the local algebra does not stabilize.
int local_milnor(const HomogeneousForm& f, const Point3& p);

/// Tjurina number at p; errors as local_milnor.
int local_tjurina(const HomogeneousForm& f, const Point3& p);

/// Local intersection number of two curves at p. Throws PointNotOnBoth.
int local_intersection_number(const HomogeneousForm& f, const HomogeneousForm& g, const Point3& p);

int intersection_multiplicity(const Conic& ci, const Conic& cj, const Point3& p);

}  // namespace qconic
