#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qconic/arrangement.hpp"
#include "qconic/combinatorics.hpp"
#include "qconic/local_algebra.hpp"

namespace qconic {

enum class PointKind { Node, Tacnode, OrdinaryTriple, OrdinaryQuadruple, Other };

/// Incident conics grouped by common tangent line; groups and their members
/// in ascending order.
using TangentPattern = std::vector<std::vector<std::size_t>>;

struct SingularityType {
  PointKind kind = PointKind::Other;
  // Descriptor, filled for every kind.
  int multiplicity = 0;  // number of incident conics
  TangentPattern tangents;
  int max_pairwise = 0;

  /// "node", "tacnode", ..., or e.g. "other(m=5, tangents 1+1+1+1+1, max I=1)".
  std::string name() const;
  /// The matching kind of the weak combinatorics, if any.
  std::optional<QType> q_type() const;
};

/// Galois-invariant identity of an orbit of points: the chart, the
/// primitive element theta = u + c v, its minimal polynomial, and u, v as
/// polynomials in theta.
struct OrbitKey {
  std::size_t chart = 2;
  long c = 0;
  std::vector<Rational> minpoly, u, v;

  friend bool operator<(const OrbitKey& a, const OrbitKey& b);
  friend bool operator==(const OrbitKey& a, const OrbitKey& b);
};

struct SingularPointRecord {
  OrbitKey key;
  /// Representative point, normalized, in the field Q[theta]/(minpoly)
  /// embedded at its first root in isolation order; null field when
  /// rational.
  Point3 point;
  FieldPtr field;
  std::size_t orbit_size = 1;
  std::vector<std::size_t> incident;
  std::map<std::pair<std::size_t, std::size_t>, int> pairwise;
  TangentPattern tangents;
  SingularityType type;
  int milnor = 0;
  int tjurina = 0;
  bool quasi_homogeneous = false;
};

struct LocusOptions {
  int jobs = 1;
};

/// All singular points of the arrangement curve (the pairwise intersections
/// of members), one record per Galois orbit, sorted by key. Fills incidence,
/// pairwise multiplicities and tangent patterns only.
std::vector<SingularPointRecord> locate_singular_points(const ConicArrangement& arr, const LocusOptions& opts = {});

/// The orbit key and canonical representative of a point with coordinates
/// in a number field.
std::pair<OrbitKey, Point3> canonical_orbit(const Point3& p);

SingularityType classify_point(const SingularPointRecord& r);

bool is_quasi_homogeneous(const SingularPointRecord& r);

struct LocusAnalysis {
  WeakCombinatorics combinatorics;
  bool q_flag = false;
  std::vector<SingularPointRecord> records;
};

/// Locates, classifies and computes mu and tau at every singular point.
LocusAnalysis weak_combinatorics(const ConicArrangement& arr, const LocusOptions& opts = {});

/// Sum of orbit_size * tau over the records.
long total_tjurina(const std::vector<SingularPointRecord>& records);

}  // namespace qconic
