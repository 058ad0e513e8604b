#include "qconic/singular_locus.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "qconic/error.hpp"
#include "qconic/linalg.hpp"
#include "qconic/parallel.hpp"

namespace qconic {

bool operator<(const OrbitKey& a, const OrbitKey& b) {
  // Affine points (chart z) first, then by field degree.
  auto lhs = std::make_tuple(2 - static_cast<long>(a.chart), a.minpoly.size(), std::cref(a.minpoly), a.c,
                             std::cref(a.u), std::cref(a.v));
  auto rhs = std::make_tuple(2 - static_cast<long>(b.chart), b.minpoly.size(), std::cref(b.minpoly), b.c,
                             std::cref(b.u), std::cref(b.v));
  return lhs < rhs;
}

bool operator==(const OrbitKey& a, const OrbitKey& b) {
  return a.chart == b.chart && a.c == b.c && a.minpoly == b.minpoly && a.u == b.u && a.v == b.v;
}

std::string SingularityType::name() const {
  switch (kind) {
    case PointKind::Node:
      return "node";
    case PointKind::Tacnode:
      return "tacnode";
    case PointKind::OrdinaryTriple:
      return "ordinary triple point";
    case PointKind::OrdinaryQuadruple:
      return "ordinary quadruple point";
    case PointKind::Other:
      break;
  }
  std::ostringstream os;
  os << "other(m=" << multiplicity << ", tangents ";
  for (std::size_t i = 0; i < tangents.size(); ++i) os << (i ? "+" : "") << tangents[i].size();
  os << ", max I=" << max_pairwise << ")";
  return os.str();
}

std::optional<QType> SingularityType::q_type() const {
  switch (kind) {
    case PointKind::Node:
      return QType::Node;
    case PointKind::Tacnode:
      return QType::Tacnode;
    case PointKind::OrdinaryTriple:
      return QType::OrdinaryTriple;
    case PointKind::OrdinaryQuadruple:
      return QType::OrdinaryQuadruple;
    case PointKind::Other:
      break;
  }
  return std::nullopt;
}

namespace {

// Rational coordinates of x in the power basis, padded to length n.
std::vector<Rational> coords_of(const FieldElement& x, std::size_t n) {
  std::vector<Rational> c = x.coordinates();
  c.resize(n, Rational(0));
  return c;
}

FieldElement eval_in(const std::vector<Rational>& poly, const FieldElement& theta) {
  FieldElement acc;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * theta + FieldElement(*it);
  return acc;
}

long shift_sequence(int i) { return i == 0 ? 0 : (i % 2 ? (i + 1) / 2 : -(i / 2)); }

}  // namespace

std::pair<OrbitKey, Point3> canonical_orbit(const Point3& point) {
  const Point3 p = normalize(point);
  OrbitKey key;
  key.chart = chart_of(p);
  std::size_t i0 = key.chart == 0 ? 1 : 0;
  std::size_t i1 = key.chart == 2 ? 1 : 2;
  FieldElement u = p[i0], v = p[i1];
  if (u.is_rational() && v.is_rational()) {
    Rational ur = u.rational_value(), vr = v.rational_value();
    key.minpoly = {-ur, Rational(1)};
    key.u = {ur};
    key.v = {vr};
    Point3 out;
    out[key.chart] = FieldElement(1);
    out[i0] = FieldElement(ur);
    out[i1] = FieldElement(vr);
    return {key, out};
  }
  const FieldPtr& field = u.field() ? u.field() : v.field();
  const std::size_t n = static_cast<std::size_t>(field->degree());
  // Promote both coordinates into the field so theta has the full basis.
  u = u + FieldElement(field, {});
  v = v + FieldElement(field, {});
  for (int i = 0; i < 256; ++i) {
    const long c = shift_sequence(i);
    FieldElement theta = u + FieldElement(Rational(c)) * v;
    QPoly cp = characteristic_polynomial(multiplication_matrix(theta));
    if (!is_squarefree(cp)) continue;
    // Solve u = g(theta), v = h(theta) in the power basis of the field.
    DenseMatrix<Rational> sys(n, n + 2);
    FieldElement power(field, {Rational(1)});
    for (std::size_t col = 0; col < n; ++col) {
      auto pc = coords_of(power, n);
      for (std::size_t r = 0; r < n; ++r) sys(r, col) = pc[r];
      power = power * theta;
    }
    auto uc = coords_of(u, n), vc = coords_of(v, n);
    for (std::size_t r = 0; r < n; ++r) {
      sys(r, n) = uc[r];
      sys(r, n + 1) = vc[r];
    }
    rref(sys);
    key.c = c;
    key.minpoly = cp.coeffs();
    key.u.assign(n, Rational(0));
    key.v.assign(n, Rational(0));
    for (std::size_t r = 0; r < n; ++r) {
      key.u[r] = sys(r, n);
      key.v[r] = sys(r, n + 1);
    }
    FieldPtr canonical = NumberField::conjugate_fields(cp).front();
    FieldElement t = FieldElement::generator(canonical);
    Point3 out;
    out[key.chart] = FieldElement(canonical, {Rational(1)});
    out[i0] = eval_in(key.u, t);
    out[i1] = eval_in(key.v, t);
    return {key, out};
  }
  throw ComputationError("no primitive element found for a singular point");
}

namespace {

Poly3 affine_part(const HomogeneousForm& q) {
  Poly3 out;
  for (const auto& [m, c] : q.poly().terms()) out.add_term({m[0], m[1], 0}, c);
  return out;
}

// Intersection points of two conics after the substitution X = N X', or
// nullopt when the projection from (1:0:0) is not generic for the pair.
std::optional<std::vector<Point3>> project_and_solve(const Conic& a, const Conic& b, const Matrix3& n) {
  const Conic ta = a.transformed(n), tb = b.transformed(n);
  if (is_zero(ta.coefficients()[0]) || is_zero(tb.coefficients()[0])) return std::nullopt;
  const Poly3 pa = affine_part(ta.form()), pb = affine_part(tb.form());
  QPoly res = to_univariate(resultant(pa, pb, kX), kY);
  // Degree 4 means no common point on the line at infinity.
  if (res.degree() != 4) return std::nullopt;
  std::vector<Point3> out;
  for (const QFactor& fac : factor(res)) {
    FieldElement t;
    if (fac.factor.degree() == 1) {
      t = FieldElement(-fac.factor.coeffs()[0] / fac.factor.coeffs()[1]);
    } else {
      t = FieldElement::generator(NumberField::conjugate_fields(fac.factor).front());
    }
    auto in_x = [&](const Poly3& p) {
      std::vector<FieldElement> c(3);
      for (const auto& [m, coeff] : p.terms()) {
        FieldElement term(coeff);
        for (int e = 0; e < m[1]; ++e) term = term * t;
        c[static_cast<std::size_t>(m[0])] = c[static_cast<std::size_t>(m[0])] + term;
      }
      return UPoly<FieldElement>(std::move(c));
    };
    UPoly<FieldElement> g = gcd(in_x(pa), in_x(pb));
    // Two common points over one root: the projection merges them.
    if (g.degree() != 1) return std::nullopt;
    Point3 local{-g.coeff(0), t, FieldElement(1)};
    out.push_back(transform_point(n, local));
  }
  return out;
}

std::vector<Point3> intersect_pair(const Conic& a, const Conic& b) {
  for (std::uint64_t attempt = 0; attempt < 512; ++attempt) {
    Matrix3 n = attempt == 0 ? identity3() : random_invertible(0x9e3779b97f4a7c15ULL + attempt, 2);
    if (auto pts = project_and_solve(a, b, n)) return *pts;
  }
  throw ComputationError("no generic projection found for a conic pair");
}

TangentPattern tangent_pattern(const ConicArrangement& arr, const std::vector<std::size_t>& incident, const Point3& p) {
  std::vector<Point3> grads;
  for (std::size_t i : incident) grads.push_back(arr[i].gradient(p));
  TangentPattern groups;
  std::vector<Point3> lines;
  for (std::size_t idx = 0; idx < incident.size(); ++idx) {
    bool placed = false;
    for (std::size_t g = 0; g < groups.size() && !placed; ++g)
      if (projectively_equal(lines[g], grads[idx])) {
        groups[g].push_back(incident[idx]);
        placed = true;
      }
    if (!placed) {
      groups.push_back({incident[idx]});
      lines.push_back(grads[idx]);
    }
  }
  return groups;
}

}  // namespace

std::vector<SingularPointRecord> locate_singular_points(const ConicArrangement& arr, const LocusOptions& opts) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < arr.size(); ++i)
    for (std::size_t j = i + 1; j < arr.size(); ++j) pairs.emplace_back(i, j);

  auto found = parallel_map(pairs.size(), opts.jobs, [&](std::size_t idx) {
    std::vector<std::pair<OrbitKey, Point3>> out;
    for (const Point3& p : intersect_pair(arr[pairs[idx].first], arr[pairs[idx].second]))
      out.push_back(canonical_orbit(p));
    return out;
  });

  std::map<OrbitKey, Point3> unique;
  for (auto& list : found)
    for (auto& [key, p] : list) unique.emplace(std::move(key), std::move(p));

  std::vector<SingularPointRecord> records;
  for (auto& [key, p] : unique) {
    SingularPointRecord r;
    r.key = key;
    r.point = p;
    r.field = p[r.key.chart].field();
    r.orbit_size = key.minpoly.size() - 1;
    records.push_back(std::move(r));
  }
  return parallel_map(records.size(), opts.jobs, [&](std::size_t idx) {
    SingularPointRecord r = records[idx];
    for (std::size_t i = 0; i < arr.size(); ++i)
      if (arr[i].eval(r.point).is_zero()) r.incident.push_back(i);
    for (std::size_t a = 0; a < r.incident.size(); ++a)
      for (std::size_t b = a + 1; b < r.incident.size(); ++b) {
        std::size_t i = r.incident[a], j = r.incident[b];
        r.pairwise[{i, j}] = intersection_multiplicity(arr[i], arr[j], r.point);
      }
    r.tangents = tangent_pattern(arr, r.incident, r.point);
    return r;
  });
}

SingularityType classify_point(const SingularPointRecord& r) {
  SingularityType t;
  t.multiplicity = static_cast<int>(r.incident.size());
  t.tangents = r.tangents;
  for (const auto& [pair, mult] : r.pairwise) t.max_pairwise = std::max(t.max_pairwise, mult);
  const bool transverse = t.max_pairwise == 1 && r.tangents.size() == r.incident.size();
  if (t.multiplicity == 2) {
    if (t.max_pairwise == 1) t.kind = PointKind::Node;
    else if (t.max_pairwise == 2 && r.tangents.size() == 1) t.kind = PointKind::Tacnode;
  } else if (t.multiplicity == 3 && transverse) {
    t.kind = PointKind::OrdinaryTriple;
  } else if (t.multiplicity == 4 && transverse) {
    t.kind = PointKind::OrdinaryQuadruple;
  }
  return t;
}

bool is_quasi_homogeneous(const SingularPointRecord& r) { return r.milnor == r.tjurina; }

LocusAnalysis weak_combinatorics(const ConicArrangement& arr, const LocusOptions& opts) {
  const HomogeneousForm f = defining_polynomial(arr).form;
  auto located = locate_singular_points(arr, opts);
  LocusAnalysis out;
  out.records = parallel_map(located.size(), opts.jobs, [&](std::size_t idx) {
    SingularPointRecord r = located[idx];
    r.type = classify_point(r);
    r.milnor = local_milnor(f, r.point);
    r.tjurina = local_tjurina(f, r.point);
    r.quasi_homogeneous = is_quasi_homogeneous(r);
    return r;
  });
  WeakCombinatorics& wc = out.combinatorics;
  wc.k = static_cast<long>(arr.size());
  for (const auto& r : out.records) {
    const long w = static_cast<long>(r.orbit_size);
    switch (r.type.kind) {
      case PointKind::Node:
        wc.n2 += w;
        break;
      case PointKind::Tacnode:
        wc.t2 += w;
        break;
      case PointKind::OrdinaryTriple:
        wc.n3 += w;
        break;
      case PointKind::OrdinaryQuadruple:
        wc.n4 += w;
        break;
      case PointKind::Other:
        wc.other += w;
        break;
    }
  }
  out.q_flag = wc.other == 0;
  return out;
}

long total_tjurina(const std::vector<SingularPointRecord>& records) {
  long s = 0;
  for (const auto& r : records) s += static_cast<long>(r.orbit_size) * r.tjurina;
  return s;
}

}  // namespace qconic
