#include "qconic/local_algebra.hpp"

#include <map>

#include "qconic/error.hpp"
#include "qconic/linalg.hpp"

namespace qconic {

std::size_t chart_of(const Point3& p) {
  for (std::size_t i = 3; i-- > 0;)
    if (!p[i].is_zero()) return i;
  throw std::invalid_argument("the zero vector is not a projective point");
}

Point3 normalize(const Point3& p) {
  std::size_t k = chart_of(p);
  FieldElement inv = p[k].inverse();
  return {p[0] * inv, p[1] * inv, p[2] * inv};
}

bool projectively_equal(const Point3& a, const Point3& b) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

AffinePolynomial localize(const HomogeneousForm& f, const Point3& point) {
  const Point3 p = normalize(point);
  const std::size_t k = chart_of(p);
  // base[var] is the substitution for projective coordinate `var`.
  std::array<AffinePolynomial, 3> base;
  std::size_t local = 0;
  for (std::size_t var = 0; var < 3; ++var) {
    if (var == k) {
      base[var] = AffinePolynomial::constant(FieldElement(1));
    } else {
      base[var] = AffinePolynomial::variable(local++) + AffinePolynomial::constant(p[var]);
    }
  }
  std::array<std::vector<AffinePolynomial>, 3> powers;
  for (std::size_t var = 0; var < 3; ++var) {
    powers[var].push_back(AffinePolynomial::constant(FieldElement(1)));
    for (int e = 1; e <= f.degree(); ++e) powers[var].push_back(powers[var].back() * base[var]);
  }
  AffinePolynomial out;
  for (const auto& [m, c] : f.poly().terms()) {
    AffinePolynomial t = FieldElement(c) * powers[0][static_cast<std::size_t>(m[0])];
    t = t * powers[1][static_cast<std::size_t>(m[1])];
    out = out + t * powers[2][static_cast<std::size_t>(m[2])];
  }
  return out;
}

namespace {

// Position of u^a v^b among monomials of degree < N, graded then by b.
std::size_t local_index(int a, int b) {
  int s = a + b;
  return static_cast<std::size_t>(s * (s + 1) / 2 + b);
}

std::size_t truncated_codimension(const std::vector<AffinePolynomial>& gens, int n) {
  const std::size_t dim = static_cast<std::size_t>(n * (n + 1) / 2);
  EchelonBasis<FieldElement> basis(dim);
  for (const AffinePolynomial& h : gens) {
    for (int s = 0; s < n; ++s)
      for (int j = 0; j <= s; ++j) {
        const int i = s - j;
        std::vector<FieldElement> row(dim);
        bool any = false;
        for (const auto& [m, c] : h.terms()) {
          if (m[0] + m[1] + s >= n) continue;
          row[local_index(m[0] + i, m[1] + j)] = c;
          any = true;
        }
        if (any) basis.insert(std::move(row));
      }
  }
  return dim - basis.rank();
}

FieldElement value_at_origin(const AffinePolynomial& g) { return g.coeff({0, 0}); }

}  // namespace

std::size_t local_dimension(const std::vector<AffinePolynomial>& gens, int cap) {
  std::size_t prev = truncated_codimension(gens, 1);
  for (int n = 2; n <= cap; ++n) {
    std::size_t cur = truncated_codimension(gens, n);
    if (cur == prev) return cur;
    prev = cur;
  }
  throw NonIsolated("local algebra did not stabilize below truncation degree " + std::to_string(cap));
}

namespace {

struct LocalData {
  AffinePolynomial g, gu, gv;
};

LocalData singular_local_data(const HomogeneousForm& f, const Point3& p) {
  LocalData d;
  d.g = localize(f, p);
  d.gu = d.g.derivative(0);
  d.gv = d.g.derivative(1);
  if (!value_at_origin(d.g).is_zero()) throw NotSingular("point is not on the curve");
  if (!value_at_origin(d.gu).is_zero() || !value_at_origin(d.gv).is_zero())
    throw NotSingular("point is a smooth point of the curve");
  return d;
}

int milnor_cap(const HomogeneousForm& f) { return (f.degree() - 1) * (f.degree() - 1) + 2; }

}  // namespace

int local_milnor(const HomogeneousForm& f, const Point3& p) {
  LocalData d = singular_local_data(f, p);
  return static_cast<int>(local_dimension({d.gu, d.gv}, milnor_cap(f)));
}

int local_tjurina(const HomogeneousForm& f, const Point3& p) {
  LocalData d = singular_local_data(f, p);
  return static_cast<int>(local_dimension({d.g, d.gu, d.gv}, milnor_cap(f)));
}

int local_intersection_number(const HomogeneousForm& f, const HomogeneousForm& g, const Point3& p) {
  AffinePolynomial a = localize(f, p), b = localize(g, p);
  if (!value_at_origin(a).is_zero() || !value_at_origin(b).is_zero())
    throw PointNotOnBoth("point does not lie on both curves");
  return static_cast<int>(local_dimension({a, b}, f.degree() * g.degree() + 2));
}

int intersection_multiplicity(const Conic& ci, const Conic& cj, const Point3& p) {
  return local_intersection_number(ci.form(), cj.form(), p);
}

}  // namespace qconic
